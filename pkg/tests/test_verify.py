import random

from rgpoly.convert import ribbon_to_plane
from rgpoly.poly import parse
from rgpoly.ribbon import RibbonGraph, make_edge
from rgpoly.verify import (
    CheckReport,
    check_main_theorem,
    check_subset_identities,
    generate,
    run_suite,
)


def test_generators_are_deterministic():
    for kind in ("ribbon", "rpg", "link"):
        a = generate(kind, 1, 4)
        b = generate(kind, 1, 4)
        assert repr(a) == repr(b)
        if kind == "ribbon":
            assert a.vertices == b.vertices
            assert [e.ends for e in a.edges] == [e.ends for e in b.edges]


def test_generator_postconditions():
    rng = random.Random(0)
    for trial in range(20):
        seed, size = rng.randrange(10**6), rng.randint(0, 6)
        G = generate("rpg", seed, size)
        G.map.require_plane()
        L = generate("link", seed, min(size, 4))
        assert all(len(c) == 4 for c in L.map.vertices)


def test_main_theorem_loop_cases():
    plain = RibbonGraph([("a", "b")], [make_edge("a", "b", label="e")])
    rep = check_main_theorem(plain)
    assert rep.passed
    assert parse(rep.left) == parse("x_e*Y + y_e")
    twisted = RibbonGraph([("a", "b")], [make_edge("a", "b", sign=-1, label="e")])
    rep = check_main_theorem(twisted)
    assert rep.passed
    assert parse(rep.left) == parse("y_e + x_e*X^(-1/2)*Y^(1/2)")


def test_subset_identities_small():
    R = RibbonGraph([("a", "b", "c", "d")],
                    [make_edge("a", "c", sign=-1, label="e0"),
                     make_edge("b", "d", label="e1")])
    G, cert = ribbon_to_plane(R)
    assert check_subset_identities(R, G, cert).passed


def test_report_line_format():
    rep = CheckReport("main_theorem", "inst", True, seed=12)
    assert rep.line(5) == "PASS main_theorem seed=12 size=5"
    rep = CheckReport("duality", "inst", False, seed=3)
    assert rep.line(2) == "FAIL duality seed=3 size=2"


def test_run_suite_all_checks_pass():
    reports = list(run_suite(["main", "identities", "duality", "bracket"],
                             count=6, seed=42, max_size=4))
    assert len(reports) == 24
    assert all(rep.passed for rep, _ in reports)


def test_failures_reproduce_from_seed():
    first = [(r.name, r.passed, r.seed, s)
             for r, s in run_suite(["duality"], 4, 11, 4)]
    second = [(r.name, r.passed, r.seed, s)
              for r, s in run_suite(["duality"], 4, 11, 4)]
    assert first == second
