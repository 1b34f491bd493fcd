import random

import pytest

from rgpoly.errors import GenusError, ParseError
from rgpoly.formats import (
    parse_ribbon,
    parse_rpg,
    parse_vld,
    serialize_ribbon,
    serialize_rpg,
    serialize_vld,
)
from rgpoly.links import jones, kauffman_bracket, writhe
from rgpoly.planemap import relative_tutte
from rgpoly.poly import parse
from rgpoly.ribbon import bollobas_riordan
from rgpoly.verify import generate


def test_minimal_ribbon_file():
    R = parse_ribbon("# a loop\nvertex v: a b\nedge e: a b sign=+\n")
    assert R.num_vertices == 1
    assert R.num_edges == 1
    assert R.edges[0].sign == 1
    assert bollobas_riordan(R) == parse("x_e*Y + y_e")


def test_ribbon_weights_and_sign():
    R = parse_ribbon("vertex v: a b\nedge e: a b sign=- x=3*t y=1\n")
    assert R.edges[0].sign == -1
    assert R.edges[0].x == parse("3*t")
    assert R.edges[0].y == parse("1")


def test_rpg_genus_rejection_names_deficit():
    text = "vertex v: a1 b1 a2 b2\nedge a: a1 a2\nedge b: b1 b2\n"
    with pytest.raises(GenusError, match="Euler deficit"):
        parse_rpg(text)


def test_vld_explicit_kink():
    # positive kink: rotation (W,S,E,N), over W,E; arcs E-S and N-W
    text = (
        "crossing c: kind=classical ends=w s e n over=w,e\n"
        "arc p: c.e c.s\n"
        "arc q: c.n c.w\n"
        "orient p: +\n"
    )
    L = parse_vld(text)
    assert len(L.classical) == 1
    assert kauffman_bracket(L) in (parse("A*d + B"), parse("A + B*d"))
    assert abs(writhe(L)) == 1


def test_vld_gauss_line():
    L = parse_vld("gauss O1+U2+O3+U1+O2+U3+\n")
    assert jones(L) == parse("-t^4 + t^3 + t")
    with pytest.raises(ParseError):
        parse_vld("gauss O1+U2+O3+U1+O2+U3+\ncrossing c: kind=virtual ends=a b c d\n")


def test_parse_errors_name_the_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_ribbon("vertex v: a b\nedge e a b\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_rpg("edge e: a b kind=weird\n")
    with pytest.raises(ParseError):
        parse_vld("crossing c: kind=classical ends=a b c\n")


def test_round_trips_on_random_instances():
    rng = random.Random(17)
    for trial in range(50):
        seed, size = rng.randrange(10**6), rng.randint(0, 5)
        R = generate("ribbon", seed, size)
        assert bollobas_riordan(parse_ribbon(serialize_ribbon(R))) == \
            bollobas_riordan(R)
        G = generate("rpg", seed, size)
        G2 = parse_rpg(serialize_rpg(G))
        assert relative_tutte(G2) == relative_tutte(G)
        assert G2.signs == G.signs
        L = generate("link", seed, min(size, 4))
        if L.free_loops:
            continue
        L2 = parse_vld(serialize_vld(L))
        assert kauffman_bracket(L2) == kauffman_bracket(L)
        assert writhe(L2) == writhe(L)
