import random

import pytest

from rgpoly.errors import MalformedPresentation, SizeLimit
from rgpoly.poly import Polynomial, monomial, var
from rgpoly.ribbon import (
    RibbonGraph,
    arrow_presentation,
    bollobas_riordan,
    boundary_components,
    components,
    from_arrow_presentation,
    make_edge,
    nullity,
)


def loop_graph(sign=1):
    return RibbonGraph(
        [("a", "b")], [make_edge("a", "b", sign=sign, label="e")])


def path_graph():
    return RibbonGraph([("a",), ("b",)], [make_edge("a", "b", label="e")])


def triangle():
    edges = [
        make_edge("a1", "b1", label="e1"),
        make_edge("b2", "c1", label="e2"),
        make_edge("c2", "a2", label="e3"),
    ]
    return RibbonGraph([("a1", "a2"), ("b1", "b2"), ("c1", "c2")], edges)


def random_ribbon(rng, n_edges, n_vertices=None):
    if n_vertices is None:
        n_vertices = rng.randint(1, max(1, n_edges))
    rotations = [[] for _ in range(n_vertices)]
    edges = []
    for i in range(n_edges):
        ends = []
        for j in range(2):
            h = f"h{i}_{j}"
            v = rng.randrange(n_vertices)
            rotations[v].insert(rng.randint(0, len(rotations[v])), h)
            ends.append(h)
        edges.append(make_edge(*ends, sign=rng.choice([1, -1]), label=f"e{i}"))
    return RibbonGraph(rotations, edges)


def test_components_examples():
    assert components(RibbonGraph([("x",) * 0], []), []) == 1
    assert components(path_graph(), [0]) == 1
    assert components(RibbonGraph([()] * 5, []), []) == 5


def test_nullity_examples():
    assert nullity(loop_graph(), [0]) == 1
    tri = triangle()
    for F in ([], [0], [1], [0, 1]):
        assert nullity(tri, F) == 0  # forests
    assert nullity(tri, [0, 1, 2]) == 1


def test_boundary_components_examples():
    assert boundary_components(RibbonGraph([()], []), []) == 1
    assert boundary_components(loop_graph(1), [0]) == 2  # annulus
    assert boundary_components(loop_graph(-1), [0]) == 1  # Moebius band
    assert boundary_components(loop_graph(), []) == 1


def test_bc_empty_subset_counts_vertices():
    rng = random.Random(7)
    for _ in range(20):
        R = random_ribbon(rng, rng.randint(0, 5))
        assert boundary_components(R, []) == R.num_vertices


def test_euler_genus_quantity_nonnegative():
    rng = random.Random(3)
    for _ in range(50):
        R = random_ribbon(rng, rng.randint(0, 6))
        m = R.num_edges
        for mask in range(1 << m):
            F = [i for i in range(m) if mask >> i & 1]
            k = components(R, F)
            n = nullity(R, F)
            bc = boundary_components(R, F)
            assert k - bc + n >= 0
            if all(R.edges[i].sign == 1 for i in F):
                # orientable subgraph: 2 - 2g is even
                assert (k - bc + n) % 2 == 0


def test_bollobas_riordan_untwisted_loop():
    x, y, Y = var("x_e"), var("y_e"), var("Y")
    assert bollobas_riordan(loop_graph(1)) == y + x * Y


def test_bollobas_riordan_twisted_loop():
    x, y, Y, Z = var("x_e"), var("y_e"), var("Y"), var("Z")
    assert bollobas_riordan(loop_graph(-1)) == y + x * Y * Z


def test_bollobas_riordan_single_edge_unit_weights():
    R = RibbonGraph(
        [("a",), ("b",)],
        [make_edge("a", "b", label="e", x=Polynomial.const(1), y=Polynomial.const(1))])
    assert bollobas_riordan(R) == 1 + var("X")


def test_bollobas_riordan_rotation_invariance():
    rng = random.Random(11)
    for _ in range(20):
        R = random_ribbon(rng, rng.randint(1, 5))
        rotated = [v[1:] + v[:1] if v else v for v in R.vertices]
        R2 = RibbonGraph(rotated, R.edges)
        assert bollobas_riordan(R) == bollobas_riordan(R2)


def test_size_limit():
    rng = random.Random(0)
    R = random_ribbon(rng, 5)
    with pytest.raises(SizeLimit):
        bollobas_riordan(R, cap=4)


def test_arrow_presentation_loops():
    ap = arrow_presentation(loop_graph(1))
    assert len(ap.circles) == 1
    (c,) = ap.circles
    assert [lab for lab, _ in c] == ["e", "e"]
    assert c[0][1] == c[1][1]  # same direction

    ap = arrow_presentation(loop_graph(-1))
    (c,) = ap.circles
    assert c[0][1] != c[1][1]  # opposite directions


def test_arrow_round_trip_polynomial():
    rng = random.Random(5)
    for _ in range(15):
        R = random_ribbon(rng, 5)
        R2 = from_arrow_presentation(arrow_presentation(R))
        assert bollobas_riordan(R2) == bollobas_riordan(R)


def test_malformed_presentation():
    from rgpoly.ribbon import ArrowPresentation
    with pytest.raises(MalformedPresentation):
        from_arrow_presentation(ArrowPresentation([[("e", True)]]))
