import random

from rgpoly.convert import link_to_tait, plane_to_ribbon, ribbon_to_plane
from rgpoly.planemap import MapEdge, PlaneMap, RelPlaneGraph, relative_tutte
from rgpoly.poly import ONE, var
from rgpoly.ribbon import RibbonGraph, bollobas_riordan, make_edge
from rgpoly.links import realize_gauss_code
from rgpoly.router import route
from rgpoly.verify import generate_ribbon


def test_untwisted_loop_to_plane():
    R = RibbonGraph([("a", "b")], [make_edge("a", "b", label="e")])
    G, cert = ribbon_to_plane(R)
    assert G.map.num_vertices == 1
    assert G.map.num_edges == 1
    assert G.zero == frozenset()
    assert cert.g_to_r == {0: 0}
    assert G.weights[0] == (R.edges[0].x, R.edges[0].y)


def test_twisted_loop_to_plane():
    R = RibbonGraph([("a", "b")], [make_edge("a", "b", sign=-1, label="e")])
    G, _ = ribbon_to_plane(R)
    assert G.map.num_vertices == 2
    assert G.map.num_edges == 2
    assert len(G.zero) == 1
    assert relative_tutte(G) == var("x_e") + var("y_e") * var("w")


def test_gadget_accounting():
    # |H| = 4c + tau: one 0-edge per twist plus a quadrilateral per crossing
    rng = random.Random(2)
    for trial in range(25):
        R = generate_ribbon(rng, rng.randint(0, 6))
        tau = sum(1 for e in R.edges if e.sign < 0)
        rd = route([list(v) for v in R.vertices],
                   [tuple(e.ends) for e in R.edges],
                   [["reg"] + (["twist"] if e.sign < 0 else []) for e in R.edges])
        c = len(rd.crossing_vertices)
        G, cert = ribbon_to_plane(R)
        assert len(G.zero) == 4 * c + tau
        assert sorted(cert.g_to_r.values()) == list(range(R.num_edges))


def test_plane_to_ribbon_loop():
    M = PlaneMap([("a", "b")], [MapEdge(("a", "b"), "e")])
    R = plane_to_ribbon(RelPlaneGraph(M))
    assert R.num_vertices == 1
    assert len(R.edges) == 1
    assert R.edges[0].sign == 1


def test_plane_to_ribbon_zero_path():
    M = PlaneMap([("e0", "h0"), ("e1", "h1")],
                 [MapEdge(("e0", "e1"), "e"), MapEdge(("h0", "h1"), "h")])
    R = plane_to_ribbon(RelPlaneGraph(M, zero={1}))
    assert R.num_vertices == 1
    assert len(R.edges) == 1
    assert R.edges[0].sign == -1


def test_round_trip_preserves_bollobas_riordan():
    rng = random.Random(4)
    for trial in range(30):
        R = generate_ribbon(rng, rng.randint(0, 6))
        G, _ = ribbon_to_plane(R)
        back = plane_to_ribbon(G)
        assert bollobas_riordan(back) == bollobas_riordan(R)


def test_tait_of_unknot():
    G = link_to_tait(realize_gauss_code(""))
    assert G.map.num_vertices == 1
    assert G.map.num_edges == 0


def test_tait_of_kink():
    G = link_to_tait(realize_gauss_code("O1+U1+"))
    assert G.map.num_edges == 1
    assert G.zero == frozenset()
    assert set(G.signs.values()) <= {1, -1}
    ends = G.map.edges[0].ends
    # single crossing: the regular edge is a loop or a bridge
    assert G.map.vertex_of(ends[0]) in range(G.map.num_vertices)


def test_tait_weights_by_sign():
    L = realize_gauss_code("O1+U2-O2-U1+")
    G = link_to_tait(L)
    for i in G.regular_indices():
        if G.signs[i] > 0:
            assert G.weights[i] == (ONE, ONE)
        else:
            assert G.weights[i] == (var("x_minus"), var("y_minus"))


def test_tait_virtual_crossings_become_zero_edges():
    L = realize_gauss_code("O1+O2+U1+U2+")
    G = link_to_tait(L)
    n_virtual = L.map.num_vertices - len(L.classical)
    assert len(G.zero) == n_virtual
    assert len(G.regular_indices()) == len(L.classical)
