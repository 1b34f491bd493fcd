"""Converting between ribbon graphs and relative plane graphs.

ribbon_to_plane draws the ribbon graph with a layered combinatorial
router; each strand crossing becomes a quadrilateral of 0-edges, each
twist one 0-edge, and each edge keeps one weighted regular edge.  The
main identity X^alpha Y^beta T_{G,H} = B_R(X, Y, 1/sqrt(XY)) certifies
every conversion; plane_to_ribbon inverts it through the medial circles.
"""

from fractions import Fraction

from rgpoly import (
    RibbonGraph,
    bollobas_riordan,
    make_edge,
    monomial,
    plane_to_ribbon,
    relative_tutte,
    ribbon_to_plane,
)

R = RibbonGraph([("a1", "b1", "a2", "b2")],
                [make_edge("a1", "a2", sign=-1, label="e1"),
                 make_edge("b1", "b2", label="e2")])
print("Ribbon graph: one vertex, a twisted and an untwisted interleaved loop")
G, cert = ribbon_to_plane(R)
print("  plane graph:", G)
print("  certificate:", cert.label_pairs(G, R))

T = relative_tutte(G).subs({
    "d": monomial(1, {"X": Fraction(1, 2), "Y": Fraction(1, 2)}),
    "w": monomial(1, {"X": Fraction(1, 2), "Y": Fraction(-1, 2)}),
})
B = bollobas_riordan(R).subs(
    {"Z": monomial(1, {"X": Fraction(-1, 2), "Y": Fraction(-1, 2)})})
beta = Fraction(-(R.num_vertices - G.map.num_vertices), 2)
alpha = G.map.components() - 1 - beta   # both graphs are connected here
lhs = monomial(1, {"X": alpha, "Y": beta}) * T
print("  main identity holds:", lhs == B)

back = plane_to_ribbon(G)
print("  round trip preserves B:", bollobas_riordan(back) == bollobas_riordan(R))
