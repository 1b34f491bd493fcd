"""Ribbon graphs and the doubly weighted Bollobas-Riordan polynomial.

A ribbon graph is a rotation system (cyclic half-edge order per vertex)
plus a +-1 twist sign per edge.  The Bollobas-Riordan polynomial sums over
all edge subsets, tracking components, nullity and boundary components of
the induced ribbon subgraph.
"""

from rgpoly import (
    RibbonGraph,
    arrow_presentation,
    bollobas_riordan,
    boundary_components,
    make_edge,
)

print("An untwisted loop on one vertex (an annulus):")
annulus = RibbonGraph([("a", "b")], [make_edge("a", "b", sign=1, label="e")])
print("  boundary components:", boundary_components(annulus, [0]))
print("  B =", bollobas_riordan(annulus))

print("A twisted loop (a Moebius band) has a single boundary circle:")
moebius = RibbonGraph([("a", "b")], [make_edge("a", "b", sign=-1, label="e")])
print("  boundary components:", boundary_components(moebius, [0]))
print("  B =", bollobas_riordan(moebius))
print("  The Z-variable records the extra genus of the twisted subgraph.")

print("Two interleaved loops on one vertex (a torus):")
torus = RibbonGraph([("a1", "b1", "a2", "b2")],
                    [make_edge("a1", "a2", label="e1"),
                     make_edge("b1", "b2", label="e2")])
print("  B =", bollobas_riordan(torus))

print("Every ribbon graph also has an arrow presentation:")
ap = arrow_presentation(moebius)
for circle in ap.circles:
    print("  circle:", " ".join(f"{lab}{'>' if fwd else '<'}" for lab, fwd in circle))
