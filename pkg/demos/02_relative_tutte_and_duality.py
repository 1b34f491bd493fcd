"""The relative Tutte polynomial of a plane graph with 0-edges, and duality.

0-edges are never deleted or contracted by the state sum; after
contracting a subset F of regular edges they remain as the graph H_F,
weighted by psi(H_F) = d^(delta-k) * w^(v-k) where delta counts the
straight-ahead circles of the medial tracing.
"""

from rgpoly import (
    MapEdge,
    PlaneMap,
    RelPlaneGraph,
    dual,
    medial_circles,
    relative_tutte,
)

print("Two vertices joined by a regular edge and a 0-edge:")
M = PlaneMap([("e0", "h0"), ("e1", "h1")],
             [MapEdge(("e0", "e1"), "e"), MapEdge(("h0", "h1"), "h")])
G = RelPlaneGraph(M, zero={1})
print("  T =", relative_tutte(G))
print("  (the w tracks the surviving 0-edge of the empty subset)")

print("With no 0-edges the polynomial is the Whitney rank polynomial;")
print("for a triangle with unit weights it is the classical T(x,y) shifted:")
tri = PlaneMap([("a0", "c1"), ("b0", "a1"), ("c0", "b1")],
               [MapEdge(("a0", "a1"), "a"), MapEdge(("b0", "b1"), "b"),
                MapEdge(("c0", "c1"), "c")])
from rgpoly.poly import ONE
T = relative_tutte(RelPlaneGraph(tri, weights={i: (ONE, ONE) for i in range(3)}))
print("  T(triangle) =", T)

print("Planar duality swaps the weight pair of every edge:")
Gs = dual(G)
print("  dual has", Gs.map.num_vertices, "vertices; weights:", Gs.weights)
print("  medial circles of the primal:", medial_circles(M))
print("  dual(dual) preserves T:", relative_tutte(dual(Gs)) == relative_tutte(G))
