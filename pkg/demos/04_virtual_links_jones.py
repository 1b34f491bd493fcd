"""Virtual link diagrams, Kauffman bracket, Jones, and Tait graphs.

Gauss codes are realized in the plane; crossings the code forces outside
the plane become virtual crossings, which later turn into 0-edges of the
Tait graph.
"""

from rgpoly import (
    jones,
    kauffman_bracket,
    link_to_tait,
    realize_gauss_code,
    relative_tutte,
    writhe,
)

print("The right trefoil from its Gauss code:")
L = realize_gauss_code("O1+U2+O3+U1+O2+U3+")
print(" ", repr(L))
print("  writhe:", writhe(L))
print("  bracket:", kauffman_bracket(L))
print("  Jones:", jones(L))

print("The virtual trefoil cannot be drawn classically:")
V = realize_gauss_code("O1+O2+U1+U2+")
print(" ", repr(V))
print("  Jones:", jones(V), "(note the half-integer exponents)")

print("Its Tait graph keeps one 0-edge per virtual crossing:")
G = link_to_tait(V)
print(" ", G)
print("  relative Tutte of the Tait graph:", relative_tutte(G))
