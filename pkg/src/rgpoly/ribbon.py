"""Ribbon graphs as signed rotation systems.

A ribbon graph is a surface built from vertex-discs and edge-ribbons; here
it is stored combinatorially as a cyclic order of half-edges around every
vertex plus a sign per edge (-1 for a half-twisted ribbon).  The module
computes connected components, nullity and boundary components of spanning
subgraphs, the doubly weighted Bollobas-Riordan polynomial, and converts
to and from arrow presentations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MalformedPresentation, SizeLimit
from .poly import ONE, Polynomial, monomial, var
from .util import UnionFind, count_cycles

DEFAULT_EDGE_CAP = 24


@dataclass(frozen=True)
class Edge:
    """An edge-ribbon: an unordered pair of half-edges plus sign and weights."""

    ends: tuple
    sign: int
    x: Polynomial
    y: Polynomial
    label: str


def make_edge(h1, h2, sign=1, label=None, x=None, y=None) -> Edge:
    if label is None:
        label = f"{h1}{h2}"
    if sign not in (1, -1):
        raise ValueError(f"edge sign must be +1 or -1, got {sign}")
    if x is None:
        x = var(f"x_{label}")
    if y is None:
        y = var(f"y_{label}")
    return Edge((h1, h2), sign, x, y, label)


class RibbonGraph:
    """Signed rotation system: vertices are cyclic half-edge sequences."""

    def __init__(self, vertices: Sequence[Sequence], edges: Sequence[Edge]):
        self.vertices = [tuple(v) for v in vertices]
        self.edges = list(edges)
        self._validate()

    def _validate(self):
        placed = [h for v in self.vertices for h in v]
        if len(placed) != len(set(placed)):
            raise ValueError("a half-edge occurs more than once in the rotation system")
        matched = [h for e in self.edges for h in e.ends]
        if sorted(map(repr, matched)) != sorted(map(repr, placed)):
            raise ValueError("edge ends are not a perfect matching on the half-edges")
        if len(matched) != len(set(matched)):
            raise ValueError("a half-edge occurs in more than one edge")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertex_of(self, h) -> int:
        for i, v in enumerate(self.vertices):
            if h in v:
                return i
        raise KeyError(h)

    def all_edges(self) -> frozenset:
        return frozenset(range(len(self.edges)))

    def __repr__(self):
        return f"RibbonGraph(v={self.num_vertices}, e={self.num_edges})"


def components(R: RibbonGraph, subset: Iterable[int]) -> int:
    """Number of connected components of the spanning subgraph on ``subset``."""
    uf = UnionFind(range(R.num_vertices))
    home = {h: i for i, v in enumerate(R.vertices) for h in v}
    for ei in subset:
        h1, h2 = R.edges[ei].ends
        uf.union(home[h1], home[h2])
    return uf.count


def nullity(R: RibbonGraph, subset: Iterable[int]) -> int:
    """|F| - v + k(F) for the spanning subgraph on ``subset``."""
    subset = list(subset)
    return len(subset) - R.num_vertices + components(R, subset)


def boundary_components(R: RibbonGraph, subset: Iterable[int]) -> int:
    """Boundary walks of the surface with all vertex-discs and only F's ribbons.

    Each half-edge carries two side slots; disc arcs join slots of
    consecutive half-edges in the (restricted) rotation, and a ribbon joins
    its partner slots crosswise when untwisted and directly when twisted.
    """
    subset = set(subset)
    in_sub = {h for ei in subset for h in R.edges[ei].ends}
    arc = {}
    isolated = 0
    for cycle in R.vertices:
        rot = [h for h in cycle if h in in_sub]
        if not rot:
            isolated += 1
            continue
        m = len(rot)
        for i, h in enumerate(rot):
            arc[(h, 1)] = (rot[(i + 1) % m], 0)
            arc[(rot[(i + 1) % m], 0)] = (h, 1)
    rib = {}
    for ei in subset:
        e = R.edges[ei]
        h1, h2 = e.ends
        if e.sign == 1:
            rib[(h1, 0)] = (h2, 1)
            rib[(h2, 1)] = (h1, 0)
            rib[(h1, 1)] = (h2, 0)
            rib[(h2, 0)] = (h1, 1)
        else:
            rib[(h1, 0)] = (h2, 0)
            rib[(h2, 0)] = (h1, 0)
            rib[(h1, 1)] = (h2, 1)
            rib[(h2, 1)] = (h1, 1)
    return isolated + count_cycles(arc, rib)


def bollobas_riordan(R: RibbonGraph, cap: int = DEFAULT_EDGE_CAP) -> Polynomial:
    """The doubly weighted Bollobas-Riordan polynomial in X, Y, Z.

    Sums over all 2^|E| spanning subgraphs F the term
    (prod_{e in F} x_e)(prod_{e not in F} y_e)
    X^(k(F)-k(R)) Y^(n(F)) Z^(k(F)-bc(F)+n(F)).
    """
    m = R.num_edges
    if m > cap:
        raise SizeLimit(f"{m} edges exceeds the enumeration cap {cap}")
    kR = components(R, range(m))
    total = Polynomial.const(0)
    for mask in range(1 << m):
        subset = [i for i in range(m) if mask >> i & 1]
        k = components(R, subset)
        n = len(subset) - R.num_vertices + k
        bc = boundary_components(R, subset)
        weight = ONE
        for i, e in enumerate(R.edges):
            weight = weight * (e.x if mask >> i & 1 else e.y)
        total = total + weight * monomial(
            1, {"X": k - kR, "Y": n, "Z": k - bc + n})
    return total


# -- arrow presentations ---------------------------------------------


@dataclass
class ArrowPresentation:
    """Circles carrying directed arrow occurrences, two per edge label.

    ``circles`` is a list of cyclic sequences of (label, direction) pairs;
    the direction flag records whether the arrow points along the circle's
    traversal.  ``weights`` and ``signsource`` travel alongside so a ribbon
    graph can be rebuilt with the same edge data.
    """

    circles: list
    weights: dict = field(default_factory=dict)

    def labels(self):
        out = {}
        for ci, circle in enumerate(self.circles):
            for pos, (label, direction) in enumerate(circle):
                out.setdefault(label, []).append((ci, pos, direction))
        return out


def arrow_presentation(R: RibbonGraph) -> ArrowPresentation:
    """One circle per vertex-disc, arrows at the attachment arcs.

    The two arrows of an untwisted edge point the same way along their
    circles; a twisted edge reverses one of them.
    """
    flag = {}
    weights = {}
    for e in R.edges:
        h1, h2 = e.ends
        flag[h1] = True
        flag[h2] = e.sign == 1
        weights[e.label] = (e.x, e.y)
    circles = []
    label_of = {h: e.label for e in R.edges for h in e.ends}
    for cycle in R.vertices:
        circles.append([(label_of[h], flag[h]) for h in cycle])
    return ArrowPresentation(circles, weights)


def from_arrow_presentation(a: ArrowPresentation) -> RibbonGraph:
    """Rebuild the ribbon graph: circles become vertex-discs, arrow pairs edges."""
    occurrences = a.labels()
    vertices = []
    for ci, circle in enumerate(a.circles):
        vertices.append(tuple((ci, pos) for pos in range(len(circle))))
    edges = []
    for label in sorted(occurrences, key=repr):
        occ = occurrences[label]
        if len(occ) != 2:
            raise MalformedPresentation(
                f"label {label!r} occurs {len(occ)} times, expected 2")
        (c1, p1, d1), (c2, p2, d2) = occ
        sign = 1 if d1 == d2 else -1
        x, y = a.weights.get(label, (None, None))
        edges.append(make_edge((c1, p1), (c2, p2), sign=sign, label=str(label),
                               x=x, y=y))
    return RibbonGraph(vertices, edges)
