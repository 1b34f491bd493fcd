"""Genus-0 combinatorial maps and the relative Tutte polynomial.

A plane map is an untwisted rotation system whose face count satisfies the
Euler relation v - e + f = 2k.  On top of it sit relative plane graphs: a
marked subset H of 0-edges, weights on the remaining (regular) edges, and
the all-subset relative Tutte polynomial whose contracted remainders are
weighted by psi = d^(delta-k) * w^(v-k), with delta counting the circles
immersing to the medial graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import GenusError, SizeLimit
from .poly import ONE, Polynomial, monomial, var
from .ribbon import DEFAULT_EDGE_CAP
from .util import UnionFind, count_cycles


@dataclass(frozen=True)
class MapEdge:
    ends: tuple
    label: str


class PlaneMap:
    """Rotation system with untwisted edges."""

    def __init__(self, vertices: Sequence[Sequence], edges: Sequence[MapEdge]):
        self.vertices = [tuple(v) for v in vertices]
        self.edges = list(edges)
        self._home = {h: i for i, v in enumerate(self.vertices) for h in v}
        self._validate()

    def _validate(self):
        placed = [h for v in self.vertices for h in v]
        if len(placed) != len(self._home):
            raise ValueError("a half-edge occurs more than once in the rotation system")
        matched = [h for e in self.edges for h in e.ends]
        if len(matched) != len(set(matched)) or set(matched) != set(placed):
            raise ValueError("edge ends are not a perfect matching on the half-edges")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertex_of(self, h) -> int:
        return self._home[h]

    def components(self, subset: Iterable[int] | None = None) -> int:
        uf = UnionFind(range(self.num_vertices))
        indices = range(self.num_edges) if subset is None else subset
        for ei in indices:
            h1, h2 = self.edges[ei].ends
            uf.union(self._home[h1], self._home[h2])
        return uf.count

    def euler_deficit(self) -> int:
        """v - e + f - 2k; zero exactly for genus-0 maps."""
        f = len(faces(self))
        return self.num_vertices - self.num_edges + f - 2 * self.components()

    def require_plane(self):
        deficit = self.euler_deficit()
        if deficit:
            raise GenusError(
                f"rotation system is not genus 0: Euler deficit {deficit}")

    def __repr__(self):
        return f"PlaneMap(v={self.num_vertices}, e={self.num_edges})"


def faces(M: PlaneMap) -> list[list]:
    """Face walks: cycles of the next-dart map d -> rotation-next of partner(d).

    Isolated vertices contribute singleton walks ("iso", vertex index).
    """
    partner = {}
    for e in M.edges:
        h1, h2 = e.ends
        partner[h1] = h2
        partner[h2] = h1
    succ = {}
    for cycle in M.vertices:
        m = len(cycle)
        for i, h in enumerate(cycle):
            succ[h] = cycle[(i + 1) % m]
    walks = []
    seen = set()
    for cycle in M.vertices:
        for start in cycle:
            if start in seen:
                continue
            walk = []
            h = start
            while True:
                walk.append(h)
                seen.add(h)
                h = succ[partner[h]]
                if h == start:
                    break
            walks.append(walk)
    for i, cycle in enumerate(M.vertices):
        if not cycle:
            walks.append([("iso", i)])
    return walks


def delete(M: PlaneMap, ei: int) -> PlaneMap:
    """Remove edge ``ei`` from the map, keeping all vertices."""
    dropped = set(M.edges[ei].ends)
    vertices = [tuple(h for h in v if h not in dropped) for v in M.vertices]
    edges = [e for i, e in enumerate(M.edges) if i != ei]
    return PlaneMap(vertices, edges)


def contract(M: PlaneMap, ei: int) -> PlaneMap:
    """Contract a non-loop edge by splicing the end rotations; a loop is deleted."""
    h1, h2 = M.edges[ei].ends
    u, v = M.vertex_of(h1), M.vertex_of(h2)
    if u == v:
        return delete(M, ei)
    cu, cv = list(M.vertices[u]), list(M.vertices[v])
    iu, iv = cu.index(h1), cv.index(h2)
    merged = tuple(cu[iu + 1:] + cu[:iu] + cv[iv + 1:] + cv[:iv])
    vertices = [merged if i == u else tuple(c)
                for i, c in enumerate(M.vertices) if i != v]
    edges = [e for i, e in enumerate(M.edges) if i != ei]
    return PlaneMap(vertices, edges)


def medial_circles(M: PlaneMap) -> int:
    """Circles of the straight-ahead ("crossed lines") tracing of the map.

    The tracing follows boundary sides along vertex rotations and keeps the
    same side when traversing an edge, so the two strands cross over each
    edge midpoint.  An isolated vertex contributes one circle.
    """
    arc = {}
    isolated = 0
    for cycle in M.vertices:
        if not cycle:
            isolated += 1
            continue
        m = len(cycle)
        for i, h in enumerate(cycle):
            nxt = cycle[(i + 1) % m]
            arc[(h, 1)] = (nxt, 0)
            arc[(nxt, 0)] = (h, 1)
    cross = {}
    for e in M.edges:
        h1, h2 = e.ends
        for s in (0, 1):
            cross[(h1, s)] = (h2, s)
            cross[(h2, s)] = (h1, s)
    return isolated + count_cycles(arc, cross)


class RelPlaneGraph:
    """A plane map with 0-edges H, weights on regular edges, optional signs."""

    def __init__(self, map: PlaneMap, zero: Iterable[int] = (),
                 weights: Mapping[int, tuple] | None = None,
                 signs: Mapping[int, int] | None = None):
        self.map = map
        self.zero = frozenset(zero)
        if not self.zero <= set(range(map.num_edges)):
            raise ValueError("0-edge indices out of range")
        regular = self.regular_indices()
        if weights is None:
            weights = {i: (var(f"x_{map.edges[i].label}"),
                           var(f"y_{map.edges[i].label}")) for i in regular}
        if set(weights) != set(regular):
            raise ValueError("weights must be given exactly on regular edges")
        self.weights = dict(weights)
        self.signs = dict(signs) if signs is not None else {}
        if not set(self.signs) <= set(regular):
            raise ValueError("signs may only be given on regular edges")

    def regular_indices(self) -> list[int]:
        return [i for i in range(self.map.num_edges) if i not in self.zero]

    def __repr__(self):
        return (f"RelPlaneGraph(v={self.map.num_vertices}, "
                f"e={self.map.num_edges}, zero={sorted(self.zero)})")


@dataclass
class ContractionResult:
    map: PlaneMap
    deleted_loops: int


def submap(M: PlaneMap, subset: Iterable[int]) -> tuple[PlaneMap, list[str]]:
    """Spanning submap on the given edges; returns it with surviving labels."""
    subset = sorted(set(subset))
    keep = set()
    edges = []
    labels = []
    for ei in subset:
        e = M.edges[ei]
        keep.update(e.ends)
        edges.append(e)
        labels.append(e.label)
    vertices = [tuple(h for h in v if h in keep) for v in M.vertices]
    return PlaneMap(vertices, edges), labels


def contract_all(G: RelPlaneGraph, F: Iterable[int]) -> ContractionResult:
    """Contract the F-edges inside the spanning submap on F united with H.

    Loops encountered during contraction are deleted; the count of such
    deletions equals the nullity of F.
    """
    F = sorted(set(F))
    if set(F) & G.zero:
        raise ValueError("F must consist of regular edges")
    M = G.map
    m, _ = submap(M, F + sorted(G.zero))
    f_labels = {M.edges[ei].label for ei in F}
    deleted = 0
    while True:
        target = next((i for i, e in enumerate(m.edges) if e.label in f_labels),
                      None)
        if target is None:
            break
        h1, h2 = m.edges[target].ends
        if m.vertex_of(h1) == m.vertex_of(h2):
            deleted += 1
            m = delete(m, target)
        else:
            m = contract(m, target)
    return ContractionResult(m, deleted)


def psi(H_F: ContractionResult | PlaneMap) -> Polynomial:
    """The block-invariant weight d^(delta-k) * w^(v-k) of a contracted remainder."""
    m = H_F.map if isinstance(H_F, ContractionResult) else H_F
    delta = medial_circles(m)
    k = m.components()
    v = m.num_vertices
    return monomial(1, {"d": delta - k, "w": v - k})


def relative_tutte(G: RelPlaneGraph, cap: int = DEFAULT_EDGE_CAP) -> Polynomial:
    """The doubly weighted relative Tutte polynomial in X, Y, d, w.

    Sums over all subsets F of regular edges the term
    (prod_{e in F} x_e)(prod_{e in E minus (F union H)} y_e)
    X^(k(F union H) - k(G)) Y^(n(F)) psi(H_F).
    """
    regular = G.regular_indices()
    if len(regular) > cap:
        raise SizeLimit(
            f"{len(regular)} regular edges exceeds the enumeration cap {cap}")
    M = G.map
    kG = M.components()
    H = sorted(G.zero)
    total = Polynomial.const(0)
    for mask in range(1 << len(regular)):
        F = [regular[i] for i in range(len(regular)) if mask >> i & 1]
        kFH = M.components(F + H)
        kF = M.components(F)
        nF = len(F) - M.num_vertices + kF
        hf = contract_all(G, F)
        weight = ONE
        for i, ei in enumerate(regular):
            weight = weight * (G.weights[ei][0] if mask >> i & 1
                               else G.weights[ei][1])
        total = total + weight * monomial(1, {"X": kFH - kG, "Y": nF}) * psi(hf)
    return total


def dual(G: RelPlaneGraph) -> RelPlaneGraph:
    """The planar dual: faces become vertices, each edge is crossed once.

    The dual edge of a 0-edge is a 0-edge; the weight pair of a regular
    edge is swapped.
    """
    M = G.map
    walks = faces(M)
    vertices = []
    for walk in walks:
        if len(walk) == 1 and isinstance(walk[0], tuple) and walk[0][0] == "iso":
            vertices.append(())
        else:
            vertices.append(tuple(walk))
    dm = PlaneMap(vertices, list(M.edges))
    weights = {i: (y, x) for i, (x, y) in G.weights.items()}
    return RelPlaneGraph(dm, G.zero, weights)
