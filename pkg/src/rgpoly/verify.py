"""Executable identity checks and seeded instance generators.

Every theorem relating the polynomials is run as an exact polynomial
equality (coefficient by coefficient, with symbolic edge weights); a check
never involves tolerances.  Failures reproduce from (kind, seed, size).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .planemap import (
    MapEdge,
    PlaneMap,
    RelPlaneGraph,
    contract_all,
    dual,
    faces,
    medial_circles,
    relative_tutte,
)
from .poly import monomial, swap_vars, var
from .ribbon import (
    RibbonGraph,
    bollobas_riordan,
    boundary_components,
    components,
    make_edge,
)

HALF = Fraction(1, 2)

SQRT_XY = {"d": monomial(1, {"X": HALF, "Y": HALF}),
           "w": monomial(1, {"X": HALF, "Y": -HALF})}
INV_SQRT_XY = {"Z": monomial(1, {"X": -HALF, "Y": -HALF})}


@dataclass
class CheckReport:
    name: str
    instance: str
    passed: bool
    left: str = ""
    right: str = ""
    seed: int | None = None

    def line(self, size=None) -> str:
        status = "PASS" if self.passed else "FAIL"
        bits = [status, self.name]
        if self.seed is not None:
            bits.append(f"seed={self.seed}")
        if size is not None:
            bits.append(f"size={size}")
        return " ".join(bits)


# -- generators -------------------------------------------------------


def generate(kind: str, seed: int, size: int):
    """Deterministic random instance of the given kind and size."""
    rng = random.Random(seed * 1000003 + size)
    if kind == "ribbon":
        return generate_ribbon(rng, size)
    if kind == "rpg":
        return generate_rpg(rng, size)
    if kind == "link":
        return generate_link(rng, size)
    raise ValueError(f"unknown instance kind {kind!r}")


def generate_ribbon(rng: random.Random, n_edges: int) -> RibbonGraph:
    n_vertices = rng.randint(1, max(1, n_edges))
    rotations = [[] for _ in range(n_vertices)]
    edges = []
    for i in range(n_edges):
        ends = []
        for j in range(2):
            h = f"h{i}{'ab'[j]}"
            v = rng.randrange(n_vertices)
            rotations[v].insert(rng.randint(0, len(rotations[v])), h)
            ends.append(h)
        edges.append(make_edge(*ends, sign=rng.choice([1, -1]), label=f"e{i}"))
    return RibbonGraph(rotations, edges)


def grow_plane_map(rng: random.Random, n_edges: int) -> PlaneMap:
    """Random genus-0 map grown by planar edge insertions into faces."""
    rotations = [[] for _ in range(rng.randint(1, 3))]
    edges: list[MapEdge] = []

    def insert_after(corner, h):
        # corner is either ("iso", v) or ("dart", v, anchor)
        if corner[0] == "iso":
            rotations[corner[1]].append(h)
        else:
            _, v, anchor = corner
            rot = rotations[v]
            rot.insert(rot.index(anchor) + 1, h)

    for i in range(n_edges):
        if rng.random() < 0.1:
            rotations.append([])
        M = PlaneMap(rotations, edges)
        walks = faces(M)
        partner = {h: (e.ends[0] if e.ends[1] == h else e.ends[1])
                   for e in edges for h in e.ends}
        corner_lists = []
        comp_of = _component_ids(M)
        for walk in walks:
            if len(walk) == 1 and isinstance(walk[0], tuple) and walk[0][0] == "iso":
                corners = [("iso", walk[0][1])]
                comp = comp_of[walk[0][1]]
            else:
                corners = [("dart", M.vertex_of(partner[d]), partner[d])
                           for d in walk]
                comp = comp_of[M.vertex_of(walk[0])]
            corner_lists.append((comp, corners))
        fi = rng.randrange(len(corner_lists))
        comp1, corners1 = corner_lists[fi]
        c1 = rng.choice(corners1)
        others = [cl for cl in corner_lists if cl[0] != comp1]
        if others and rng.random() < 0.4:
            _, corners2 = rng.choice(others)
            c2 = rng.choice(corners2)
        else:
            c2 = rng.choice(corners1)
        h1, h2 = f"g{i}a", f"g{i}b"
        insert_after(c1, h1)
        insert_after(c2, h2)
        edges.append(MapEdge((h1, h2), f"e{i}"))
    M = PlaneMap(rotations, edges)
    M.require_plane()
    return M


def _component_ids(M: PlaneMap):
    from .util import UnionFind
    uf = UnionFind(range(M.num_vertices))
    for e in M.edges:
        uf.union(M.vertex_of(e.ends[0]), M.vertex_of(e.ends[1]))
    return {v: uf.find(v) for v in range(M.num_vertices)}


def generate_rpg(rng: random.Random, n_edges: int) -> RelPlaneGraph:
    M = grow_plane_map(rng, n_edges)
    zero = {i for i in range(M.num_edges) if rng.random() < 0.35}
    signs = {i: rng.choice([1, -1]) for i in range(M.num_edges) if i not in zero}
    return RelPlaneGraph(M, zero, signs=signs)


def generate_link(rng: random.Random, n_classical: int):
    from .links import realize_gauss_code
    if n_classical == 0:
        return realize_gauss_code("")
    tokens = []
    signs = {i: rng.choice("+-") for i in range(1, n_classical + 1)}
    for i in range(1, n_classical + 1):
        tokens.append(f"O{i}{signs[i]}")
        tokens.append(f"U{i}{signs[i]}")
    rng.shuffle(tokens)
    if n_classical >= 3 and rng.random() < 0.4:
        cut = rng.randint(1, len(tokens) - 1)
        words = ["".join(tokens[:cut]), "".join(tokens[cut:])]
    else:
        words = ["".join(tokens)]
    if rng.random() < 0.15:
        words.append("")
    return realize_gauss_code(" | ".join(words))


# -- checks -----------------------------------------------------------


def check_main_theorem(R: RibbonGraph, seed=None) -> CheckReport:
    """X^alpha Y^beta T_{G,H}(X,Y) = B_R(X,Y,1/sqrt(XY)) under w,d -> sqrt."""
    from .convert import ribbon_to_plane
    G, _cert = ribbon_to_plane(R)
    beta = Fraction(-(R.num_vertices - G.map.num_vertices), 2)
    alpha = G.map.components() - components(R, R.all_edges()) - beta
    left = monomial(1, {"X": alpha, "Y": beta}) * relative_tutte(G).subs(SQRT_XY)
    right = bollobas_riordan(R).subs(INV_SQRT_XY)
    return CheckReport("main_theorem", repr(R), left == right,
                       left.canonical(), right.canonical(), seed)


def check_subset_identities(R: RibbonGraph, G: RelPlaneGraph, cert,
                            seed=None) -> CheckReport:
    """Per-subset bookkeeping behind the main theorem, for every F."""
    regular = G.regular_indices()
    ok = True
    detail = ""
    for mask in range(1 << len(regular)):
        F = [regular[i] for i in range(len(regular)) if mask >> i & 1]
        Fr = [cert.g_to_r[ei] for ei in F]
        hf = contract_all(G, F)
        kHF = hf.map.components()
        kFH = G.map.components(F + sorted(G.zero))
        kF = G.map.components(F)
        nF = len(F) - G.map.num_vertices + kF
        bcFr = boundary_components(R, Fr)
        checks = {
            "|E(F)|=|E(F')|": len(F) == len(Fr),
            "k(H_F)=k(FuH)": kHF == kFH,
            "bc(F')=n(F)+delta(H_F)": bcFr == nF + medial_circles(hf.map),
            "v(H_F)=k(F)": hf.map.num_vertices == kF,
        }
        if not all(checks.values()):
            ok = False
            detail = f"F={F}: " + ", ".join(k for k, v in checks.items() if not v)
            break
    return CheckReport("subset_identities", repr(R), ok, detail, "", seed)


def check_duality(G: RelPlaneGraph, seed=None) -> CheckReport:
    """The duality identity, plus dual(dual(G)) preserving the polynomial."""
    Gs = dual(G)
    M, Ms = G.map, Gs.map
    a = Fraction(len(G.regular_indices()) - M.num_vertices, 2) + M.components()
    b = Fraction(M.num_vertices, 2)
    a_s = Fraction(len(Gs.regular_indices()) - Ms.num_vertices, 2) + Ms.components()
    b_s = Fraction(Ms.num_vertices, 2)
    T = relative_tutte(G)
    Ts = relative_tutte(Gs)
    # T*(Y,X): substitute w,d first, then swap the arguments, so that the
    # psi-variables are evaluated at the swapped point as well
    left = monomial(1, {"X": a, "Y": b}) * T.subs(SQRT_XY)
    right = (monomial(1, {"Y": a_s, "X": b_s})
             * swap_vars(Ts.subs(SQRT_XY), "X", "Y"))
    involution = relative_tutte(dual(Gs)) == T
    passed = left == right and involution
    return CheckReport("duality", repr(G), passed,
                       left.canonical(), right.canonical(), seed)


def check_bracket(L, seed=None) -> CheckReport:
    """[L](A,B,d) as the prefactored specialization of the Tait graph's T."""
    from .convert import link_to_tait
    from .links import kauffman_bracket
    G = link_to_tait(L)
    M = G.map
    v, k = M.num_vertices, M.components()
    e_reg = len(G.regular_indices())
    A, B, d = var("A"), var("B"), var("d")
    specialized = relative_tutte(G).subs({
        "X": monomial(1, {"A": -1, "B": 1, "d": 1}),
        "Y": monomial(1, {"A": 1, "B": -1, "d": 1}),
        "w": monomial(1, {"A": -1, "B": 1}),
        "x_plus": 1,
        "y_plus": 1,
        "x_minus": monomial(1, {"A": -1, "B": 1}),
        "y_minus": monomial(1, {"A": 1, "B": -1}),
    })
    right = monomial(1, {"A": v - k, "B": e_reg - v + k, "d": k - 1}) * specialized
    left = kauffman_bracket(L)
    return CheckReport("bracket_theorem", repr(L), left == right,
                       left.canonical(), right.canonical(), seed)


# -- suite driver -----------------------------------------------------


def run_suite(checks: list[str], count: int, seed: int, max_size: int):
    """Yield (CheckReport, size) for ``count`` seeded instances per check."""
    from .convert import ribbon_to_plane
    for name in checks:
        for i in range(count):
            inst_seed = seed * 1009 + i
            rng = random.Random(inst_seed)
            if name == "main":
                size = rng.randint(0, max_size)
                R = generate_ribbon(rng, size)
                yield check_main_theorem(R, seed=inst_seed), size
            elif name == "identities":
                size = rng.randint(0, max_size)
                R = generate_ribbon(rng, size)
                G, cert = ribbon_to_plane(R)
                yield check_subset_identities(R, G, cert, seed=inst_seed), size
            elif name == "duality":
                size = rng.randint(0, max_size)
                G = generate_rpg(rng, size)
                yield check_duality(G, seed=inst_seed), size
            elif name == "bracket":
                size = rng.randint(0, max_size)
                L = generate_link(rng, size)
                yield check_bracket(L, seed=inst_seed), size
            else:
                raise ValueError(f"unknown check {name!r}")
