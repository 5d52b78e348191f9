"""Which hypergraphs are generalized Kneser hypergraphs.

* :func:`represent_up_monotone` realizes an up-monotone hypergraph as
  ``KG^r_{r-1}`` of an explicit set system;
* :func:`is_convex` is a necessary condition for representability with any
  intersection multiplicities;
* :func:`kg1_clique_test` decides representability as ``KG^r_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

from .core import (
    GroundContext,
    Hypergraph,
    KneserInstance,
    MultisetEdge,
    SetSystem,
    build_kneser,
    complete_hypergraph,
    elements_of,
    mask_of,
)
from .errors import CapacityError, InputError
from .exact_lp import in_convex_hull

CONVEX_GENERATOR_CAP = 10_000
UP_MONOTONE_CAP = 2_000_000


def _loop_free_multisets(nv: int, r: int):
    for c in combinations_with_replacement(range(nv), r):
        if c[0] != c[-1]:
            yield c


def up_monotone_violation(h: Hypergraph) -> tuple[MultisetEdge, MultisetEdge] | None:
    """A pair ``(e, e2)`` with ``e`` an edge, ``support(e2) >= support(e)`` and ``e2`` missing."""
    nv, r = h.vertex_count, h.r
    if comb(nv + r - 1, r) > UP_MONOTONE_CAP:
        raise CapacityError(f"up-monotone check over {comb(nv + r - 1, r)} multisets exceeds the cap")
    edges = h.edge_set
    by_support: dict[int, MultisetEdge] = {}
    for e in h.edges:
        by_support.setdefault(e.support_mask, e)
    for c in _loop_free_multisets(nv, r):
        cand = MultisetEdge.from_members(c, nv)
        if cand in edges:
            continue
        sup = cand.support_mask
        for smask, e in by_support.items():
            if smask & sup == smask:
                return e, cand
    return None


def is_up_monotone(h: Hypergraph) -> bool:
    return up_monotone_violation(h) is None


def convexity_violation(h: Hypergraph) -> tuple[tuple[int, ...], list] | None:
    """An integral non-edge point of the hull with its convex weights, or None."""
    nv, r = h.vertex_count, h.r
    if comb(nv + r - 1, r) > CONVEX_GENERATOR_CAP:
        raise CapacityError(
            f"convexity test over {comb(nv + r - 1, r)} lattice points exceeds the cap {CONVEX_GENERATOR_CAP}"
        )
    points = [e.multiplicity for e in h.edges]
    if len(points) < 2:
        return None
    lo = [min(p[i] for p in points) for i in range(nv)]
    hi = [max(p[i] for p in points) for i in range(nv)]
    present = set(points)
    # every candidate sums to r with entries < r, i.e. is a loop-free r-multiset
    for c in _loop_free_multisets(nv, r):
        a = MultisetEdge.from_members(c, nv).multiplicity
        if a in present or any(not lo[i] <= a[i] <= hi[i] for i in range(nv)):
            continue
        weights = in_convex_hull(points, a)
        if weights is not None:
            return a, weights
    return None


def is_convex(h: Hypergraph) -> bool:
    """Every integral point of the hull of edge multiplicity vectors is an edge."""
    return convexity_violation(h) is None


def complement_hypergraph(h: Hypergraph) -> Hypergraph:
    """Edges of ``K^r_n`` that are not edges of ``h``."""
    if h.vertex_count == 0:
        return Hypergraph(0, h.r, (), True)
    full = complete_hypergraph(h.vertex_count, h.r, True)
    return Hypergraph(h.vertex_count, h.r, tuple(e for e in full.edges if not h.has_edge(e)), True)


@dataclass(frozen=True)
class Representation:
    """Set system whose ``KG^r_{r-1}`` reproduces a hypergraph.

    Ground elements ``1..vertex_count`` are private elements of the original
    vertices; element ``vertex_count + 1 + j`` stands for
    ``complement_edges[j]``. ``vertex_map[v]`` is the index of the system
    member representing original vertex ``v``.
    """

    r: int
    vertex_count: int
    complement_edges: tuple[MultisetEdge, ...]
    system: SetSystem
    vertex_map: tuple[int, ...]

    @property
    def ground(self) -> GroundContext:
        return self.system.ground

    def element_label(self, i: int) -> int | str:
        if i <= self.vertex_count:
            return i
        e = self.complement_edges[i - self.vertex_count - 1]
        return "e:" + ",".join(str(v + 1) for v in e.members)


def represent_up_monotone(h: Hypergraph) -> Representation:
    """Set system ``S_v = {v} + {complement edges containing v}`` with ``s = r - 1``."""
    bad = up_monotone_violation(h)
    if bad is not None:
        e, e2 = bad
        raise InputError(
            f"hypergraph is not up-monotone: edge {tuple(v + 1 for v in e.members)} is present "
            f"but {tuple(v + 1 for v in e2.members)} is not"
        )
    nv, r = h.vertex_count, h.r
    if nv == 0:
        raise InputError("cannot represent a hypergraph without vertices")
    comp = complement_hypergraph(h).edges
    ground = GroundContext.constant(nv + len(comp), r - 1)
    sets = []
    for v in range(nv):
        S = [v + 1] + [nv + 1 + j for j, e in enumerate(comp) if e.multiplicity[v]]
        sets.append(mask_of(S))
    system = SetSystem(ground, tuple(sets))
    index = {mask: j for j, mask in enumerate(system.members)}
    vertex_map = tuple(index[mask] for mask in sets)
    return Representation(r, nv, comp, system, vertex_map)


def verify_representation(h: Hypergraph, rep: Representation) -> bool:
    """Build ``KG^r_{r-1}(rep.system)`` and compare it with ``h`` under ``vertex_map``."""
    if rep.r != h.r or rep.vertex_count != h.vertex_count or len(rep.system) != h.vertex_count:
        return False
    if sorted(rep.vertex_map) != list(range(h.vertex_count)):
        return False
    if any(s != h.r - 1 for s in rep.ground.s):
        return False
    kg = build_kneser(KneserInstance(rep.system, h.r, True))
    inverse = {j: v for v, j in enumerate(rep.vertex_map)}
    mapped = set()
    for e in kg.edges:
        mult = [0] * h.vertex_count
        for j, k in enumerate(e.multiplicity):
            mult[inverse[j]] = k
        mapped.add(MultisetEdge(tuple(mult)))
    return mapped == set(h.edges)


@dataclass(frozen=True)
class CliqueTest:
    """Outcome of :func:`kg1_clique_test`.

    ``graph`` holds the co-occurrence pairs (0-based vertices). When not
    representable, ``missing_clique`` is an r-clique of ``graph`` that is
    not an edge.
    """

    representable: bool
    graph: tuple[tuple[int, int], ...]
    missing_clique: tuple[int, ...] | None = None


def _cliques(nv: int, adj: list[int], r: int):
    def extend(clique: list[int], cand: int):
        if len(clique) == r:
            yield tuple(clique)
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            clique.append(v)
            yield from extend(clique, cand & adj[v])
            clique.pop()

    yield from extend([], (1 << nv) - 1)


def kg1_clique_test(h: Hypergraph) -> CliqueTest:
    """Decide whether ``h`` (set edges only) is ``KG^r_1`` of some set system.

    Such a hypergraph is the family of r-cliques of a disjointness graph;
    the smallest candidate graph joins every pair that lies in a common edge,
    and ``h`` is representable iff its edges are exactly that graph's r-cliques.
    """
    if any(not e.is_set for e in h.edges):
        raise InputError("kg1_clique_test expects a hypergraph without multiset edges")
    nv, r = h.vertex_count, h.r
    pairs = set()
    for e in h.edges:
        pairs.update(combinations(e.members, 2))
    adj = [0] * nv
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    edges = {e.members for e in h.edges}
    graph = tuple(sorted(pairs))
    for clique in _cliques(nv, adj, r):
        if clique not in edges:
            return CliqueTest(False, graph, clique)
    return CliqueTest(True, graph, None)
