"""Ground sets, set systems, multiset edges and Kneser hypergraphs.

Conventions:

* ground elements are ``1..n``; a subset of the ground set is stored as an
  int bitmask with bit ``i - 1`` standing for element ``i``;
* hypergraph vertices are ``0..vertex_count - 1`` (for a Kneser hypergraph,
  vertex ``j`` is the ``j``-th member of the set system in canonical order);
* colors are ``1..m``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np

from .errors import CapacityError, InputError
from .kernels import enumerate_kneser_edges

DEFAULT_ENUMERATION_CAP = 5_000_000


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------


def mask_of(elements: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for i in elements:
        i = int(i)
        if i < 1 or (n is not None and i > n):
            raise InputError(f"element {i} outside [1, {n}]")
        mask |= 1 << (i - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroundContext:
    """Ground set ``[n]`` with intersection multiplicities ``s``."""

    n: int
    s: tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        object.__setattr__(self, "s", s)
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if len(s) != self.n:
            raise InputError(f"s has length {len(s)}, expected {self.n}")
        if any(x < 1 for x in s):
            raise InputError(f"multiplicities must be >= 1, got {s}")

    @classmethod
    def constant(cls, n: int, s: int) -> GroundContext:
        return cls(n, (s,) * n)

    @property
    def nbar(self) -> int:
        """Size of the multiset ``[n]^s``."""
        return sum(self.s)

    def is_constant(self) -> bool:
        return len(set(self.s)) == 1

    def with_s(self, s: int | Sequence[int]) -> GroundContext:
        if isinstance(s, int):
            return GroundContext.constant(self.n, s)
        return GroundContext(self.n, tuple(s))


def _set_key(mask: int) -> tuple[int, ...]:
    return elements_of(mask)


@dataclass(frozen=True)
class SetSystem:
    """Distinct non-empty subsets of ``[n]`` in canonical (lexicographic) order.

    ``members`` are bitmasks; use :attr:`sets` for element tuples.
    """

    ground: GroundContext
    members: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.ground.n) - 1
        members = tuple(int(x) for x in self.members)
        for mask in members:
            if mask == 0:
                raise InputError("set systems may not contain the empty set")
            if mask & ~full:
                raise InputError(f"set {elements_of(mask)} not contained in [1, {self.ground.n}]")
        if len(set(members)) != len(members):
            raise InputError("set system members must be pairwise distinct")
        object.__setattr__(self, "members", tuple(sorted(members, key=_set_key)))

    @classmethod
    def from_sets(cls, ground: GroundContext, sets: Iterable[Iterable[int]]) -> SetSystem:
        return cls(ground, tuple(mask_of(S, ground.n) for S in sets))

    @property
    def sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(m) for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def incidence(self) -> np.ndarray:
        """(m, n) 0/1 matrix; row j is the indicator vector of member j."""
        out = np.zeros((len(self.members), self.ground.n), dtype=np.int64)
        for j, mask in enumerate(self.members):
            for i in elements_of(mask):
                out[j, i - 1] = 1
        return out


def binomial_system(n: int, k: int, s: int | Sequence[int] = 1) -> SetSystem:
    """All k-subsets of ``[n]``."""
    ground = GroundContext.constant(n, s) if isinstance(s, int) else GroundContext(n, tuple(s))
    return SetSystem.from_sets(ground, combinations(range(1, n + 1), k))


@dataclass(frozen=True, order=True)
class MultisetEdge:
    """An r-multisubset of the vertices, as a dense multiplicity vector."""

    multiplicity: tuple[int, ...]

    def __post_init__(self):
        mult = tuple(int(x) for x in self.multiplicity)
        if any(x < 0 for x in mult):
            raise InputError(f"negative multiplicity in {mult}")
        object.__setattr__(self, "multiplicity", mult)

    @classmethod
    def from_members(cls, members: Iterable[int], vertex_count: int) -> MultisetEdge:
        mult = [0] * vertex_count
        for v in members:
            if not 0 <= v < vertex_count:
                raise InputError(f"vertex {v} outside [0, {vertex_count})")
            mult[v] += 1
        return cls(tuple(mult))

    @property
    def r(self) -> int:
        return sum(self.multiplicity)

    @property
    def members(self) -> tuple[int, ...]:
        """Vertices with repetition, sorted."""
        return tuple(v for v, k in enumerate(self.multiplicity) for _ in range(k))

    @property
    def support_mask(self) -> int:
        mask = 0
        for v, k in enumerate(self.multiplicity):
            if k:
                mask |= 1 << v
        return mask

    @property
    def is_set(self) -> bool:
        return all(k <= 1 for k in self.multiplicity)

    @property
    def is_loop_free(self) -> bool:
        return sum(1 for k in self.multiplicity if k) >= 2

    def sort_key(self) -> tuple[int, ...]:
        return self.members


def support(edge: MultisetEdge) -> frozenset[int]:
    """Vertices occurring in ``edge`` with positive multiplicity."""
    return frozenset(v for v, k in enumerate(edge.multiplicity) if k)


@dataclass(frozen=True)
class Hypergraph:
    """Loop-free r-uniform hypergraph, possibly with multiset edges.

    Edges are deduplicated and kept in canonical order, so two hypergraphs on
    the same labeled vertex set compare equal iff their edge sets agree and
    their ``multiset_allowed`` flags agree.
    """

    vertex_count: int
    r: int
    edges: tuple[MultisetEdge, ...] = ()
    multiset_allowed: bool = True

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex_count must be >= 0")
        if self.r < 2:
            raise InputError(f"uniformity r must be >= 2, got {self.r}")
        edges = set()
        for e in self.edges:
            if not isinstance(e, MultisetEdge):
                e = MultisetEdge.from_members(e, self.vertex_count)
            if len(e.multiplicity) != self.vertex_count:
                raise InputError("edge dimension does not match vertex_count")
            if e.r != self.r:
                raise InputError(f"edge {e.members} is not {self.r}-uniform")
            if not e.is_loop_free:
                raise InputError(f"edge {e.members} is a loop")
            if not self.multiset_allowed and not e.is_set:
                raise InputError(f"multiset edge {e.members} in a hypergraph without multiplicities")
            edges.add(e)
        object.__setattr__(self, "edges", tuple(sorted(edges, key=MultisetEdge.sort_key)))

    @property
    def edge_set(self) -> frozenset[MultisetEdge]:
        return frozenset(self.edges)

    def supports(self) -> list[int]:
        return [e.support_mask for e in self.edges]

    def has_edge(self, edge: MultisetEdge) -> bool:
        return edge in self.edge_set


@dataclass(frozen=True)
class KneserInstance:
    """``KG^r_s(S)`` (``multiset=True``) or ``kg^r_s(S)`` (``multiset=False``)."""

    system: SetSystem
    r: int
    multiset: bool = True

    def __post_init__(self):
        if self.r < 2:
            raise InputError(f"r must be >= 2, got {self.r}")
        if self.multiset and any(x >= self.r for x in self.ground.s):
            raise InputError(
                "with-multiplicities Kneser hypergraphs need every s_i < r "
                f"(got s={self.ground.s}, r={self.r})"
            )

    @property
    def ground(self) -> GroundContext:
        return self.system.ground

    @property
    def vertex_count(self) -> int:
        return len(self.system)

    @property
    def variant(self) -> str:
        return "multiset" if self.multiset else "set"

    def candidate_count(self) -> int:
        m = self.vertex_count
        return comb(m + self.r - 1, self.r) if self.multiset else comb(m, self.r)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def is_s_disjoint(family: Iterable[Iterable[int]], ground: GroundContext) -> bool:
    """True iff every element ``i`` lies in at most ``s_i`` members of ``family``.

    Members are counted with repetition.
    """
    counts = [0] * ground.n
    for S in family:
        for i in elements_of(mask_of(S, ground.n)):
            counts[i - 1] += 1
    return all(c <= s for c, s in zip(counts, ground.s))


def _masks_s_disjoint(masks_with_mult: Iterable[tuple[int, int]], ground: GroundContext) -> bool:
    counts = [0] * ground.n
    for mask, k in masks_with_mult:
        for i in elements_of(mask):
            counts[i - 1] += k
    return all(c <= s for c, s in zip(counts, ground.s))


def is_kneser_edge(instance: KneserInstance, candidate: MultisetEdge) -> bool:
    """Membership oracle for the edge set, without building the hypergraph."""
    if len(candidate.multiplicity) != instance.vertex_count:
        raise InputError(
            f"candidate has {len(candidate.multiplicity)} entries, instance has {instance.vertex_count} vertices"
        )
    if candidate.r != instance.r:
        raise InputError(f"candidate has size {candidate.r}, expected r={instance.r}")
    if not candidate.is_loop_free:
        return False
    if not instance.multiset and not candidate.is_set:
        return False
    members = instance.system.members
    return _masks_s_disjoint(
        ((members[v], k) for v, k in enumerate(candidate.multiplicity) if k), instance.ground
    )


def _rows_to_edges(rows: np.ndarray, vertex_count: int) -> list[MultisetEdge]:
    out = []
    for row in rows:
        mult = [0] * vertex_count
        for v in row:
            mult[int(v)] += 1
        out.append(MultisetEdge(tuple(mult)))
    return out


def build_kneser(instance: KneserInstance, cap: int = DEFAULT_ENUMERATION_CAP) -> Hypergraph:
    """Materialize the edge set by enumerating every r-(multi)subset of vertices."""
    total = instance.candidate_count()
    if total > cap:
        raise CapacityError(
            f"{total} candidate {instance.r}-multisets exceed the enumeration cap {cap}; "
            "use the implicit oracle (is_kneser_edge / ColorClassOracle) instead"
        )
    m = instance.vertex_count
    if m == 0:
        return Hypergraph(0, instance.r, (), instance.multiset)
    rows = enumerate_kneser_edges(
        instance.system.incidence(), np.array(instance.ground.s), instance.r, not instance.multiset
    )
    return Hypergraph(m, instance.r, tuple(_rows_to_edges(rows, m)), instance.multiset)


def complete_hypergraph(n: int, r: int, multiset_allowed: bool = True) -> Hypergraph:
    """``K^r_n`` (all loop-free r-multisubsets) or ``k^r_n`` (all r-subsets)."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if r < 2:
        raise InputError(f"r must be >= 2, got {r}")
    gen = combinations_with_replacement(range(n), r) if multiset_allowed else combinations(range(n), r)
    edges = [MultisetEdge.from_members(c, n) for c in gen if c[0] != c[-1]]
    return Hypergraph(n, r, tuple(edges), multiset_allowed)


def up_monotone_closure(h: Hypergraph, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Hypergraph:
    """All loop-free r-multisets whose support contains the support of an edge of ``h``.

    Coloring-equivalent to ``h``: a color class contains an edge of one iff it
    contains an edge of the other.
    """
    if r < 2:
        raise InputError(f"r must be >= 2, got {r}")
    supports = sorted(set(h.supports()))
    widest = max((popcount(x) for x in supports), default=0)
    if r < widest:
        raise InputError(f"r={r} is smaller than the largest edge support ({widest})")
    nv = h.vertex_count
    if comb(nv + r - 1, r) > cap:
        raise CapacityError(f"closure enumeration exceeds cap {cap}")
    edges = []
    for c in combinations_with_replacement(range(nv), r):
        if c[0] == c[-1]:
            continue
        sup = 0
        for v in c:
            sup |= 1 << v
        if any(sup & x == x for x in supports):
            edges.append(MultisetEdge.from_members(c, nv))
    flag = h.multiset_allowed or any(not e.is_set for e in edges)
    return Hypergraph(nv, r, tuple(edges), flag)
