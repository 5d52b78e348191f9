"""Proper colorings of uniform hypergraphs and exact chromatic numbers.

A color class is *independent* when it contains no edge. For coloring
purposes only the inclusion-minimal edge supports ("dependency masks")
matter, since a multiset edge is monochromatic exactly when its support is.
The exact solver runs on those masks.
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .core import (
    Hypergraph,
    KneserInstance,
    MultisetEdge,
    build_kneser,
    elements_of,
    popcount,
)
from .errors import CapacityError, InputError, SolverTimeout

Source = Hypergraph | KneserInstance

NODES_PER_SLICE = 200_000
FIRST_SLICE = 1_000
# target wall time of one uninterrupted kernel call, so budgets are honored closely
SLICE_SECONDS = 0.25


@dataclass(frozen=True)
class Coloring:
    """``assignment[v]`` is the color (in ``1..color_count``) of vertex ``v``."""

    assignment: tuple[int, ...]
    color_count: int

    def __post_init__(self):
        assignment = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if self.color_count < 0:
            raise InputError("color_count must be >= 0")
        for c in assignment:
            if not 1 <= c <= self.color_count:
                raise InputError(f"color {c} outside [1, {self.color_count}]")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.color_count)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of vertex bitmasks (sorted)."""
    family = set(masks)
    if not family:
        return []
    smallest = min(popcount(x) for x in family)
    memo: dict[int, bool] = {}

    def contains_member(x: int) -> bool:
        if x in family:
            return True
        if popcount(x) <= smallest:
            return False
        hit = memo.get(x)
        if hit is None:
            hit = any(contains_member(x & ~(1 << (v - 1))) for v in elements_of(x))
            memo[x] = hit
        return hit

    out = []
    for x in family:
        if popcount(x) == smallest or not any(contains_member(x & ~(1 << (v - 1))) for v in elements_of(x)):
            out.append(x)
    return sorted(out)


def _vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class ColorClassOracle:
    """Answers "does this vertex class contain an edge?".

    ``mode="explicit"`` reads the edge list (building it for a Kneser
    instance); ``mode="implicit"`` works from the set system alone and never
    enumerates the Kneser edge set. Both modes must agree on every class.
    """

    def __init__(self, source: Source, mode: str = "implicit"):
        if mode not in ("explicit", "implicit"):
            raise InputError(f"unknown oracle mode {mode!r}")
        self.source = source
        self.mode = mode
        self._hypergraph: Hypergraph | None = None
        if isinstance(source, Hypergraph):
            self.mode = "explicit"
            self._hypergraph = source
        elif mode == "explicit":
            self._hypergraph = build_kneser(source)
        if isinstance(source, KneserInstance):
            self._members = source.system.members
            self._cap = list(source.ground.s)
        self._masks: list[int] | None = None

    @property
    def vertex_count(self) -> int:
        return self.source.vertex_count

    @property
    def r(self) -> int:
        return self.source.r

    # -- implicit search -------------------------------------------------

    def _search(self, cls: Sequence[int], exact_support: bool) -> MultisetEdge | None:
        """Depth-first search for an s-disjoint r-multiset inside ``cls``.

        With ``exact_support`` every vertex of ``cls`` must be used.
        """
        inst = self.source
        r = inst.r
        distinct = not inst.multiset
        if distinct and len(cls) < r:
            return None
        if exact_support and len(cls) > r:
            return None
        members = [elements_of(self._members[v]) for v in cls]
        cap = list(self._cap)
        upper = []
        for elems in members:
            k = min((cap[i - 1] for i in elems), default=r)
            upper.append(min(k, 1 if distinct else r))
        suffix = [0] * (len(cls) + 1)
        for p in range(len(cls) - 1, -1, -1):
            suffix[p] = suffix[p + 1] + upper[p]
        low = 1 if exact_support else 0
        mult = [0] * len(cls)

        def dfs(p: int, left: int) -> bool:
            if left == 0:
                if exact_support and p < len(cls):
                    return False
                return sum(1 for k in mult if k) >= 2
            if p == len(cls) or suffix[p] < left:
                return False
            if exact_support and len(cls) - p > left:
                return False
            elems = members[p]
            hi = min(upper[p], left, min((cap[i - 1] for i in elems), default=left))
            for k in range(hi, low - 1, -1):
                for i in elems:
                    cap[i - 1] -= k
                mult[p] = k
                if dfs(p + 1, left - k):
                    return True
                mult[p] = 0
                for i in elems:
                    cap[i - 1] += k
            return False

        if not dfs(0, r):
            return None
        full = [0] * inst.vertex_count
        for v, k in zip(cls, mult):
            full[v] = k
        return MultisetEdge(tuple(full))

    # -- public queries ---------------------------------------------------

    def find_edge(self, cls: Iterable[int]) -> MultisetEdge | None:
        """An edge lying inside ``cls``, or None if the class is independent."""
        cls = sorted(set(cls))
        for v in cls:
            if not 0 <= v < self.vertex_count:
                raise InputError(f"vertex {v} outside [0, {self.vertex_count})")
        if self._hypergraph is not None:
            mask = _vertex_mask(cls)
            for e in self._hypergraph.edges:
                if e.support_mask & ~mask == 0:
                    return e
            return None
        return self._search(cls, exact_support=False)

    def is_independent(self, cls: Iterable[int]) -> bool:
        return self.find_edge(cls) is None

    def dependency_masks(self, deadline: float | None = None) -> list[int]:
        """Inclusion-minimal edge supports, as vertex bitmasks.

        ``deadline`` is a ``time.perf_counter()`` value; the implicit
        derivation raises :class:`SolverTimeout` once it passes.
        """
        if self._masks is None:
            if self._hypergraph is not None:
                self._masks = minimal_masks(self._hypergraph.supports())
            else:
                self._masks = self._implicit_minimal_supports(deadline)
        return self._masks

    def _implicit_minimal_supports(self, deadline: float | None = None) -> list[int]:
        inst = self.source
        m = inst.vertex_count
        sizes = [inst.r] if not inst.multiset else range(2, inst.r + 1)
        found: list[int] = []
        dependent_prev: set[int] = set()
        for t in sizes:
            if t > m:
                break
            dependent_cur: set[int] = set()
            for count, combo in enumerate(combinations(range(m), t)):
                if deadline is not None and count % 4096 == 0 and time.perf_counter() > deadline:
                    raise SolverTimeout("budget exhausted while deriving edge supports", lower=1, upper=m)
                mask = _vertex_mask(combo)
                if t > 2 and inst.multiset and any((mask & ~(1 << v)) in dependent_prev for v in combo):
                    dependent_cur.add(mask)
                    continue
                if self._search(combo, exact_support=True) is not None:
                    found.append(mask)
                    dependent_cur.add(mask)
            dependent_prev = dependent_cur
        return sorted(found)


def class_is_independent(oracle: ColorClassOracle, cls: Iterable[int]) -> bool:
    return oracle.is_independent(cls)


def _as_oracle(source: Source | ColorClassOracle, mode: str = "implicit") -> ColorClassOracle:
    if isinstance(source, ColorClassOracle):
        return source
    return ColorClassOracle(source, mode)


def verify_coloring(source: Source | ColorClassOracle, coloring: Coloring) -> MultisetEdge | None:
    """None when ``coloring`` is proper, else a monochromatic edge.

    The witness is the first one found scanning color classes in order.
    """
    oracle = _as_oracle(source)
    if len(coloring.assignment) != oracle.vertex_count:
        raise InputError(
            f"coloring has {len(coloring.assignment)} entries, hypergraph has {oracle.vertex_count} vertices"
        )
    for cls in coloring.classes():
        edge = oracle.find_edge(cls)
        if edge is not None:
            return edge
    return None


def is_proper(source: Source | ColorClassOracle, coloring: Coloring) -> bool:
    return verify_coloring(source, coloring) is None


def _greedy_masks(nv: int, masks: Sequence[int], order: Sequence[int]) -> list[int]:
    by_vertex: list[list[int]] = [[] for _ in range(nv)]
    for x in masks:
        for v in range(nv):
            if x >> v & 1:
                by_vertex[v].append(x & ~(1 << v))
    classes: list[int] = []
    colors = [0] * nv
    for v in order:
        for c, cls in enumerate(classes):
            if not any(rest & ~cls == 0 for rest in by_vertex[v]):
                classes[c] |= 1 << v
                colors[v] = c + 1
                break
        else:
            classes.append(1 << v)
            colors[v] = len(classes)
    return colors


def greedy_coloring(source: Source | ColorClassOracle, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring: each vertex takes the smallest color keeping its class independent."""
    oracle = _as_oracle(source)
    nv = oracle.vertex_count
    order = list(range(nv)) if order is None else list(order)
    if sorted(order) != list(range(nv)):
        raise InputError("order must be a permutation of the vertices")
    if nv == 0:
        return Coloring((), 0)
    colors = _greedy_masks(nv, oracle.dependency_masks(), order)
    return Coloring(tuple(colors), max(colors))


def star_coloring_pairs(n: int, r: int) -> Coloring:
    """``S -> min(min S, n - 2)`` on the vertices of ``kg^r_{r-1}(binom([n], 2))``."""
    if n < 4 or r < 4:
        raise InputError(f"star coloring needs n >= 4 and r >= 4, got n={n}, r={r}")
    pairs = list(combinations(range(1, n + 1), 2))
    return Coloring(tuple(min(a, n - 2) for a, _ in pairs), n - 2)


def _search_arrays(nv: int, masks: Sequence[int]):
    by_vertex: list[list[int]] = [[] for _ in range(nv)]
    for x in masks:
        for v in range(nv):
            if x >> v & 1:
                by_vertex[v].append(x & ~(1 << v))
    ptr = np.zeros(nv + 1, dtype=np.int64)
    for v in range(nv):
        ptr[v + 1] = ptr[v] + len(by_vertex[v])
    rest = np.array([x for lst in by_vertex for x in lst], dtype=np.int64)
    degree = np.array([len(lst) for lst in by_vertex], dtype=np.int64)
    return ptr, rest, degree


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


def chromatic_number(
    source: Source | ColorClassOracle,
    time_limit: float | None = None,
    node_limit: int | None = None,
    mode: str = "implicit",
    stats: SearchStats | None = None,
) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal coloring.

    Runs the m-coloring search for m = 2, 3, ... below the greedy bound.
    Zero vertices give 0 and an edgeless hypergraph gives 1. When the time
    or node budget runs out, raises :class:`SolverTimeout` carrying the
    certified lower bound and the greedy upper bound.
    """
    start = time.perf_counter()
    stats = stats if stats is not None else SearchStats()
    oracle = _as_oracle(source, mode)
    nv = oracle.vertex_count
    if nv == 0:
        return 0, Coloring((), 0)
    if nv > kernels.MAX_SEARCH_VERTICES:
        raise CapacityError(f"exact search supports at most {kernels.MAX_SEARCH_VERTICES} vertices, got {nv}")
    try:
        masks = oracle.dependency_masks(None if time_limit is None else start + time_limit)
    except SolverTimeout as exc:
        stats.seconds = time.perf_counter() - start
        raise SolverTimeout(str(exc), lower=1, upper=nv, witness=Coloring(tuple(range(1, nv + 1)), nv)) from None
    if not masks:
        return 1, Coloring((1,) * nv, 1)

    ptr, rest, degree = _search_arrays(nv, masks)
    greedy_order = sorted(range(nv), key=lambda v: (-int(degree[v]), v))
    greedy = _greedy_masks(nv, masks, greedy_order)
    best = Coloring(tuple(greedy), max(greedy))
    lower = 2
    m = 2
    while m < best.color_count:
        color = np.full(nv, -1, dtype=np.int64)
        classes = np.zeros(m, dtype=np.int64)
        order = np.zeros(nv, dtype=np.int64)
        next_color = np.zeros(nv, dtype=np.int64)
        used_before = np.zeros(nv, dtype=np.int64)
        meta = np.array([0, 0, 1, 0], dtype=np.int64)
        budget_nodes = min(FIRST_SLICE, NODES_PER_SLICE)
        while True:
            slice_nodes = budget_nodes
            if node_limit is not None:
                slice_nodes = max(1, min(slice_nodes, node_limit - stats.nodes))
            tick = time.perf_counter()
            status = kernels.color_search(
                ptr, rest, degree, m, color, classes, order, next_color, used_before, meta, slice_nodes
            )
            took = time.perf_counter() - tick
            if took < SLICE_SECONDS / 2:
                budget_nodes = min(2 * budget_nodes, NODES_PER_SLICE)
            elif took > SLICE_SECONDS:
                budget_nodes = max(budget_nodes // 2, 1)
            stats.nodes += int(meta[3])
            meta[3] = 0
            if status != kernels.PAUSED:
                break
            over_time = time_limit is not None and time.perf_counter() - start > time_limit
            over_nodes = node_limit is not None and stats.nodes >= node_limit
            if over_time or over_nodes:
                stats.seconds = time.perf_counter() - start
                raise SolverTimeout(
                    f"search budget exhausted while testing {m} colors",
                    lower=lower,
                    upper=best.color_count,
                    witness=best,
                )
        if status == kernels.FOUND:
            stats.seconds = time.perf_counter() - start
            return m, Coloring(tuple(int(c) + 1 for c in color), m)
        lower = m + 1
        m += 1
    stats.seconds = time.perf_counter() - start
    return best.color_count, best
