"""Brute-force reference computations.

These share no search code with the solvers they check: chromatic numbers
come from enumerating set partitions, defects from scanning every tuple of
free sets, Kneser edges from itertools over the literal set definition.
Only usable at small sizes.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

import numpy as np

from .core import GroundContext, Hypergraph, KneserInstance, MultisetEdge, SetSystem


def set_partitions(items: list[int]):
    """All partitions of ``items`` into non-empty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def brute_chromatic_number(h: Hypergraph) -> int:
    """Fewest blocks in a partition of the vertices with no edge inside a block."""
    nv = h.vertex_count
    if nv == 0:
        return 0
    supports = [set(v for v, k in enumerate(e.multiplicity) if k) for e in h.edges]
    best = nv
    for part in set_partitions(list(range(nv))):
        if len(part) >= best:
            continue
        if all(not any(sup <= set(block) for sup in supports) for block in part):
            best = len(part)
    return best


def brute_kneser_edges(instance: KneserInstance) -> set[MultisetEdge]:
    sets = [frozenset(S) for S in instance.system.sets]
    m, r, s = len(sets), instance.r, instance.ground.s
    gen = combinations_with_replacement(range(m), r) if instance.multiset else combinations(range(m), r)
    out = set()
    for c in gen:
        if len(set(c)) < 2:
            continue
        if all(sum(1 for j in c if i in sets[j]) <= s[i - 1] for i in range(1, instance.ground.n + 1)):
            out.add(MultisetEdge.from_members(c, m))
    return out


def brute_defect(ground: GroundContext, r: int, system: SetSystem) -> int:
    """``nbar - max sum |R_j|`` over all r-multisets of free sets that are s-disjoint."""
    n = ground.n
    sets = [frozenset(S) for S in system.sets]
    free = []
    for x in range(1 << n):
        R = frozenset(i + 1 for i in range(n) if x >> i & 1)
        if not any(S <= R for S in sets):
            free.append(R)
    inc = np.array([[int(i in R) for i in range(1, n + 1)] for R in free], dtype=np.int64)
    sizes = inc.sum(axis=1)
    cap = np.array(ground.s, dtype=np.int64)
    rows = np.array(list(combinations_with_replacement(range(len(free)), r)), dtype=np.int64)
    best = 0
    for start in range(0, len(rows), 1 << 16):
        block = rows[start : start + (1 << 16)]
        ok = np.all(inc[block].sum(axis=1) <= cap, axis=1)
        if ok.any():
            best = max(best, int(sizes[block[ok]].sum(axis=1).max()))
    return ground.nbar - best


# ---------------------------------------------------------------------------
# random corpora
# ---------------------------------------------------------------------------


def random_system(rng: random.Random, n: int, max_members: int, s: tuple[int, ...], min_members: int = 0) -> SetSystem:
    ground = GroundContext(n, s)
    universe = list(range(1, 1 << n))
    m = rng.randint(min(min_members, len(universe)), min(max_members, len(universe)))
    return SetSystem(ground, tuple(rng.sample(universe, m)))


def random_hypergraph(rng: random.Random, max_vertices: int = 8, min_vertices: int = 1) -> Hypergraph:
    nv = rng.randint(min_vertices, max_vertices)
    r = rng.randint(2, 4)
    multiset = rng.random() < 0.5
    pool = [c for c in (combinations_with_replacement(range(nv), r) if multiset else combinations(range(nv), r)) if c[0] != c[-1]]
    k = rng.randint(0, min(len(pool), 3 * nv))
    edges = [MultisetEdge.from_members(c, nv) for c in rng.sample(pool, k)]
    return Hypergraph(nv, r, tuple(edges), multiset)
