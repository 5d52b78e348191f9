"""Exact colorability defect with checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GroundContext, SetSystem, elements_of, is_s_disjoint, popcount
from .errors import CapacityError, InputError

MAX_GROUND_FOR_SUBSET_SCAN = 24


@dataclass(frozen=True)
class DefectCertificate:
    """Covers ``R_1..R_r`` (possibly repeated or empty) realizing a defect value."""

    covers: tuple[tuple[int, ...], ...]
    value: int

    def check(self, ground: GroundContext, system: SetSystem) -> list[str]:
        """Problems with this certificate; empty when it is valid."""
        problems = []
        if not is_s_disjoint(self.covers, ground):
            problems.append("covers are not s-disjoint")
        members = system.members
        for R in self.covers:
            mask = 0
            for i in R:
                mask |= 1 << (i - 1)
            for S in members:
                if S & mask == S:
                    problems.append(f"cover {R} contains member {elements_of(S)}")
        if self.value < 0:
            problems.append("negative value")
        if self.value != ground.nbar - sum(len(R) for R in self.covers):
            problems.append("value does not match the covers")
        return problems


def _free_mask_table(ground: GroundContext, system: SetSystem) -> np.ndarray:
    n = ground.n
    if n > MAX_GROUND_FOR_SUBSET_SCAN:
        raise CapacityError(f"subset scan over 2^{n} sets exceeds the 2^{MAX_GROUND_FOR_SUBSET_SCAN} cap")
    xs = np.arange(1 << n, dtype=np.int64)
    free = np.ones(1 << n, dtype=bool)
    for S in system.members:
        free &= (xs & S) != S
    return free


def s_free_sets(ground: GroundContext, system: SetSystem) -> list[tuple[int, ...]]:
    """Maximal subsets of ``[n]`` containing no member of the system."""
    return [elements_of(x) for x in _maximal_free_masks(ground, system)]


def _maximal_free_masks(ground: GroundContext, system: SetSystem) -> list[int]:
    n = ground.n
    free = _free_mask_table(ground, system)
    xs = np.arange(1 << n, dtype=np.int64)
    maximal = free.copy()
    for i in range(n):
        bit = 1 << i
        without = (xs & bit) == 0
        # X is not maximal if X + i is still free
        maximal[without] &= ~free[xs[without] | bit]
    return sorted((int(x) for x in np.flatnonzero(maximal)), key=elements_of)


def colorability_defect(ground: GroundContext, r: int, system: SetSystem) -> tuple[int, DefectCertificate]:
    """``cd^r_s(S)`` and a certificate attaining it.

    Free sets are closed under taking subsets, so an optimal choice can be
    found among maximal free sets, counting element ``i`` at most ``s_i``
    times, and then trimmed to an s-disjoint family. The maximization runs
    as a memoized branch-and-bound over multisets of maximal free sets,
    largest sets first.
    """
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if len(system) and system.ground.n != ground.n:
        raise InputError("system and ground context disagree on n")
    n = ground.n
    candidates = sorted(_maximal_free_masks(ground, system), key=lambda x: (-popcount(x), elements_of(x)))
    candidates = [x for x in candidates if x]
    k = len(candidates)
    # union of candidates[j:] for the bound
    tail_union = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        tail_union[j] = tail_union[j + 1] | candidates[j]
    tail_elems = [elements_of(u) for u in tail_union]
    cand_elems = [elements_of(x) for x in candidates]

    memo: dict[tuple[int, int, tuple[int, ...]], tuple[int, int]] = {}

    def bound(start: int, left: int, cap: tuple[int, ...]) -> int:
        return sum(min(cap[i - 1], left) for i in tail_elems[start])

    def best(start: int, left: int, cap: tuple[int, ...]) -> int:
        """Max extra coverage using ``left`` more covers from candidates[start:]."""
        if left == 0 or start == k:
            return 0
        key = (start, left, cap)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        limit = bound(start, left, cap)
        value, choice = 0, -1
        for j in range(start, k):
            if value >= limit:
                break
            if bound(j, left, cap) <= value:
                # tails only shrink from here
                break
            gain = 0
            new_cap = list(cap)
            for i in cand_elems[j]:
                if new_cap[i - 1] > 0:
                    new_cap[i - 1] -= 1
                    gain += 1
            if gain == 0:
                continue
            total = gain + best(j, left - 1, tuple(new_cap))
            if total > value:
                value, choice = total, j
        memo[key] = (value, choice)
        return value

    cap0 = tuple(min(s, r) for s in ground.s)
    covered = best(0, r, cap0)

    # replay the recorded choices and trim to an s-disjoint family
    chosen = []
    start, left, cap = 0, r, cap0
    while left and start < k:
        _, j = memo.get((start, left, cap), (0, -1))
        if j < 0:
            break
        chosen.append(candidates[j])
        new_cap = list(cap)
        for i in cand_elems[j]:
            if new_cap[i - 1] > 0:
                new_cap[i - 1] -= 1
        start, left, cap = j, left - 1, tuple(new_cap)
    remaining = list(ground.s)
    covers = []
    for x in chosen:
        kept = []
        for i in elements_of(x):
            if remaining[i - 1] > 0:
                remaining[i - 1] -= 1
                kept.append(i)
        covers.append(tuple(kept))
    covers += [()] * (r - len(covers))
    cert = DefectCertificate(tuple(covers), ground.nbar - covered)
    problems = cert.check(ground, system)
    if problems or sum(len(R) for R in covers) != covered:
        raise AssertionError(f"internal error: invalid defect certificate ({problems})")
    return cert.value, cert


def defect_pairs_formula(n: int, r: int) -> int:
    """``max(n(r-1) - r, 0)``, the closed form for ``cd^r_{r-1}(binom([n], 2))``."""
    if n < 2 or r < 2:
        raise InputError(f"need n >= 2 and r >= 2, got n={n}, r={r}")
    return max(n * (r - 1) - r, 0)
