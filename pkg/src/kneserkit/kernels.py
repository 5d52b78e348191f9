"""Hot loops: Kneser edge enumeration and the exact coloring search.

Each kernel has a numba path and a fallback, chosen once at import by
``KNESERKIT_DISABLE_NUMBA``. Edge enumeration falls back to a chunked,
vectorized numpy routine; both variants stay importable so they can be
compared in one process. The coloring search falls back to the same loop run
by the interpreter.

Vertex sets in the coloring search are int64 bitmasks, so at most 63
vertices are supported there.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, islice

import numpy as np

from ._accel import USE_NUMBA, njit

MAX_SEARCH_VERTICES = 63

# search status codes
FOUND = 1
EXHAUSTED = 0
PAUSED = 2


# ---------------------------------------------------------------------------
# Kneser edge enumeration
# ---------------------------------------------------------------------------


def _kneser_edges_loop(incidence, cap, r, distinct):
    """Odometer over r-combinations of the rows of ``incidence``.

    Returns an (E, r) array of accepted index rows in lexicographic order.
    A row is accepted when the column sums of the chosen incidence rows stay
    within ``cap`` and the row uses at least two distinct indices.
    """
    m = incidence.shape[0]
    n = incidence.shape[1]
    out = np.empty((16, r), dtype=np.int64)
    found = 0
    if r < 1 or m == 0 or (distinct and r > m):
        return out[:0]
    idx = np.empty(r, dtype=np.int64)
    for j in range(r):
        idx[j] = j if distinct else 0
    counts = np.empty(n, dtype=np.int64)
    while True:
        if idx[0] != idx[r - 1]:
            for i in range(n):
                counts[i] = 0
            ok = True
            for j in range(r):
                row = idx[j]
                for i in range(n):
                    counts[i] += incidence[row, i]
            for i in range(n):
                if counts[i] > cap[i]:
                    ok = False
                    break
            if ok:
                if found == out.shape[0]:
                    grown = np.empty((2 * found, r), dtype=np.int64)
                    grown[:found] = out
                    out = grown
                out[found] = idx
                found += 1
        # advance
        pos = r - 1
        if distinct:
            while pos >= 0 and idx[pos] == m - r + pos:
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for j in range(pos + 1, r):
                idx[j] = idx[j - 1] + 1
        else:
            while pos >= 0 and idx[pos] == m - 1:
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for j in range(pos + 1, r):
                idx[j] = idx[pos]
    return out[:found]


_kneser_edges_jit = njit(_kneser_edges_loop)


def _kneser_edges_numpy(incidence, cap, r, distinct, chunk=1 << 16):
    m = incidence.shape[0]
    gen = combinations(range(m), r) if distinct else combinations_with_replacement(range(m), r)
    accepted = []
    while True:
        block = np.fromiter(
            (x for row in islice(gen, chunk) for x in row), dtype=np.int64
        )
        if block.size == 0:
            break
        rows = block.reshape(-1, r)
        counts = incidence[rows].sum(axis=1)
        ok = np.all(counts <= cap, axis=1) & (rows[:, 0] != rows[:, -1])
        accepted.append(rows[ok])
    if not accepted:
        return np.empty((0, r), dtype=np.int64)
    return np.concatenate(accepted)


def enumerate_kneser_edges(incidence: np.ndarray, cap: np.ndarray, r: int, distinct: bool) -> np.ndarray:
    incidence = np.ascontiguousarray(incidence, dtype=np.int64)
    cap = np.ascontiguousarray(cap, dtype=np.int64)
    if USE_NUMBA:
        return _kneser_edges_jit(incidence, cap, r, distinct)
    return _kneser_edges_numpy(incidence, cap, r, distinct)


# ---------------------------------------------------------------------------
# Exact coloring search
# ---------------------------------------------------------------------------


@njit
def _forbidden(v, c, ptr, rest, classes):
    cls = classes[c]
    for k in range(ptr[v], ptr[v + 1]):
        if (rest[k] & ~cls) == 0:
            return True
    return False


@njit
def color_search(ptr, rest, degree, m, color, classes, order, next_color, used_before, meta, max_nodes):
    """Resumable DSATUR-style backtracking for an m-coloring.

    Vertex v may not take color c when some dependency mask containing v
    (stored without v's own bit in ``rest[ptr[v]:ptr[v+1]]``) is already
    covered by class c. ``meta`` holds ``[depth, used, fresh, nodes]`` so a
    paused search continues exactly where it stopped.

    Returns FOUND (``color`` holds the coloring), EXHAUSTED, or PAUSED.
    """
    nv = degree.shape[0]
    depth = meta[0]
    used = meta[1]
    fresh = meta[2]
    nodes = 0
    while True:
        if fresh == 1:
            if depth == nv:
                meta[0] = depth
                meta[1] = used
                meta[2] = fresh
                meta[3] += nodes
                return FOUND
            # most forbidden colors, then degree, then lowest index
            best = -1
            best_sat = -1
            best_deg = -1
            for v in range(nv):
                if color[v] >= 0:
                    continue
                sat = 0
                for c in range(used):
                    if _forbidden(v, c, ptr, rest, classes):
                        sat += 1
                if sat > best_sat or (sat == best_sat and degree[v] > best_deg):
                    best = v
                    best_sat = sat
                    best_deg = degree[v]
            order[depth] = best
            next_color[depth] = 0
            used_before[depth] = used
            fresh = 0
        v = order[depth]
        limit = used_before[depth] + 1
        if limit > m:
            limit = m
        c = next_color[depth]
        while c < limit and _forbidden(v, c, ptr, rest, classes):
            c += 1
        if c < limit:
            color[v] = c
            classes[c] |= np.int64(1) << np.int64(v)
            next_color[depth] = c + 1
            used = used_before[depth]
            if c + 1 > used:
                used = c + 1
            depth += 1
            fresh = 1
            nodes += 1
            if nodes >= max_nodes:
                meta[0] = depth
                meta[1] = used
                meta[2] = fresh
                meta[3] += nodes
                return PAUSED
        else:
            if depth == 0:
                meta[0] = 0
                meta[1] = 0
                meta[2] = 0
                meta[3] += nodes
                return EXHAUSTED
            depth -= 1
            u = order[depth]
            classes[color[u]] &= ~(np.int64(1) << np.int64(u))
            color[u] = -1
            used = used_before[depth]
