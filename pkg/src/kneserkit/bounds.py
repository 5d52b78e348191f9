"""Closed-form chromatic formulas and bounds, and per-instance bound reports.

Every returned value is computed in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb, isqrt

from .coloring import chromatic_number
from .core import GroundContext, KneserInstance, SetSystem, popcount
from .defect import colorability_defect
from .errors import InputError, SolverTimeout


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def largest_prime_factor(r: int) -> int:
    if r < 2:
        raise InputError(f"largest prime factor needs r >= 2, got {r}")
    best, p = 1, 2
    while p * p <= r:
        while r % p == 0:
            best, r = p, r // p
        p += 1
    # whatever is left is a prime larger than every factor removed
    return r if r > 1 else best


def theorem_condition_met(ground: GroundContext, r: int) -> bool:
    """Every ``s_i`` is below the largest prime factor of ``r``."""
    q = largest_prime_factor(r)
    return all(s < q for s in ground.s)


def lower_bound_theorem(ground: GroundContext, r: int, system: SetSystem) -> int | None:
    """``ceil(cd^r_s(S) / (r - 1))`` when the prime-factor condition holds.

    Returns None when some ``s_i`` is not below the largest prime factor of
    ``r``; no valid bound is known there.
    """
    if r < 2:
        raise InputError(f"r must be >= 2, got {r}")
    if not theorem_condition_met(ground, r):
        return None
    cd, _ = colorability_defect(ground, r, system)
    return _ceil_div(cd, r - 1)


def upper_bound_star(n: int, k: int, r: int, s: int) -> int:
    """``1 + ceil((ns - rk + 1) / (s * floor((r - 1) / s)))`` for ``KG^r_s(binom([n], k))``."""
    if not (n >= k >= 2 and r > s >= 2 and r * k <= s * n):
        raise InputError(f"need n >= k >= 2, r > s >= 2, rk <= sn; got n={n}, k={k}, r={r}, s={s}")
    q = (r - 1) // s
    return 1 + _ceil_div(n * s - r * k + 1, s * q)


def formula_chi_KG_pairs(n: int, r: int, s: int) -> int:
    """``1 + n - floor((2r - 1) / s)``, the value of ``chi(KG^r_s(binom([n], 2)))``.

    Valid for ``r/2 <= s < r - 1`` (which forces ``floor((r-1)/s) == 1``)
    inside the range of :func:`upper_bound_star`. The case ``s = r - 1``
    satisfies only one of the two stated conditions and is rejected.
    """
    if not (2 * s >= r and s < r - 1 and (r - 1) // s == 1):
        raise InputError(f"need r/2 <= s < r-1 and floor((r-1)/s) = 1; got r={r}, s={s}")
    if not (n >= 2 and 2 * r <= s * n):
        raise InputError(f"need n >= 2 and 2r <= sn; got n={n}, r={r}, s={s}")
    return 1 + n - (2 * r - 1) // s


def formula_chi_kg_pairs(n: int, r: int) -> int:
    """Value of ``chi(kg^r_{r-1}(binom([n], 2)))``.

    ``ceil(binom(n, 2) / (r - 1))`` for ``n < r``, else ``n - floor(r / 2)``.
    Only for ``r >= 3``: at ``r = 2`` this is the Kneser graph ``KG(n, 2)``,
    whose chromatic number is ``n - 2``.
    """
    if n < 2 or r < 3:
        raise InputError(f"need n >= 2 and r >= 3, got n={n}, r={r}")
    if n < r:
        return _ceil_div(comb(n, 2), r - 1)
    return n - r // 2


def triangular_root(n: int) -> int:
    """Largest ``t >= 0`` with ``t(t+1)/2 <= n``; equals ``floor(sqrt(2n + 1/4) - 1/2)``."""
    if n < 0:
        raise InputError("n must be >= 0")
    # t(t+1)/2 <= n  <=>  2t + 1 <= sqrt(8n + 1)
    return (isqrt(8 * n + 1) - 1) // 2


def formula_chi_kg42(n: int) -> int:
    """``n - floor(sqrt(2n + 1/4) - 1/2)``, the value of ``chi(kg^4_2(binom([n], 2)))``."""
    if n < 4:
        raise InputError(f"need n >= 4, got {n}")
    return n - triangular_root(n)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    description: str
    r: int
    defect: int
    condition_met: bool
    lower_bound: int | None = None
    chi_KG: int | None = None
    chi_kg: int | None = None
    upper_star: int | None = None

    def problems(self) -> list[str]:
        out = []
        if self.condition_met and self.chi_KG is not None and self.lower_bound is not None:
            if self.lower_bound > self.chi_KG:
                out.append("lower bound exceeds chi(KG)")
        if self.chi_KG is not None and self.chi_kg is not None and self.chi_kg > self.chi_KG:
            out.append("chi(kg) exceeds chi(KG)")
        if self.upper_star is not None and self.chi_KG is not None and self.chi_KG > self.upper_star:
            out.append("chi(KG) exceeds the (*) upper bound")
        return out

    def to_json(self) -> dict:
        return asdict(self)


def complete_uniform_k(system: SetSystem) -> int | None:
    """``k`` if the system is exactly ``binom([n], k)``, else None."""
    if not len(system):
        return None
    sizes = {popcount(x) for x in system.members}
    if len(sizes) != 1:
        return None
    k = sizes.pop()
    return k if len(system) == comb(system.ground.n, k) else None


def describe(ground: GroundContext, r: int, system: SetSystem) -> str:
    s = str(ground.s[0]) if ground.is_constant() else "(" + ",".join(map(str, ground.s)) + ")"
    k = complete_uniform_k(system)
    if k:
        fam = f"binom([{ground.n}],{k})"
    else:
        sep = "" if ground.n < 10 else "-"
        fam = "{" + ",".join(sep.join(map(str, S)) for S in system.sets) + "}"
    return f"r={r} s={s} S={fam}"


def bound_report(
    ground: GroundContext,
    r: int,
    system: SetSystem,
    time_limit: float | None = 60.0,
) -> BoundReport:
    """Defect, defect lower bound, both chromatic numbers and (*).

    Chromatic numbers whose search exceeds ``time_limit`` (seconds, per
    hypergraph) are left as None.
    """
    if system.ground != ground:
        system = SetSystem(ground, system.members)
    cd, _ = colorability_defect(ground, r, system)
    cond = theorem_condition_met(ground, r)
    lower = _ceil_div(cd, r - 1) if cond else None

    def solve(multiset: bool) -> int | None:
        if multiset and any(x >= r for x in ground.s):
            return None
        if time_limit is not None and time_limit <= 0:
            return None
        try:
            chi, _ = chromatic_number(KneserInstance(system, r, multiset), time_limit=time_limit)
        except SolverTimeout:
            return None
        return chi

    upper = None
    k = complete_uniform_k(system)
    if k is not None and ground.is_constant():
        try:
            upper = upper_bound_star(ground.n, k, r, ground.s[0])
        except InputError:
            upper = None
    return BoundReport(
        description=describe(ground, r, system),
        r=r,
        defect=cd,
        condition_met=cond,
        lower_bound=lower,
        chi_KG=solve(True),
        chi_kg=solve(False),
        upper_star=upper,
    )
