"""Published numeric facts about generalized Kneser hypergraphs, recomputed.

Each fact carries the provenance of its expected value:

* ``PAPER``   - a published value;
* ``DERIVED`` - computed here by an independent brute-force route;
* ``TRIVIAL`` - immediate from the definitions.

``run_facts`` returns the ledger sorted by identifier, so identical inputs
produce identical output regardless of evaluation order.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from .bounds import (
    formula_chi_KG_pairs,
    formula_chi_kg42,
    formula_chi_kg_pairs,
    largest_prime_factor,
    triangular_root,
    upper_bound_star,
)
from .coloring import (
    chromatic_number,
    is_proper,
    star_coloring_pairs,
)
from .core import (
    GroundContext,
    Hypergraph,
    KneserInstance,
    MultisetEdge,
    SetSystem,
    binomial_system,
    build_kneser,
    complete_hypergraph,
    is_s_disjoint,
    up_monotone_closure,
)
from .defect import colorability_defect, defect_pairs_formula
from .errors import SolverTimeout
from .oracles import brute_chromatic_number, brute_defect, random_hypergraph, random_system
from .representation import (
    is_convex,
    is_up_monotone,
    kg1_clique_test,
    represent_up_monotone,
    verify_representation,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-budget"

STAR_SWEEP_MAX_R = 8
LOWER_BOUND_SUITE_SIZE = 500
ORACLE_SUITE_SIZE = 200


@dataclass
class LedgerFact:
    identifier: str
    description: str
    expected: str
    provenance: str
    computed: str = ""
    status: str = ""

    def line(self) -> str:
        return f"{self.status.upper():<14} {self.identifier:<34} [{self.provenance}] expected={self.expected} computed={self.computed}  ({self.description})"


@dataclass
class Budget:
    """Wall-clock seconds per fact; ``None`` means unlimited."""

    seconds: float | None = None
    started: float = field(default_factory=time.perf_counter)

    def remaining(self) -> float | None:
        if self.seconds is None:
            return None
        return self.seconds - (time.perf_counter() - self.started)

    def check(self) -> None:
        left = self.remaining()
        if left is not None and left <= 0:
            raise SolverTimeout("fact budget exhausted", lower=0, upper=None)


@dataclass(frozen=True)
class FactSpec:
    identifier: str
    description: str
    expected: str
    provenance: str
    solver: bool
    run: Callable[[Budget], tuple[object, bool]]

    @property
    def scope(self) -> str:
        return self.identifier.split(".", 1)[0]


REGISTRY: list[FactSpec] = []


def fact(identifier: str, description: str, expected: object, provenance: str, solver: bool = False):
    def register(fn: Callable[[Budget], tuple[object, bool]]):
        REGISTRY.append(FactSpec(identifier, description, str(expected), provenance, solver, fn))
        return fn

    return register


def _chi(instance, budget: Budget) -> int:
    chi, witness = chromatic_number(instance, time_limit=budget.remaining())
    if not is_proper(instance, witness):
        raise AssertionError("solver returned an improper witness")
    return chi


# ---------------------------------------------------------------------------
# shared instances
# ---------------------------------------------------------------------------

SEC2_GROUND = GroundContext(3, (3, 2, 1))
SEC2_SYSTEM = SetSystem.from_sets(SEC2_GROUND, [(2, 3)])


def counterexample_system(n: int, s: int) -> SetSystem:
    """``{12, 13, ..., 1n, 23, 45}``."""
    ground = GroundContext.constant(n, s)
    return SetSystem.from_sets(ground, [(1, i) for i in range(2, n + 1)] + [(2, 3), (4, 5)])


def _hyper(nv: int, r: int, edges: Iterable[Iterable[int]], multiset: bool = True) -> Hypergraph:
    return Hypergraph(nv, r, tuple(MultisetEdge.from_members([v - 1 for v in e], nv) for e in edges), multiset)


# ---------------------------------------------------------------------------
# definitions
# ---------------------------------------------------------------------------


@fact("definitions.s-disjoint.a", "{12},{12},{23} with s=(3,2,1) are not s-disjoint", False, "PAPER")
def _(budget):
    v = is_s_disjoint([(1, 2), (1, 2), (2, 3)], SEC2_GROUND)
    return v, v is False


@fact("definitions.s-disjoint.b", "{12},{12},{13} with s=(3,2,1) are s-disjoint", True, "PAPER")
def _(budget):
    v = is_s_disjoint([(1, 2), (1, 2), (1, 3)], SEC2_GROUND)
    return v, v is True


@fact("definitions.s-disjoint.c", "{12},{13},{2} with s=(3,2,1) are s-disjoint", True, "PAPER")
def _(budget):
    v = is_s_disjoint([(1, 2), (1, 3), (2,)], SEC2_GROUND)
    return v, v is True


for _r, _want in ((1, 4), (2, 2), (3, 0)):

    def _defect_example(budget, r=_r, want=_want):
        value, cert = colorability_defect(SEC2_GROUND, r, SEC2_SYSTEM)
        return value, value == want and not cert.check(SEC2_GROUND, SEC2_SYSTEM)

    fact(f"definitions.defect-example.r{_r}", f"cd^{_r}_(3,2,1)({{23}})", _want, "PAPER")(_defect_example)


@fact("definitions.edge-counts.K", "|E(K^r_n)| = binom(n+r-1,r) - n for n<=6, 2<=r<=5", "0 mismatches", "PAPER")
def _(budget):
    bad = [(n, r) for n in range(1, 7) for r in range(2, 6) if len(complete_hypergraph(n, r, True).edges) != comb(n + r - 1, r) - n]
    return f"{len(bad)} mismatches", not bad


@fact("definitions.edge-counts.k", "|E(k^r_n)| = binom(n,r) for n<=6, 2<=r<=5", "0 mismatches", "PAPER")
def _(budget):
    bad = [(n, r) for n in range(1, 7) for r in range(2, 6) if len(complete_hypergraph(n, r, False).edges) != comb(n, r)]
    return f"{len(bad)} mismatches", not bad


@fact("definitions.complete-as-kneser", "K^r_n = KG^r_{r-1}(binom([n],1)) and k^r_n = kg^r_{r-1}(binom([n],1)), n<=6, r<=5", "0 mismatches", "PAPER")
def _(budget):
    bad = 0
    for n in range(1, 7):
        for r in range(2, 6):
            system = binomial_system(n, 1, r - 1)
            bad += build_kneser(KneserInstance(system, r, True)) != complete_hypergraph(n, r, True)
            bad += build_kneser(KneserInstance(system, r, False)) != complete_hypergraph(n, r, False)
    return f"{bad} mismatches", bad == 0


@fact("definitions.kg-equals-KG-s1", "KG^r_1(S) = kg^r_1(S) on 100 random systems", "0 mismatches", "PAPER")
def _(budget):
    rng = random.Random(21)
    bad = 0
    for _ in range(100):
        n = rng.randint(1, 5)
        system = random_system(rng, n, 7, (1,) * n)
        r = rng.randint(2, 4)
        a = build_kneser(KneserInstance(system, r, True)).edge_set
        b = build_kneser(KneserInstance(system, r, False)).edge_set
        bad += a != b
    return f"{bad} mismatches", bad == 0


# ---------------------------------------------------------------------------
# representability
# ---------------------------------------------------------------------------


@fact("representation.kg1.clique-test", "([4],{124,134,234}) is not KG^3_1-representable", False, "PAPER")
def _(budget):
    res = kg1_clique_test(_hyper(4, 3, [(1, 2, 4), (1, 3, 4), (2, 3, 4)], multiset=False))
    return res.representable, res.representable is False and res.missing_clique == (0, 1, 2)


def up_monotone_on_three() -> list[Hypergraph]:
    full = complete_hypergraph(3, 3, True).edges
    out = []
    for mask in range(1 << len(full)):
        h = Hypergraph(3, 3, tuple(e for i, e in enumerate(full) if mask >> i & 1))
        if is_up_monotone(h):
            out.append(h)
    return out


@fact("representation.up-monotone.round-trip", "every up-monotone 3-uniform hypergraph on [3] equals KG^3_2 of its representation", "all", "PAPER")
def _(budget):
    hs = up_monotone_on_three()
    ok = sum(verify_representation(h, represent_up_monotone(h)) for h in hs)
    return f"{ok}/{len(hs)}", ok == len(hs) and len(hs) > 0


@fact("representation.up-monotone.KG", "KG^r_{r-1}(S) is up-monotone on 60 random systems", "0 failures", "PAPER")
def _(budget):
    rng = random.Random(32)
    bad = 0
    for _ in range(60):
        n = rng.randint(1, 4)
        r = rng.randint(2, 4)
        system = random_system(rng, n, 6, (r - 1,) * n)
        bad += not is_up_monotone(build_kneser(KneserInstance(system, r, True)))
    return f"{bad} failures", bad == 0


@fact("representation.convex.113-223", "([3],{113,223}) is not convex", False, "PAPER")
def _(budget):
    v = is_convex(_hyper(3, 3, [(1, 1, 3), (2, 2, 3)]))
    return v, v is False


@fact("representation.convex.112-223", "([3],{112,223}) is convex", True, "PAPER")
def _(budget):
    v = is_convex(_hyper(3, 3, [(1, 1, 2), (2, 2, 3)]))
    return v, v is True


@fact("representation.convex.KG", "KG^r_s(S) is convex on 60 random systems", "0 failures", "PAPER")
def _(budget):
    rng = random.Random(33)
    bad = 0
    for _ in range(60):
        n = rng.randint(1, 4)
        r = rng.randint(2, 4)
        system = random_system(rng, n, 5, tuple(rng.randint(1, r - 1) for _ in range(n)))
        bad += not is_convex(build_kneser(KneserInstance(system, r, True)))
    return f"{bad} failures", bad == 0


@fact("representation.closure-same-chi", "up-monotone closure keeps the chromatic number (80 random hypergraphs)", "0 mismatches", "PAPER", solver=True)
def _(budget):
    rng = random.Random(34)
    bad = 0
    for _ in range(80):
        budget.check()
        h = random_hypergraph(rng, 6)
        r = max([h.r] + [bin(e.support_mask).count("1") for e in h.edges]) + rng.randint(0, 1)
        bad += _chi(h, budget) != _chi(up_monotone_closure(h, r), budget)
    return f"{bad} mismatches", bad == 0


# ---------------------------------------------------------------------------
# counterexamples to a defect-based upper estimate
# ---------------------------------------------------------------------------

EX1_N, EX1_R = 8, 9


@fact("counterexamples.star-system.chi-kg", "chi(kg^9_7({12,...,18,23,45}))", 2, "PAPER", solver=True)
def _(budget):
    chi = _chi(KneserInstance(counterexample_system(EX1_N, EX1_R - 2), EX1_R, False), budget)
    return chi, chi == 2


@fact("counterexamples.star-system.defect", "cd^9_7({12,...,18,23,45}) = 3r - 10", 3 * EX1_R - 10, "PAPER")
def _(budget):
    system = counterexample_system(EX1_N, EX1_R - 2)
    value, _ = colorability_defect(system.ground, EX1_R, system)
    return value, value == 3 * EX1_R - 10


@fact("counterexamples.star-system.exceeds", "cd > (r-1) chi(kg) at r=9, n=8", "17 > 16", "PAPER", solver=True)
def _(budget):
    system = counterexample_system(EX1_N, EX1_R - 2)
    value, _ = colorability_defect(system.ground, EX1_R, system)
    chi = _chi(KneserInstance(system, EX1_R, False), budget)
    return f"{value} > {(EX1_R - 1) * chi}", value > (EX1_R - 1) * chi


@fact("counterexamples.star-system.family", "cd^r_{r-2} = 3r - 10 and chi(kg) = 2 for (n, r) in {(5,4),(6,5),(7,6)}", "0 mismatches", "PAPER", solver=True)
def _(budget):
    bad = 0
    for n, r in ((5, 4), (6, 5), (7, 6)):
        system = counterexample_system(n, r - 2)
        value, _ = colorability_defect(system.ground, r, system)
        bad += value != 3 * r - 10
        bad += _chi(KneserInstance(system, r, False), budget) != 2
    return f"{bad} mismatches", bad == 0


@fact("counterexamples.pairs.star-coloring", "S -> min(min S, n-2) properly colors kg^5_4(binom([6],2))", "proper, 4 colors", "PAPER")
def _(budget):
    c = star_coloring_pairs(6, 5)
    ok = is_proper(KneserInstance(binomial_system(6, 2, 4), 5, False), c)
    return f"{'proper' if ok else 'improper'}, {c.color_count} colors", ok and c.color_count == 4


@fact("counterexamples.pairs.chi-kg", "chi(kg^5_4(binom([6],2))) = n - floor(r/2)", 4, "PAPER", solver=True)
def _(budget):
    chi = _chi(KneserInstance(binomial_system(6, 2, 4), 5, False), budget)
    return chi, chi == 4 == formula_chi_kg_pairs(6, 5)


@fact("counterexamples.pairs.defect", "cd^5_4(binom([6],2)) = max(n(r-1) - r, 0)", 19, "PAPER")
def _(budget):
    value, _ = colorability_defect(GroundContext.constant(6, 4), 5, binomial_system(6, 2, 4))
    return value, value == 19 == defect_pairs_formula(6, 5)


@fact("counterexamples.pairs.exceeds", "(r-1) chi(kg) < cd at n=6, r=5", "16 < 19", "PAPER", solver=True)
def _(budget):
    chi = _chi(KneserInstance(binomial_system(6, 2, 4), 5, False), budget)
    value, _ = colorability_defect(GroundContext.constant(6, 4), 5, binomial_system(6, 2, 4))
    return f"{4 * chi} < {value}", 4 * chi < value


@fact("counterexamples.pairs.defect-formula", "cd^r_{r-1}(binom([n],2)) = max(n(r-1)-r, 0) for n in 4..6, r in 3..5", "0 mismatches", "PAPER")
def _(budget):
    bad = 0
    for n in (4, 5, 6):
        for r in (3, 4, 5):
            value, _ = colorability_defect(GroundContext.constant(n, r - 1), r, binomial_system(n, 2, r - 1))
            bad += value != defect_pairs_formula(n, r)
    return f"{bad} mismatches", bad == 0


# ---------------------------------------------------------------------------
# prime-factor lower bound
# ---------------------------------------------------------------------------


def lower_bound_instances(count: int = LOWER_BOUND_SUITE_SIZE, seed: int = 51):
    rng = random.Random(seed)
    for _ in range(count):
        r = rng.choice((2, 3, 4, 6))
        q = largest_prime_factor(r)
        n = rng.randint(2, 5)
        s = tuple(rng.randint(1, q - 1) for _ in range(n))
        yield r, random_system(rng, n, 8, s, min_members=2)


@fact("lower-bound.random-suite", "ceil(cd/(r-1)) <= chi(KG) on 500 random instances with s_i < lpf(r)", "0 violations", "PAPER", solver=True)
def _(budget):
    bad = 0
    total = 0
    for r, system in lower_bound_instances():
        budget.check()
        value, _ = colorability_defect(system.ground, r, system)
        chi = _chi(KneserInstance(system, r, True), budget)
        total += 1
        bad += -(-value // (r - 1)) > chi
    return f"{bad} violations / {total}", bad == 0 and total >= LOWER_BOUND_SUITE_SIZE


@fact("lower-bound.empty-system", "chi(kg(empty)) = 0 while cd^2_(5,1,1)(empty) = 3 > 0", "0, 3", "PAPER", solver=True)
def _(budget):
    ground = GroundContext(3, (5, 1, 1))
    value, _ = colorability_defect(ground, 2, SetSystem(ground, ()))
    chi = _chi(KneserInstance(SetSystem(ground, ()), 2, False), budget)
    return f"{chi}, {value}", chi == 0 and value == 3


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

KG_PAIRS_CASES = ((3, 4), (4, 4), (4, 5), (5, 4), (5, 5), (6, 4))

for _n, _r in KG_PAIRS_CASES:

    def _kg_pairs(budget, n=_n, r=_r):
        chi = _chi(KneserInstance(binomial_system(n, 2, r - 1), r, False), budget)
        return chi, chi == formula_chi_kg_pairs(n, r)

    fact(f"formulas.kg-pairs.n{_n}-r{_r}", f"chi(kg^{_r}_{_r - 1}(binom([{_n}],2))) matches the piecewise formula", formula_chi_kg_pairs(_n, _r), "PAPER", solver=True)(_kg_pairs)

for _n in (4, 5, 6, 7):

    def _kg42(budget, n=_n):
        chi = _chi(KneserInstance(binomial_system(n, 2, 2), 4, False), budget)
        return chi, chi == formula_chi_kg42(n)

    fact(f"formulas.kg42.n{_n}", f"chi(kg^4_2(binom([{_n}],2))) = n - t(n)", formula_chi_kg42(_n), "PAPER", solver=True)(_kg42)

for _n in (4, 5, 6):

    def _KG42(budget, n=_n):
        chi = _chi(KneserInstance(binomial_system(n, 2, 2), 4, True), budget)
        return chi, chi == n - 2 == formula_chi_KG_pairs(n, 4, 2) == upper_bound_star(n, 2, 4, 2)

    fact(f"formulas.KG42.n{_n}", f"chi(KG^4_2(binom([{_n}],2))) = n - 2 = formula = (*)", _n - 2, "DERIVED", solver=True)(_KG42)


@fact("formulas.KG42.not-n-minus-1", "chi(KG^4_2(binom([n],2))) = n - 1 is refuted for n = 4,5,6", "n-2 != n-1", "DERIVED", solver=True)
def _(budget):
    values = [_chi(KneserInstance(binomial_system(n, 2, 2), 4, True), budget) for n in (4, 5, 6)]
    ok = values == [2, 3, 4]
    return ("n-2 != n-1" if ok else f"{values}"), ok


def KG_pairs_domain(max_vertices: int = 21):
    for n in range(2, 8):
        if comb(n, 2) > max_vertices:
            continue
        for r in range(3, 2 * n + 1):
            for s in range(2, r):
                try:
                    formula_chi_KG_pairs(n, r, s)
                except ValueError:
                    continue
                yield n, r, s


@fact("formulas.KG-pairs.suite", "chi(KG^r_s(binom([n],2))) = 1 + n - floor((2r-1)/s) on its domain, <= 21 vertices", "0 mismatches", "PAPER", solver=True)
def _(budget):
    bad = total = 0
    for n, r, s in KG_pairs_domain():
        budget.check()
        total += 1
        bad += _chi(KneserInstance(binomial_system(n, 2, s), r, True), budget) != formula_chi_KG_pairs(n, r, s)
    return f"{bad} mismatches / {total}", bad == 0 and total > 0


def star_bound_domain(max_vertices: int = 21, max_r: int = STAR_SWEEP_MAX_R):
    for n in range(2, max_vertices + 2):
        for k in range(2, n + 1):
            if comb(n, k) > max_vertices:
                continue
            for r in range(3, max_r + 1):
                for s in range(2, r):
                    if r * k <= s * n:
                        yield n, k, r, s


@fact("formulas.star-bound.suite", f"chi(KG^r_s(binom([n],k))) <= (*) on its range, <= 21 vertices, r <= {STAR_SWEEP_MAX_R}", "0 violations", "PAPER", solver=True)
def _(budget):
    bad = total = 0
    for n, k, r, s in star_bound_domain():
        budget.check()
        total += 1
        bad += _chi(KneserInstance(binomial_system(n, k, s), r, True), budget) > upper_bound_star(n, k, r, s)
    return f"{bad} violations / {total}", bad == 0 and total > 0


@fact("formulas.kg42.integer-form", "integer triangular root equals floor(sqrt(2n + 1/4) - 1/2) for n <= 10^6", "0 mismatches", "DERIVED")
def _(budget):
    ns = np.arange(0, 10**6 + 1, dtype=np.int64)
    printed = np.floor(np.sqrt(2 * ns + 0.25) - 0.5).astype(np.int64)
    exact = np.fromiter((triangular_root(n) for n in range(10**6 + 1)), dtype=np.int64, count=10**6 + 1)
    bad = int(np.count_nonzero(printed != exact))
    return f"{bad} mismatches", bad == 0


# ---------------------------------------------------------------------------
# oracle equivalence
# ---------------------------------------------------------------------------


def chi_corpus(count: int = ORACLE_SUITE_SIZE, seed: int = 111):
    rng = random.Random(seed)
    for i in range(count):
        if i % 2:
            yield random_hypergraph(rng, 8, min_vertices=3)
        else:
            r = rng.randint(2, 4)
            n = rng.randint(3, 5)
            system = random_system(rng, n, 8, tuple(rng.randint(1, r - 1) for _ in range(n)), min_members=3)
            yield build_kneser(KneserInstance(system, r, rng.random() < 0.5))


def defect_corpus(count: int = ORACLE_SUITE_SIZE, seed: int = 112):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 5)
        r = rng.randint(1, 4 if n <= 4 else 3)
        s = tuple(rng.randint(1, 4) for _ in range(n))
        yield r, random_system(rng, n, 6, s)


@fact("oracles.chi-oracle", "exact solver vs. set-partition enumeration, 200 hypergraphs with <= 8 vertices", "0 mismatches", "DERIVED", solver=True)
def _(budget):
    bad = total = 0
    for h in chi_corpus():
        budget.check()
        total += 1
        bad += _chi(h, budget) != brute_chromatic_number(h)
    return f"{bad} mismatches / {total}", bad == 0 and total >= ORACLE_SUITE_SIZE


@fact("oracles.defect-oracle", "defect branch-and-bound vs. tuple enumeration, 200 instances with n <= 5, r <= 4", "0 mismatches", "DERIVED")
def _(budget):
    bad = total = 0
    for r, system in defect_corpus():
        budget.check()
        total += 1
        value, cert = colorability_defect(system.ground, r, system)
        bad += value != brute_defect(system.ground, r, system) or bool(cert.check(system.ground, system))
    return f"{bad} mismatches / {total}", bad == 0 and total >= ORACLE_SUITE_SIZE


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

SCOPES = ("definitions", "representation", "counterexamples", "lower-bound", "formulas", "oracles")


def select(scope: str | None = None, ids: Iterable[str] | None = None) -> list[FactSpec]:
    specs = REGISTRY
    if scope and scope != "all":
        specs = [f for f in specs if f.scope == scope or f.identifier.startswith(scope)]
    if ids is not None:
        wanted = set(ids)
        specs = [f for f in specs if f.identifier in wanted]
    return sorted(specs, key=lambda f: f.identifier)


def run_fact(spec: FactSpec, budget_seconds: float | None = None) -> LedgerFact:
    out = LedgerFact(spec.identifier, spec.description, spec.expected, spec.provenance)
    if spec.solver and budget_seconds is not None and budget_seconds <= 0:
        out.computed, out.status = "-", SKIPPED
        return out
    try:
        computed, ok = spec.run(Budget(budget_seconds))
    except SolverTimeout as exc:
        bounds = f"[{exc.lower}, {exc.upper}]" if exc.upper is not None else "-"
        out.computed, out.status = bounds, SKIPPED
        return out
    out.computed = str(computed)
    out.status = PASS if ok else FAIL
    return out


def run_facts(scope: str | None = None, budget_seconds: float | None = None, ids: Iterable[str] | None = None) -> list[LedgerFact]:
    return [run_fact(spec, budget_seconds) for spec in select(scope, ids)]


def fact_to_json(f: LedgerFact) -> dict:
    return asdict(f)
