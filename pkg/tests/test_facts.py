from __future__ import annotations

from kneserkit.facts import FAIL, PASS, REGISTRY, SCOPES, SKIPPED, run_facts, select


def test_identifiers_unique_and_scoped():
    ids = [f.identifier for f in REGISTRY]
    assert len(ids) == len(set(ids))
    assert {f.scope for f in REGISTRY} <= set(SCOPES)
    assert all(f.provenance in ("PAPER", "DERIVED", "TRIVIAL") for f in REGISTRY)


def test_select_filters_and_sorts():
    specs = select("definitions")
    assert specs and all(f.identifier.startswith("definitions.") for f in specs)
    assert [f.identifier for f in specs] == sorted(f.identifier for f in specs)


def test_zero_budget_skips_only_solver_facts():
    ledger = run_facts("formulas", budget_seconds=0)
    by_id = {f.identifier: f for f in ledger}
    assert by_id["formulas.kg42.n5"].status == SKIPPED
    assert by_id["formulas.kg42.integer-form"].status == PASS
    assert all(f.status != FAIL for f in ledger)


def test_quick_scopes_pass():
    for scope in ("definitions", "representation", "counterexamples"):
        assert all(f.status == PASS for f in run_facts(scope)), scope


def test_n_minus_one_is_refuted():
    (fact,) = run_facts(ids=["formulas.KG42.not-n-minus-1"])
    assert fact.status == PASS and fact.provenance == "DERIVED"
