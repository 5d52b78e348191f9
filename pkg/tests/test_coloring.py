from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kneserkit.coloring import (
    ColorClassOracle,
    Coloring,
    SearchStats,
    chromatic_number,
    greedy_coloring,
    is_proper,
    minimal_masks,
    star_coloring_pairs,
    verify_coloring,
)
from kneserkit.core import GroundContext, Hypergraph, KneserInstance, MultisetEdge, SetSystem, binomial_system, build_kneser, up_monotone_closure
from kneserkit.errors import CapacityError, InputError, SolverTimeout
from kneserkit.facts import counterexample_system
from kneserkit.oracles import brute_chromatic_number

from strategies import hypergraphs, systems


def kg(n, k, s, r, multiset):
    return KneserInstance(binomial_system(n, k, s), r, multiset)


def test_coloring_validation():
    with pytest.raises(InputError):
        Coloring((1, 3), 2)
    with pytest.raises(InputError):
        Coloring((0, 1), 2)
    assert Coloring((1, 2, 1), 2).classes() == [[0, 2], [1]]


def test_minimal_masks():
    assert minimal_masks([0b11, 0b111, 0b100, 0b101]) == [0b11, 0b100]


def test_trivial_chromatic_numbers():
    assert chromatic_number(Hypergraph(0, 2))[0] == 0
    assert chromatic_number(Hypergraph(4, 3))[0] == 1
    assert chromatic_number(kg(4, 3, 1, 2, True))[0] == 1


@pytest.mark.parametrize(
    ("instance", "chi"),
    [
        (kg(5, 2, 2, 4, False), 3),
        (kg(5, 2, 2, 4, True), 3),
        (kg(6, 2, 4, 5, False), 4),
        (kg(6, 2, 4, 5, True), 5),
        (kg(5, 2, 1, 2, True), 3),  # the Petersen graph
        (kg(7, 2, 2, 4, False), 4),
    ],
)
def test_known_values(instance, chi):
    value, witness = chromatic_number(instance)
    assert value == chi
    assert witness.color_count == chi and is_proper(instance, witness)


def test_counterexample_is_two_colorable():
    inst = KneserInstance(counterexample_system(8, 7), 9, False)
    assert chromatic_number(inst)[0] == 2


def test_star_coloring():
    c = star_coloring_pairs(6, 5)
    assert c.color_count == 4
    assert is_proper(kg(6, 2, 4, 5, False), c)
    with pytest.raises(InputError):
        star_coloring_pairs(3, 5)


def test_verify_reports_monochromatic_edge():
    inst = kg(5, 2, 1, 2, True)
    bad = Coloring((1,) * 10, 1)
    e = verify_coloring(inst, bad)
    assert e is not None and e.r == 2
    with pytest.raises(InputError):
        verify_coloring(inst, Coloring((1, 1), 1))


def test_budget_raises_with_bounds():
    inst = kg(7, 2, 2, 4, True)
    with pytest.raises(SolverTimeout) as info:
        chromatic_number(inst, node_limit=1)
    exc = info.value
    assert exc.lower <= exc.upper
    assert exc.witness is not None and is_proper(inst, exc.witness)
    assert exc.witness.color_count == exc.upper


def test_time_limit_during_search(monkeypatch):
    import kneserkit.coloring

    # one-node slices make the limit trip at the first pause of the search
    monkeypatch.setattr(kneserkit.coloring, "NODES_PER_SLICE", 1)
    inst = KneserInstance(binomial_system(6, 2, 4), 5, True)
    oracle = kneserkit.coloring.ColorClassOracle(inst)
    oracle.dependency_masks()
    with pytest.raises(SolverTimeout) as info:
        kneserkit.coloring.chromatic_number(oracle, time_limit=1e-9)
    assert "colors" in str(info.value)
    assert info.value.lower >= 2 and info.value.upper == info.value.witness.color_count


def test_time_limit_during_support_derivation():
    inst = kg(7, 3, 2, 5, True)
    with pytest.raises(SolverTimeout) as info:
        chromatic_number(inst, time_limit=0.2)
    assert (info.value.lower, info.value.upper) == (1, 35)
    assert is_proper(inst, info.value.witness)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        chromatic_number(kg(12, 2, 1, 2, True))


def test_stats_are_filled():
    stats = SearchStats()
    chromatic_number(kg(6, 2, 2, 4, True), stats=stats)
    assert stats.nodes > 0


# -- properties ----------------------------------------------------------------


@settings(max_examples=120, deadline=None)
@given(hypergraphs())
def test_matches_partition_oracle(h):
    chi, witness = chromatic_number(h)
    assert chi == brute_chromatic_number(h)
    assert is_proper(h, witness)


@settings(max_examples=120, deadline=None)
@given(hypergraphs())
def test_greedy_is_upper_bound(h):
    greedy = greedy_coloring(h)
    assert is_proper(h, greedy)
    assert greedy.color_count >= chromatic_number(h)[0]


@settings(max_examples=80, deadline=None)
@given(hypergraphs(), st.data())
def test_monotone_under_edge_deletion(h, data):
    keep = data.draw(st.lists(st.booleans(), min_size=len(h.edges), max_size=len(h.edges)))
    sub = Hypergraph(h.vertex_count, h.r, tuple(e for e, k in zip(h.edges, keep) if k), h.multiset_allowed)
    assert chromatic_number(sub)[0] <= chromatic_number(h)[0]


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_vertices=6, max_r=3))
def test_closure_preserves_chi(h):
    assert chromatic_number(up_monotone_closure(h, h.r + 1))[0] == chromatic_number(h)[0]


@settings(max_examples=100, deadline=None)
@given(systems(max_s=2, max_members=7), st.integers(3, 4), st.data())
def test_implicit_and_explicit_oracles_agree(system, r, data):
    multiset = data.draw(st.booleans())
    inst = KneserInstance(system, r, multiset)
    implicit = ColorClassOracle(inst, "implicit")
    explicit = ColorClassOracle(inst, "explicit")
    assert implicit.dependency_masks() == explicit.dependency_masks()
    m = len(system)
    if m:
        cls = data.draw(st.sets(st.integers(0, m - 1)))
        assert implicit.is_independent(cls) == explicit.is_independent(cls)
        found = implicit.find_edge(cls)
        if found is not None:
            assert found in build_kneser(inst).edge_set
    assert chromatic_number(inst, mode="implicit")[0] == chromatic_number(inst, mode="explicit")[0]


@settings(max_examples=80, deadline=None)
@given(systems(max_s=2, max_members=8), st.integers(3, 4))
def test_set_variant_needs_no_more_colors(system, r):
    assert chromatic_number(KneserInstance(system, r, False))[0] <= chromatic_number(KneserInstance(system, r, True))[0]


@settings(max_examples=60, deadline=None)
@given(systems(max_n=4, max_s=1, max_members=8), st.integers(3, 4))
def test_chi_monotone_in_s(system, r):
    low = chromatic_number(KneserInstance(system, r, True))[0]
    ground = GroundContext.constant(system.ground.n, 2)
    high = chromatic_number(KneserInstance(SetSystem(ground, system.members), r, True))[0]
    assert low <= high
