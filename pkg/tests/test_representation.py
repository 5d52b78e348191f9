from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kneserkit.core import (
    Hypergraph,
    KneserInstance,
    MultisetEdge,
    build_kneser,
    complete_hypergraph,
    up_monotone_closure,
)
from kneserkit.errors import CapacityError, InputError
from kneserkit.exact_lp import in_convex_hull
from kneserkit.facts import up_monotone_on_three
from kneserkit.oracles import random_system
from kneserkit.representation import (
    complement_hypergraph,
    convexity_violation,
    is_convex,
    is_up_monotone,
    kg1_clique_test,
    represent_up_monotone,
    up_monotone_violation,
    verify_representation,
)

from strategies import hypergraphs, systems


def hyper(nv, r, edges, multiset=True):
    return Hypergraph(nv, r, tuple(MultisetEdge.from_members([v - 1 for v in e], nv) for e in edges), multiset)


def test_convexity_examples():
    h = hyper(3, 3, [(1, 1, 3), (2, 2, 3)])
    point, weights = convexity_violation(h)
    assert point == (1, 1, 1)
    assert sum(weights) == 1
    assert is_convex(hyper(3, 3, [(1, 1, 2), (2, 2, 3)]))


def test_convexity_cap():
    with pytest.raises(CapacityError):
        is_convex(complete_hypergraph(12, 6, True))


def test_exact_hull():
    assert in_convex_hull([(0, 0), (2, 0), (0, 2)], (1, 1)) is not None
    assert in_convex_hull([(0, 0), (2, 0), (0, 2)], (2, 1)) is None
    assert in_convex_hull([], (0,)) is None


def test_round_trip_on_three_is_exhaustive():
    hs = up_monotone_on_three()
    assert len(hs) == 9
    for h in hs:
        assert verify_representation(h, represent_up_monotone(h))


def test_round_trip_random_on_four():
    rng = random.Random(4)
    full = complete_hypergraph(4, 3, True).edges
    for _ in range(40):
        seed_edges = rng.sample(full, rng.randint(0, 3))
        h = up_monotone_closure(Hypergraph(4, 3, tuple(seed_edges)), 3)
        assert is_up_monotone(h)
        assert verify_representation(h, represent_up_monotone(h))


def test_represent_rejects_non_monotone():
    h = hyper(3, 3, [(1, 1, 2)])
    with pytest.raises(InputError, match="not up-monotone"):
        represent_up_monotone(h)
    e, e2 = up_monotone_violation(h)
    assert e2.support_mask & e.support_mask == e.support_mask


def test_complement_labels_are_canonical():
    h = hyper(3, 3, [(1, 1, 2)])
    h = up_monotone_closure(h, 3)
    rep = represent_up_monotone(h)
    labels = [rep.element_label(rep.vertex_count + 1 + j) for j in range(len(rep.complement_edges))]
    assert all(lbl.startswith("e:") for lbl in labels)
    assert labels == sorted(labels, key=lambda s: tuple(int(x) for x in s[2:].split(",")))
    assert len(complement_hypergraph(h).edges) + len(h.edges) == len(complete_hypergraph(3, 3).edges)


def test_clique_test_examples():
    res = kg1_clique_test(hyper(4, 3, [(1, 2, 4), (1, 3, 4), (2, 3, 4)], False))
    assert not res.representable and res.missing_clique == (0, 1, 2)
    res = kg1_clique_test(hyper(4, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)], False))
    assert res.representable and len(res.graph) == 6
    res = kg1_clique_test(Hypergraph(3, 3, (), False))
    assert res.representable and res.graph == ()
    with pytest.raises(InputError):
        kg1_clique_test(hyper(3, 3, [(1, 1, 2)]))


@settings(max_examples=60, deadline=None)
@given(systems(max_n=4, max_s=1, max_members=7), st.integers(2, 4))
def test_clique_test_accepts_KG1(system, r):
    h = build_kneser(KneserInstance(system, r, False))
    assert kg1_clique_test(h).representable


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_vertices=6, max_r=3).filter(lambda h: all(e.is_set for e in h.edges)), st.integers(0, 100))
def test_clique_test_is_decided_by_canonical_graph(h, seed):
    res = kg1_clique_test(h)
    if not res.representable:
        return
    # adding a pair to the witness graph keeps or enlarges the clique family
    from itertools import combinations

    nv = h.vertex_count
    rng = random.Random(seed)
    extra = rng.choice([p for p in combinations(range(nv), 2)])
    graph = set(res.graph) | {extra}
    cliques = {c for c in combinations(range(nv), h.r) if all(p in graph for p in combinations(c, 2))}
    assert {e.members for e in h.edges} <= cliques


@settings(max_examples=60, deadline=None)
@given(systems(max_n=4, max_s=3, max_members=5), st.integers(2, 4))
def test_kneser_output_is_convex(system, r):
    if max(system.ground.s) >= r:
        return
    assert is_convex(build_kneser(KneserInstance(system, r, True)))


@settings(max_examples=60, deadline=None)
@given(systems(max_n=4, max_s=1, max_members=6), st.integers(2, 4))
def test_KG_with_s_r_minus_one_is_up_monotone(system, r):
    from kneserkit.core import SetSystem

    system = SetSystem(system.ground.with_s(r - 1), system.members)
    assert is_up_monotone(build_kneser(KneserInstance(system, r, True)))
