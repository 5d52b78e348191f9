from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kneserkit import io
from kneserkit.coloring import Coloring, chromatic_number
from kneserkit.core import GroundContext, KneserInstance, SetSystem, binomial_system, build_kneser
from kneserkit.defect import colorability_defect
from kneserkit.errors import InputError

from strategies import hypergraphs, systems


@settings(max_examples=100, deadline=None)
@given(systems())
def test_system_round_trip(system):
    assert io.system_from_json(json.loads(io.dumps(io.system_to_json(system)))) == system


@settings(max_examples=100, deadline=None)
@given(hypergraphs())
def test_hypergraph_round_trip(h):
    assert io.hypergraph_from_json(json.loads(io.dumps(io.hypergraph_to_json(h)))) == h


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_coloring_round_trip(h):
    _, c = chromatic_number(h)
    assert io.coloring_from_json(json.loads(io.dumps(io.coloring_to_json(c)))) == c


@settings(max_examples=60, deadline=None)
@given(systems(max_s=3, max_members=5), st.integers(1, 3))
def test_certificate_round_trip(system, r):
    _, cert = colorability_defect(system.ground, r, system)
    assert io.certificate_from_json(json.loads(io.dumps(io.certificate_to_json(cert)))) == cert


def test_s_override():
    data = {"n": 3, "s": [3, 2, 1], "sets": [[2, 3]]}
    assert io.system_from_json(data).ground == GroundContext(3, (3, 2, 1))
    assert io.system_from_json(data, 2).ground == GroundContext.constant(3, 2)
    assert io.system_from_json({"n": 2, "sets": [[1]]}).ground.s == (1, 1)


def test_malformed_inputs(tmp_path):
    with pytest.raises(InputError):
        io.system_from_json({"sets": []})
    with pytest.raises(InputError):
        io.hypergraph_from_json({"vertices": 2, "r": 2, "edges": [[[3, 2]]]})
    with pytest.raises(InputError):
        io.hypergraph_from_json({"vertices": 2})
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(InputError):
        io.read_json(bad)
    with pytest.raises(InputError):
        io.read_json(tmp_path / "missing.json")


def test_dumps_is_canonical():
    h = build_kneser(KneserInstance(binomial_system(4, 2, 2), 4))
    assert io.dumps(io.hypergraph_to_json(h)) == io.dumps(json.loads(io.dumps(io.hypergraph_to_json(h))))
    assert " " not in io.dumps(io.hypergraph_to_json(h))
