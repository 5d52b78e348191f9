"""The numba kernels and their fallbacks must agree."""

from __future__ import annotations

import json
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kneserkit import kernels
from kneserkit._accel import USE_NUMBA
from kneserkit.core import KneserInstance

from strategies import systems


@settings(max_examples=100, deadline=None)
@given(systems(max_s=3), st.integers(2, 4), st.booleans())
def test_edge_enumeration_paths_agree(system, r, distinct):
    inc = np.ascontiguousarray(system.incidence(), dtype=np.int64)
    cap = np.array(system.ground.s, dtype=np.int64)
    loop = kernels._kneser_edges_loop(inc, cap, r, distinct)
    vec = kernels._kneser_edges_numpy(inc, cap, r, distinct)
    assert np.array_equal(loop, vec.reshape(-1, r))
    if USE_NUMBA:
        assert np.array_equal(kernels._kneser_edges_jit(inc, cap, r, distinct), loop)


SCRIPT = """
import json
from kneserkit._accel import backend_name
from kneserkit.coloring import chromatic_number
from kneserkit.core import KneserInstance, binomial_system, build_kneser
out = {"backend": backend_name(), "chi": [], "edges": []}
for n, s, r, multiset in [(5, 2, 4, False), (5, 2, 4, True), (6, 4, 5, False), (5, 1, 2, True), (6, 2, 4, False)]:
    inst = KneserInstance(binomial_system(n, 2, s), r, multiset)
    out["chi"].append(chromatic_number(inst)[0])
    out["edges"].append(len(build_kneser(inst).edges))
print(json.dumps(out))
"""


def run_backend(disable: bool) -> dict:
    env = os.environ.copy()
    env["KNESERKIT_DISABLE_NUMBA"] = "1" if disable else "0"
    res = subprocess.run([sys.executable, "-c", SCRIPT], capture_output=True, text=True, env=env, check=True)
    return json.loads(res.stdout)


def test_fallback_matches_compiled_path():
    fallback = run_backend(True)
    compiled = run_backend(False)
    assert fallback["backend"] == "python"
    assert fallback["chi"] == compiled["chi"] == [3, 3, 4, 3, 3]
    assert fallback["edges"] == compiled["edges"]


@pytest.mark.parametrize("value", ["", "0", "false", "off"])
def test_flag_values_that_keep_numba(value):
    env = os.environ.copy()
    env["KNESERKIT_DISABLE_NUMBA"] = value
    res = subprocess.run([sys.executable, "-c", "from kneserkit._accel import DISABLED_BY_ENV; print(DISABLED_BY_ENV)"], capture_output=True, text=True, env=env, check=True)
    assert res.stdout.strip() == "False"
