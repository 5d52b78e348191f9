"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from kneserkit.core import GroundContext, Hypergraph, MultisetEdge, SetSystem


@st.composite
def grounds(draw, max_n: int = 5, max_s: int = 3) -> GroundContext:
    n = draw(st.integers(1, max_n))
    s = draw(st.lists(st.integers(1, max_s), min_size=n, max_size=n))
    return GroundContext(n, tuple(s))


@st.composite
def systems(draw, max_n: int = 5, max_s: int = 3, max_members: int = 8, ground: GroundContext | None = None) -> SetSystem:
    ground = ground if ground is not None else draw(grounds(max_n, max_s))
    full = (1 << ground.n) - 1
    members = draw(st.sets(st.integers(1, full), max_size=min(max_members, full)))
    return SetSystem(ground, tuple(members))


@st.composite
def hypergraphs(draw, max_vertices: int = 7, max_r: int = 4) -> Hypergraph:
    nv = draw(st.integers(2, max_vertices))
    r = draw(st.integers(2, max_r))
    multiset = draw(st.booleans())
    vertex = st.integers(0, nv - 1)
    raw = draw(st.lists(st.lists(vertex, min_size=r, max_size=r), max_size=3 * nv))
    edges = []
    for members in raw:
        if len(set(members)) < 2 or (not multiset and len(set(members)) < r):
            continue
        edges.append(MultisetEdge.from_members(members, nv))
    return Hypergraph(nv, r, tuple(edges), multiset)
