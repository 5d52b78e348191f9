"""JSON encodings. Elements, vertices and colors are 1-based on disk."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .coloring import Coloring
from .core import GroundContext, Hypergraph, MultisetEdge, SetSystem
from .defect import DefectCertificate
from .errors import InputError
from .representation import Representation


def system_to_json(system: SetSystem) -> dict[str, Any]:
    return {"n": system.ground.n, "s": list(system.ground.s), "sets": [list(S) for S in system.sets]}


def system_from_json(data: dict[str, Any], s: int | list[int] | None = None) -> SetSystem:
    """Parse a set system; ``s`` overrides the stored multiplicities."""
    try:
        n = int(data["n"])
        sets = data["sets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed set system: {exc}") from exc
    if s is None:
        s = data.get("s", 1)
    ground = GroundContext.constant(n, s) if isinstance(s, int) else GroundContext(n, tuple(s))
    return SetSystem.from_sets(ground, sets)


def hypergraph_to_json(h: Hypergraph) -> dict[str, Any]:
    return {
        "vertices": h.vertex_count,
        "r": h.r,
        "multiset": h.multiset_allowed,
        "edges": [[[v + 1, k] for v, k in enumerate(e.multiplicity) if k] for e in h.edges],
    }


def hypergraph_from_json(data: dict[str, Any]) -> Hypergraph:
    try:
        nv = int(data["vertices"])
        edges = []
        for pairs in data["edges"]:
            mult = [0] * nv
            for v, k in pairs:
                if not 1 <= int(v) <= nv:
                    raise InputError(f"vertex {v} outside [1, {nv}]")
                mult[int(v) - 1] += int(k)
            edges.append(MultisetEdge(tuple(mult)))
        return Hypergraph(nv, int(data["r"]), tuple(edges), bool(data.get("multiset", True)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed hypergraph: {exc}") from exc


def coloring_to_json(c: Coloring) -> dict[str, Any]:
    return {"colors": c.color_count, "assignment": list(c.assignment)}


def coloring_from_json(data: dict[str, Any]) -> Coloring:
    return Coloring(tuple(data["assignment"]), int(data["colors"]))


def certificate_to_json(cert: DefectCertificate) -> dict[str, Any]:
    return {"value": cert.value, "covers": [list(R) for R in cert.covers]}


def certificate_from_json(data: dict[str, Any]) -> DefectCertificate:
    return DefectCertificate(tuple(tuple(int(i) for i in R) for R in data["covers"]), int(data["value"]))


def representation_to_json(rep: Representation) -> dict[str, Any]:
    members = rep.system.sets
    return {
        "n": rep.ground.n,
        "r": rep.r,
        "complement_edges": [rep.element_label(rep.vertex_count + 1 + j) for j in range(len(rep.complement_edges))],
        "sets": [[rep.element_label(i) for i in members[rep.vertex_map[v]]] for v in range(rep.vertex_count)],
    }


def looks_like_hypergraph(data: dict[str, Any]) -> bool:
    return "vertices" in data and "edges" in data


def read_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def write_json(path: str | Path, data: Any) -> None:
    Path(path).write_text(json.dumps(data, sort_keys=True, indent=1) + "\n")
