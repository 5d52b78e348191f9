"""Generalized Kneser hypergraphs with intersection multiplicities.

Exact chromatic numbers, colorability defects, closed-form bounds and
representability checks for ``KG^r_s(S)`` and ``kg^r_s(S)``.
"""

from __future__ import annotations

from .bounds import (
    BoundReport,
    bound_report,
    formula_chi_KG_pairs,
    formula_chi_kg42,
    formula_chi_kg_pairs,
    largest_prime_factor,
    lower_bound_theorem,
    upper_bound_star,
)
from .coloring import Coloring, chromatic_number, greedy_coloring, is_proper, verify_coloring
from .core import (
    GroundContext,
    Hypergraph,
    KneserInstance,
    MultisetEdge,
    SetSystem,
    binomial_system,
    build_kneser,
    complete_hypergraph,
    is_kneser_edge,
    is_s_disjoint,
    support,
    up_monotone_closure,
)
from .defect import DefectCertificate, colorability_defect, s_free_sets
from .errors import CapacityError, InputError, KneserError, SolverTimeout
from .representation import (
    Representation,
    is_convex,
    is_up_monotone,
    kg1_clique_test,
    represent_up_monotone,
    verify_representation,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapacityError",
    "Coloring",
    "DefectCertificate",
    "GroundContext",
    "Hypergraph",
    "InputError",
    "KneserError",
    "KneserInstance",
    "MultisetEdge",
    "Representation",
    "SetSystem",
    "SolverTimeout",
    "binomial_system",
    "bound_report",
    "build_kneser",
    "chromatic_number",
    "colorability_defect",
    "complete_hypergraph",
    "formula_chi_KG_pairs",
    "formula_chi_kg42",
    "formula_chi_kg_pairs",
    "greedy_coloring",
    "is_convex",
    "is_kneser_edge",
    "is_proper",
    "is_s_disjoint",
    "is_up_monotone",
    "kg1_clique_test",
    "largest_prime_factor",
    "lower_bound_theorem",
    "represent_up_monotone",
    "s_free_sets",
    "support",
    "up_monotone_closure",
    "upper_bound_star",
    "verify_coloring",
    "verify_representation",
]
