"""Exception types shared across the package."""

from __future__ import annotations


class KneserError(Exception):
    """Base class for all package errors."""


class InputError(KneserError, ValueError):
    """Invalid parameters or malformed objects."""


class CapacityError(KneserError):
    """An explicit enumeration or exact test would exceed its configured cap."""


class SolverTimeout(KneserError):
    """Search budget exhausted before the exact value was certified.

    ``lower`` and ``upper`` are certified bounds; ``witness`` is the best
    proper coloring found (it realizes ``upper``), if any.
    """

    def __init__(self, message: str, lower: int, upper: int | None, witness=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = witness
