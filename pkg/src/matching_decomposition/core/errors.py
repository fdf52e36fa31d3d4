"""Exceptions raised by the library.

Validation violations and verification failures are returned as values, these
exceptions cover everything that should stop a computation.
"""
from __future__ import annotations
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from matching_decomposition.cuts.validation import Violation


class DecompositionError(Exception):
    pass


class InputError(DecompositionError, ValueError):
    """Malformed argument or input file."""


class SizeLimitError(InputError):
    """Brute-force oracle refused an instance larger than its limits."""


class PreconditionError(InputError):
    """Documented precondition of an operation does not hold."""


class InfeasibleInputError(DecompositionError):
    """The input is not an alpha-fractional perfect matching."""

    def __init__(self, violation: Violation) -> None:
        super().__init__(f"infeasible input: {violation.describe()}")
        self.violation = violation


class InvariantError(DecompositionError):
    """An algorithmic invariant broke; signals a bug upstream."""
