"""Exact checks of finished decompositions."""
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Mapping, Optional

from matching_decomposition.core.graph import canonical_edge

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.core.graph import Edge
    from matching_decomposition.core.matchings import Decomposition


class FailureReason(Enum):
    NON_POSITIVE_COEFFICIENT = "non_positive_coefficient"
    SUM_MISMATCH = "sum_mismatch"
    NOT_PERFECT = "not_perfect"
    OUTSIDE_SUPPORT = "outside_support"
    VALUE_MISMATCH = "value_mismatch"
    WEIGHT_MISMATCH = "weight_mismatch"


@dataclass(frozen=True)
class VerificationFailure:
    reason: FailureReason
    message: str
    term_index: Optional[int] = None

    def describe(self) -> str:
        where = f" (term {self.term_index})" if self.term_index is not None else ""
        return f"{self.reason.value}{where}: {self.message}"


def verify_decomposition(
    x: FracMatching, decomposition: Decomposition
) -> Optional[VerificationFailure]:
    """Returns the first failed check, `None` if `decomposition` sums to `x`.

    Checks in order: positive coefficients, coefficients summing to
    `x.alpha`, perfect matchings of `x.graph`, matchings inside the support,
    componentwise equality.
    """
    for i, term in enumerate(decomposition):
        if term.coeff <= 0:
            return VerificationFailure(
                FailureReason.NON_POSITIVE_COEFFICIENT,
                f"coefficient {term.coeff} is not positive",
                i,
            )

    if (total := decomposition.total) != x.alpha:
        return VerificationFailure(
            FailureReason.SUM_MISMATCH,
            f"coefficients sum to {total}, expected {x.alpha}",
        )

    for i, term in enumerate(decomposition):
        if not term.matching.is_perfect_in(x.graph):
            return VerificationFailure(
                FailureReason.NOT_PERFECT,
                f"{list(term.matching.edges)} is not a perfect matching",
                i,
            )
        for u, v in term.matching:
            if x.value(u, v) <= 0:
                return VerificationFailure(
                    FailureReason.OUTSIDE_SUPPORT,
                    f"edge ({u}, {v}) is not in the support",
                    i,
                )

    for (u, v), expected, actual in zip(
        x.graph.edges, x.values, decomposition.weighted_sum(x.graph), strict=True
    ):
        if expected != actual:
            return VerificationFailure(
                FailureReason.VALUE_MISMATCH,
                f"edge ({u}, {v}) sums to {actual}, expected {expected}",
            )
    return None


def verify_min_weight_property(
    decomposition: Decomposition, weights: Mapping[Edge, Fraction]
) -> Optional[VerificationFailure]:
    """`None` iff all matchings of `decomposition` have the same total weight."""
    canonical = {canonical_edge(u, v): Fraction(w) for (u, v), w in weights.items()}
    first: Optional[Fraction] = None
    for i, term in enumerate(decomposition):
        weight = sum((canonical[edge] for edge in term.matching), Fraction(0))
        if first is None:
            first = weight
        elif weight != first:
            return VerificationFailure(
                FailureReason.WEIGHT_MISMATCH,
                f"matching weighs {weight}, the first one weighs {first}",
                i,
            )
    return None
