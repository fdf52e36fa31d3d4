"""Largest coefficient of a matching that keeps the residual feasible.

Given `y` at scale `alpha` and a perfect matching `M` of its support, gamma is
the largest `b` such that `y - b * M` is an `(alpha - b)`-fractional perfect
matching. Two exact methods are provided: the iterative most-stringent-cut
search used in production and a bisection with rational reconstruction.
"""
from __future__ import annotations
from fractions import Fraction
import logging
from typing import TYPE_CHECKING, Optional

from matching_decomposition.core.errors import InvariantError, PreconditionError
from matching_decomposition.core.fractional import (
    common_denominator,
    cut_capacity,
    subtract_matching,
)
from matching_decomposition.cuts.odd_cuts import min_odd_cut
from matching_decomposition.laminar import crossings

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching, OddSet
    from matching_decomposition.core.matchings import PerfectMatching
    from matching_decomposition.cuts.flow import CutStats
    from matching_decomposition.decomposers.trace import DecompositionStats

logger = logging.getLogger(__name__)


def cut_gamma(
    alpha: Fraction, y: FracMatching, matching: PerfectMatching, odd_set: OddSet
) -> Fraction:
    """`(y(delta(S)) - alpha) / (|delta(S) & M| - 1)`, the `b` making `S` tight."""
    k = crossings(odd_set, matching)
    if k < 2:
        raise PreconditionError(
            f"{odd_set.members} is crossed {k} times by the matching, need >= 2."
        )
    return (cut_capacity(y, odd_set) - alpha) / (k - 1)


def find_gamma(
    alpha: Fraction,
    y: FracMatching,
    matching: PerfectMatching,
    beta: Fraction,
    odd_set: OddSet,
    *,
    max_iterations: Optional[int] = None,
    stats: Optional[DecompositionStats] = None,
) -> tuple[Fraction, OddSet]:
    """Iterates over ever more stringent odd cuts until none is violated.

    `odd_set` is the minimum odd cut of `y - beta * M`, violated at
    `alpha - beta`. Returns gamma and the odd set that becomes tight at
    `alpha - gamma`.
    """
    if max_iterations is None:
        max_iterations = 10 * max(y.m, 1)

    witness = odd_set
    gamma = cut_gamma(alpha, y, matching, witness)
    if gamma >= beta:
        raise PreconditionError(
            f"{witness.members} is not violated at beta {beta} (gamma {gamma})."
        )

    iterations = 0
    while True:
        if gamma <= 0:
            raise InvariantError(
                f"non-positive gamma {gamma} from {witness.members}; "
                "the residual is not feasible."
            )
        cut = min_odd_cut(subtract_matching(y, matching, gamma), stats=stats)
        if cut.capacity >= alpha - gamma:
            break

        iterations += 1
        if iterations > max_iterations:
            raise InvariantError(
                f"gamma search exceeded {max_iterations} iterations."
            )
        next_gamma = cut_gamma(alpha, y, matching, cut.odd_set)
        if next_gamma >= gamma:
            raise InvariantError(
                f"gamma did not decrease: {gamma} -> {next_gamma} "
                f"at {cut.odd_set.members}."
            )
        logger.debug(
            "Gamma lowered from %s to %s by %s.", gamma, next_gamma, cut.odd_set.members
        )
        gamma, witness = next_gamma, cut.odd_set

    if stats is not None:
        stats.gamma_iterations += iterations + 1
    return gamma, witness


def _is_feasible_at(
    alpha: Fraction,
    y: FracMatching,
    matching: PerfectMatching,
    b: Fraction,
    stats: Optional[CutStats],
) -> bool:
    if b == 0 or alpha == b:
        return True
    residual = subtract_matching(y, matching, b)
    return min_odd_cut(residual, stats=stats).capacity >= alpha - b


def find_gamma_bisect(
    alpha: Fraction,
    y: FracMatching,
    matching: PerfectMatching,
    beta: Fraction,
    *,
    stats: Optional[CutStats] = None,
) -> Fraction:
    """Bisects `[0, beta]` on feasibility of the residual.

    Gamma has denominator at most `D = lcm(denominators of y) * n`, so once the
    bracket is narrower than `1 / (2 D^2)` the best approximation of its
    midpoint with denominator at most `D` is gamma.
    """
    if _is_feasible_at(alpha, y, matching, beta, stats):
        return beta

    bound = common_denominator(y) * y.n
    width = Fraction(1, 2 * bound**2)
    low, high = Fraction(0), beta
    while high - low >= width:
        middle = (low + high) / 2
        if _is_feasible_at(alpha, y, matching, middle, stats):
            low = middle
        else:
            high = middle

    gamma = ((low + high) / 2).limit_denominator(bound)
    if not low <= gamma < high or not _is_feasible_at(
        alpha, y, matching, gamma, stats
    ):
        raise InvariantError(
            f"reconstructed gamma {gamma} is not feasible in [{low}, {high})."
        )
    return gamma

