"""Decomposition of a fractional perfect matching into perfect matchings.

Each phase takes a minimum-weight perfect matching `M` of the residual support,
weighted by how many laminar members cut each edge, and subtracts as much of
it as keeps the residual feasible. Either an edge of `M` vanishes (Type 1) or
a new odd cut becomes tight and joins the laminar family (Type 2). At most `m`
phases run in total.
"""
from __future__ import annotations
import logging
import pprint
from typing import TYPE_CHECKING, Optional

from matching_decomposition.core.errors import (
    InfeasibleInputError,
    InvariantError,
    PreconditionError,
)
from matching_decomposition.core.fractional import (
    common_denominator,
    cut_capacity,
    degree_sums,
    max_denominator,
    subtract_matching,
    support,
)
from matching_decomposition.cuts.odd_cuts import min_odd_cut
from matching_decomposition.cuts.validation import validate_fractional_pm
from matching_decomposition.decomposers.gamma import find_gamma, find_gamma_bisect
from matching_decomposition.decomposers.settings import DecomposerSettings
from matching_decomposition.decomposers.trace import (
    DecompositionTrace,
    PhaseRecord,
    PhaseType,
    denominator_ceiling,
)
from matching_decomposition.laminar import (
    LaminarFamily,
    crossings,
    edge_weights,
    update_laminar,
)
from matching_decomposition.matching import WeightedGraph, min_weight_perfect_matching

if TYPE_CHECKING:
    from fractions import Fraction

    from matching_decomposition.core.fractional import FracMatching, OddSet
    from matching_decomposition.core.matchings import PerfectMatching
    from matching_decomposition.decomposers.trace import DecompositionStats

logger = logging.getLogger(__name__)


class MainAlgorithm:
    """Runs the phases for a single input vector; use `decompose` instead."""

    def __init__(self, x: FracMatching, settings: DecomposerSettings) -> None:
        self._x = x
        self._settings = settings
        self._trace = DecompositionTrace()
        self._support_was_bipartite = False
        self._support_was_disconnected = False

    @property
    def stats(self) -> DecompositionStats:
        return self._trace.stats

    def run(self) -> DecompositionTrace:
        y = self._x
        self.stats.initial_denominator = common_denominator(y)
        self.stats.record_denominator(self.stats.initial_denominator)

        family = update_laminar(LaminarFamily(y.n, y.alpha), y, stats=self.stats)
        logger.info(
            "Starting with %d tight odd cuts on %d vertices and %d support edges.",
            len(family),
            y.n,
            y.m,
        )

        while not y.is_zero():
            y, family = self._phase(y, family)
            self.stats.record_denominator(common_denominator(y))
            self._log_support_changes(y)

        self._check_bounds()
        logger.info(
            "Decomposition finished:\n%s",
            pprint.pformat(self._trace.summary(), indent=1),
        )
        return self._trace

    def _phase(
        self, y: FracMatching, family: LaminarFamily
    ) -> tuple[FracMatching, LaminarFamily]:
        phase_index = len(self._trace.phases)
        if phase_index >= self._x.m:
            raise InvariantError(f"more than m = {self._x.m} phases were needed.")
        alpha = y.alpha

        graph = support(y)
        weights = edge_weights(family, graph)
        matching = min_weight_perfect_matching(WeightedGraph(graph, weights))
        if matching is None:
            raise InvariantError(
                f"the residual support has no perfect matching in phase {phase_index}."
            )
        matching_weight = matching.weight(graph, weights)
        if self._settings.check_invariants:
            self._check_matching(family, matching, matching_weight)

        beta = min(y.value(u, v) for u, v in matching)
        if beta <= 0:
            raise InvariantError(f"non-positive beta {beta} in phase {phase_index}.")
        residual = subtract_matching(y, matching, beta)
        if self._settings.check_invariants:
            self._check_partial(residual, family)

        record = dict(
            phase_index=phase_index,
            matching=matching,
            alpha_before=alpha,
            beta=beta,
            y_before=y,
            matching_weight=matching_weight,
        )

        violated: Optional[OddSet] = None
        if residual.alpha > 0:
            cut = min_odd_cut(residual, stats=self.stats)
            if cut.capacity < residual.alpha:
                violated = cut.odd_set
        elif not residual.is_zero():
            raise InvariantError("residual at scale 0 is not the zero vector.")

        if violated is None:
            removed = tuple(e for e in matching if residual.value(*e) == 0)
            if not removed:
                raise InvariantError(f"Type 1 phase {phase_index} removed no edge.")
            # Dropping edges can make new odd cuts tight at alpha - beta.
            if not residual.is_zero():
                family = update_laminar(family, residual, stats=self.stats)
            self._emit(
                PhaseRecord(
                    **record,
                    phase_type=PhaseType.TYPE1,
                    coeff=beta,
                    alpha_after=residual.alpha,
                    laminar_size=len(family),
                    removed_edges=removed,
                )
            )
            return residual, family

        gamma, witness = self._gamma(y, matching, beta, violated)
        residual = subtract_matching(y, matching, gamma)
        grown = update_laminar(family, residual, stats=self.stats)
        if witness is None:
            witness = _new_tight_cut(family, grown, matching)
        if self._settings.check_invariants:
            self._check_type2(residual, family, grown, witness)
        self._emit(
            PhaseRecord(
                **record,
                phase_type=PhaseType.TYPE2,
                coeff=gamma,
                alpha_after=residual.alpha,
                laminar_size=len(grown),
                violated_cut=violated,
                new_tight_cut=witness,
            )
        )
        return residual, grown

    def _gamma(
        self,
        y: FracMatching,
        matching: PerfectMatching,
        beta: Fraction,
        violated: OddSet,
    ) -> tuple[Fraction, Optional[OddSet]]:
        method = self._settings.gamma_method
        iterative: Optional[Fraction] = None
        witness: Optional[OddSet] = None
        if method == "iterative" or self._settings.cross_check_gamma:
            iterative, witness = find_gamma(
                y.alpha,
                y,
                matching,
                beta,
                violated,
                max_iterations=self._settings.gamma_iteration_factor * y.m,
                stats=self.stats,
            )
        bisected: Optional[Fraction] = None
        if method == "bisect" or self._settings.cross_check_gamma:
            bisected = find_gamma_bisect(
                y.alpha, y, matching, beta, stats=self.stats
            )

        if iterative is not None and bisected is not None and iterative != bisected:
            raise InvariantError(
                f"gamma methods disagree: iterative {iterative}, bisect {bisected}."
            )
        gamma = iterative if iterative is not None else bisected
        assert gamma is not None
        return gamma, witness

    def _emit(self, record: PhaseRecord) -> None:
        self._trace.phases.append(record)
        self._trace.terms.append(record.coeff, record.matching)
        logger.info(
            "Phase %d (%s): coefficient %s, alpha %s -> %s, %d tight cuts.",
            record.phase_index,
            record.phase_type.value,
            record.coeff,
            record.alpha_before,
            record.alpha_after,
            record.laminar_size,
        )
        if record.new_tight_cut is not None:
            logger.debug("New tight cut %s.", record.new_tight_cut.members)

    def _log_support_changes(self, y: FracMatching) -> None:
        if y.is_zero():
            return
        graph = support(y)
        if not self._support_was_bipartite and graph.is_bipartite():
            self._support_was_bipartite = True
            logger.info(
                "Residual support became bipartite after phase %d.",
                len(self._trace.phases) - 1,
            )
        if not self._support_was_disconnected and len(graph.connected_components()) > 1:
            self._support_was_disconnected = True
            logger.info(
                "Residual support became disconnected after phase %d.",
                len(self._trace.phases) - 1,
            )

    def _check_matching(
        self, family: LaminarFamily, matching: PerfectMatching, weight: int
    ) -> None:
        if weight != len(family):
            raise InvariantError(
                f"matching weight {weight} differs from the family size {len(family)}."
            )
        for member in family:
            if (count := crossings(member, matching)) != 1:
                raise InvariantError(
                    f"matching crosses tight cut {member.members} {count} times."
                )

    def _check_partial(self, residual: FracMatching, family: LaminarFamily) -> None:
        alpha = residual.alpha
        for vertex, degree in enumerate(degree_sums(residual)):
            if degree != alpha:
                raise InvariantError(
                    f"vertex {vertex} has degree {degree} after subtraction, "
                    f"expected {alpha}."
                )
        for member in family:
            if (capacity := cut_capacity(residual, member)) != alpha:
                raise InvariantError(
                    f"tight cut {member.members} has capacity {capacity} after "
                    f"subtraction, expected {alpha}."
                )

    def _check_type2(
        self,
        residual: FracMatching,
        family: LaminarFamily,
        grown: LaminarFamily,
        witness: OddSet,
    ) -> None:
        if (capacity := cut_capacity(residual, witness)) != residual.alpha:
            raise InvariantError(
                f"witness {witness.members} has capacity {capacity}, "
                f"expected {residual.alpha}."
            )
        if len(grown) <= len(family):
            raise InvariantError("Type 2 phase did not grow the laminar family.")

    def _check_bounds(self) -> None:
        n, m = self._x.n, self._x.m
        if len(self._trace.terms) > m:
            raise InvariantError(f"{len(self._trace.terms)} terms exceed m = {m}.")
        if (type2 := self._trace.count(PhaseType.TYPE2)) > max(n // 2 - 1, 0):
            raise InvariantError(f"{type2} Type 2 phases exceed n/2 - 1.")
        ceiling = denominator_ceiling(max_denominator(self._x), m, n)
        if self.stats.largest_denominator > ceiling:
            raise InvariantError(
                f"denominator {self.stats.largest_denominator} exceeds {ceiling}."
            )


def _new_tight_cut(
    family: LaminarFamily, grown: LaminarFamily, matching: PerfectMatching
) -> OddSet:
    """First member added to `grown` that `matching` crosses more than once."""
    for member in grown.sets[len(family) :]:
        if crossings(member, matching) > 1:
            return member
    raise InvariantError("no newly tight odd cut after the gamma step.")


def decompose(
    x: FracMatching, *, settings: Optional[DecomposerSettings] = None
) -> DecompositionTrace:
    """Writes `x` as a convex combination of at most `m` perfect matchings.

    Raises `PreconditionError` unless `x.alpha == 1` and `InfeasibleInputError`
    with the violation certificate if `x` is not a fractional perfect matching.
    """
    if settings is None:
        settings = DecomposerSettings()
    if x.alpha != 1:
        raise PreconditionError(f"decompose expects alpha = 1, got {x.alpha}.")

    violation = validate_fractional_pm(x)
    if violation is not None:
        raise InfeasibleInputError(violation)

    logger.debug("Decomposer settings:\n%s", pprint.pformat(settings, indent=1))
    return MainAlgorithm(x, settings).run()
