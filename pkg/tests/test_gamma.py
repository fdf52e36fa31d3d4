from fractions import Fraction
import random

import pytest

from matching_decomposition.core.errors import PreconditionError
from matching_decomposition.core.fractional import OddSet, subtract_matching, support
from matching_decomposition.core.matchings import PerfectMatching
from matching_decomposition.cuts.odd_cuts import min_odd_cut
from matching_decomposition.decomposers.gamma import (
    cut_gamma,
    find_gamma,
    find_gamma_bisect,
)
from matching_decomposition.decomposers.trace import DecompositionStats
from matching_decomposition.instances import (
    PETERSEN_SPOKES,
    PRISM_RUNGS,
    petersen_vector,
    prism_vector,
)
from matching_decomposition.laminar import build_maximal_laminar, edge_weights
from matching_decomposition.matching import WeightedGraph, min_weight_perfect_matching
from matching_decomposition.oracle.enumeration import brute_gamma
from tests.generators import random_decomposable

SPOKES = PerfectMatching.of(PETERSEN_SPOKES)
INNER = OddSet.of(range(5, 10))


def test_cut_gamma_of_the_petersen_inner_cycle():
    assert cut_gamma(Fraction(1), petersen_vector(), SPOKES, INNER) == Fraction(1, 6)


def test_cut_gamma_needs_two_crossings():
    with pytest.raises(PreconditionError):
        cut_gamma(
            Fraction(1), prism_vector(), PerfectMatching.of(PRISM_RUNGS), OddSet.of([0])
        )


def test_find_gamma_on_petersen_spokes():
    stats = DecompositionStats()

    gamma, witness = find_gamma(
        Fraction(1), petersen_vector(), SPOKES, Fraction(1, 3), INNER, stats=stats
    )

    assert gamma == Fraction(1, 6)
    assert witness == INNER
    assert stats.gamma_iterations == 1
    assert stats.padberg_rao_calls == 1


def test_find_gamma_requires_a_violated_cut():
    with pytest.raises(PreconditionError):
        find_gamma(Fraction(1), petersen_vector(), SPOKES, Fraction(1, 6), INNER)


def test_bisection_agrees_on_petersen_spokes():
    gamma = find_gamma_bisect(Fraction(1), petersen_vector(), SPOKES, Fraction(1, 3))

    assert gamma == Fraction(1, 6)


def test_bisection_returns_beta_when_feasible():
    x = prism_vector()
    matching = PerfectMatching.of([(0, 1), (2, 4), (3, 5)])

    gamma = find_gamma_bisect(Fraction(1), x, matching, Fraction(1, 3))

    assert gamma == Fraction(1, 3)


def test_brute_gamma_of_petersen_spokes():
    assert brute_gamma(Fraction(1), petersen_vector(), SPOKES) == Fraction(1, 6)


def _check_triple_agreement(seed: int, n: int) -> bool:
    """Checks the gamma methods on the first phase of a random instance;
    returns whether that phase needed a gamma at all."""
    rng = random.Random(seed)
    y = random_decomposable(rng, n, rng.randint(2, 6))
    family = build_maximal_laminar(y)
    graph = support(y)
    matching = min_weight_perfect_matching(
        WeightedGraph(graph, edge_weights(family, graph))
    )
    beta = min(y.value(u, v) for u, v in matching)
    if beta == y.alpha:
        return False

    cut = min_odd_cut(subtract_matching(y, matching, beta))
    expected = brute_gamma(y.alpha, y, matching)
    if cut.capacity >= y.alpha - beta:
        assert expected is None or expected >= beta
        assert find_gamma_bisect(y.alpha, y, matching, beta) == beta
        return False

    gamma, witness = find_gamma(y.alpha, y, matching, beta, cut.odd_set)
    assert 0 < gamma < beta
    assert gamma == expected
    assert find_gamma_bisect(y.alpha, y, matching, beta) == gamma
    assert cut_gamma(y.alpha, y, matching, witness) == gamma
    return True


@pytest.mark.parametrize("seed", range(20))
def test_gamma_methods_agree(seed):
    _check_triple_agreement(seed, 8)


@pytest.mark.slow
def test_gamma_methods_agree_corpus():
    phases = sum(
        _check_triple_agreement(seed, n) for seed in range(60) for n in (8, 10)
    )
    assert phases > 0
