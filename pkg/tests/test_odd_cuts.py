from fractions import Fraction
import random

import pytest

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.fractional import FracMatching
from matching_decomposition.cuts.flow import CapacitatedGraph, CutStats
from matching_decomposition.cuts.odd_cuts import min_odd_cut, padberg_rao
from matching_decomposition.instances import (
    petersen_vector,
    petersen_without_spokes,
    prism_vector,
    single_edge,
)
from matching_decomposition.oracle.enumeration import brute_min_odd_cut
from tests.generators import random_frac_vector


def test_prism_ties_go_to_the_smallest_set():
    result = min_odd_cut(prism_vector())

    assert result.odd_set.members == (0,)
    assert result.capacity == 1


def test_single_edge():
    result = min_odd_cut(single_edge())

    assert result.odd_set.members == (0,)
    assert result.capacity == 1


def test_petersen_without_spokes_finds_the_empty_cut():
    result = min_odd_cut(petersen_without_spokes())

    assert result.odd_set.members == (5, 6, 7, 8, 9)
    assert result.capacity == 0


def test_petersen_minimum_is_a_vertex():
    assert min_odd_cut(petersen_vector()).capacity == 1


def test_light_odd_set_beats_the_singletons():
    # Two triangles joined by a light edge.
    x = FracMatching.from_pairs(
        6,
        [
            (0, 1, Fraction(1)),
            (1, 2, Fraction(1)),
            (0, 2, Fraction(1)),
            (3, 4, Fraction(1)),
            (4, 5, Fraction(1)),
            (3, 5, Fraction(1)),
            (2, 3, Fraction(1, 7)),
        ],
    )

    result = min_odd_cut(x)

    assert result.odd_set.members == (3, 4, 5)
    assert result.capacity == Fraction(1, 7)


def test_counts_primitive_calls():
    stats = CutStats()

    min_odd_cut(prism_vector(), stats=stats)

    assert stats.padberg_rao_calls == 1
    assert stats.max_flow_calls == 5


@pytest.mark.parametrize("n", [0, 3])
def test_rejects_bad_node_counts(n):
    with pytest.raises(InputError):
        padberg_rao(CapacitatedGraph(n, ()))


def _check_against_oracle(x: FracMatching) -> None:
    result = min_odd_cut(x)
    expected = brute_min_odd_cut(x)
    assert result.capacity == expected.capacity, x
    assert CapacitatedGraph.from_frac_matching(x).cut_value(
        result.odd_set.members
    ) == result.capacity


@pytest.mark.parametrize("seed", range(30))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 4, 6, 8])
    _check_against_oracle(random_frac_vector(rng, n, density=rng.uniform(0.2, 0.9)))


@pytest.mark.slow
def test_matches_brute_force_corpus():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.choice([2, 4, 6, 8, 10, 12])
        _check_against_oracle(
            random_frac_vector(rng, n, density=rng.uniform(0.2, 0.9))
        )
