import random

import pytest

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.graph import Graph
from matching_decomposition.core.matchings import PerfectMatching
from matching_decomposition.instances import (
    PRISM_RUNGS,
    complete,
    cycle,
    petersen,
    prism,
    two_triangles,
)
from matching_decomposition.matching import (
    WeightedGraph,
    has_perfect_matching,
    min_weight_perfect_matching,
)
from matching_decomposition.oracle.enumeration import enumerate_perfect_matchings
from tests.generators import random_graph


def test_prism_prefers_the_cheap_rungs():
    graph = prism()
    rungs = set(PRISM_RUNGS)
    weights = tuple(0 if edge in rungs else 1 for edge in graph.edges)

    matching = min_weight_perfect_matching(WeightedGraph(graph, weights))

    assert matching == PerfectMatching.of(PRISM_RUNGS)


def test_prism_avoids_the_expensive_rungs():
    graph = prism()
    rungs = set(PRISM_RUNGS)
    weights = tuple(2 if edge in rungs else 0 for edge in graph.edges)

    matching = min_weight_perfect_matching(WeightedGraph(graph, weights))

    assert matching.weight(graph, weights) == 2
    assert len(rungs & set(matching.edges)) == 1


@pytest.mark.parametrize(
    "graph, expected",
    [
        (two_triangles(), False),
        (prism(), True),
        (petersen(), True),
        (cycle(6), True),
        (complete(4), True),
        (Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), False),
        (Graph(0, ()), True),
        (complete(5), False),
    ],
)
def test_has_perfect_matching(graph, expected):
    assert has_perfect_matching(graph) is expected


def test_no_perfect_matching_returns_none():
    wg = WeightedGraph.unweighted(two_triangles())

    assert min_weight_perfect_matching(wg) is None


@pytest.mark.parametrize(
    "weights",
    [(1, 2), (-1, 0, 0, 0, 0, 0), (0.5, 0, 0, 0, 0, 0)],
    ids=["length", "negative", "float"],
)
def test_weights_are_checked(weights):
    with pytest.raises(InputError):
        WeightedGraph(complete(4), weights)


def test_odd_vertex_count_is_an_input_error():
    with pytest.raises(InputError):
        min_weight_perfect_matching(WeightedGraph.unweighted(complete(3)))


def _check_against_enumeration(rng: random.Random, n: int) -> None:
    density = rng.uniform(0.2, 0.8)
    graph = random_graph(rng, n, density, with_matching=rng.random() < 0.9)
    weights = tuple(rng.randint(0, 6) for _ in graph.edges)

    matching = min_weight_perfect_matching(WeightedGraph(graph, weights))

    all_matchings = enumerate_perfect_matchings(graph)
    if not all_matchings:
        assert matching is None
        return
    assert matching.is_perfect_in(graph)
    assert matching.weight(graph, weights) == min(
        other.weight(graph, weights) for other in all_matchings
    )


@pytest.mark.parametrize("seed", range(30))
def test_matches_enumeration(seed):
    rng = random.Random(seed)
    _check_against_enumeration(rng, rng.choice([2, 4, 6, 8]))


@pytest.mark.slow
def test_matches_enumeration_corpus():
    rng = random.Random(11)
    for _ in range(500):
        _check_against_enumeration(rng, rng.choice([2, 4, 6, 8, 10, 12]))
