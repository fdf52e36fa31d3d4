from fractions import Fraction

import pytest

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.fractional import (
    FracMatching,
    OddSet,
    add_matching,
    common_denominator,
    cut_capacity,
    degree_sums,
    max_denominator,
    subtract_matching,
    support,
)
from matching_decomposition.core.graph import Graph
from matching_decomposition.core.matchings import Decomposition, PerfectMatching
from matching_decomposition.instances import (
    PRISM_RUNGS,
    cycle,
    petersen,
    petersen_without_spokes,
    prism,
    prism_vector,
    two_triangles,
)


@pytest.mark.parametrize(
    "edges",
    [
        ((1, 1),),
        ((0, 1), (0, 1)),
        ((1, 0),),
        ((0, 4),),
    ],
    ids=["self-loop", "duplicate", "not-canonical", "out-of-range"],
)
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(InputError):
        Graph(4, edges)


def test_graph_edge_ids_follow_insertion_order():
    graph = Graph.from_edges(4, [(1, 0), (3, 2), (2, 1)])

    assert graph.edges == ((0, 1), (2, 3), (1, 2))
    assert graph.edge_id(2, 1) == 2
    assert graph.has_edge(3, 2)
    assert not graph.has_edge(0, 3)
    with pytest.raises(InputError):
        graph.edge_id(0, 3)


def test_graph_structure_queries():
    assert two_triangles().connected_components() == [[0, 1, 2], [3, 4, 5]]
    assert prism().connected_components() == [list(range(6))]
    assert cycle(6).is_bipartite()
    assert not prism().is_bipartite()


def test_petersen_fixture_is_the_petersen_graph():
    graph = petersen()

    assert graph.m == 15
    assert all(degree == 3 for _, degree in graph.to_networkx().degree)
    # No triangles and no 4-cycles: girth 5.
    nx_graph = graph.to_networkx()
    for u, v in graph.edges:
        assert not set(nx_graph[u]) & set(nx_graph[v])
    for u in range(10):
        for v in range(u + 1, 10):
            if not graph.has_edge(u, v):
                assert len(set(nx_graph[u]) & set(nx_graph[v])) == 1


def test_odd_set_construction():
    assert OddSet.of([4, 0, 2, 2]).members == (0, 2, 4)
    with pytest.raises(InputError):
        OddSet.of([0, 1])
    with pytest.raises(InputError):
        OddSet((2, 0, 1))


def test_odd_set_relations():
    triangle = OddSet.of([0, 2, 4])

    assert triangle.complement(6).members == (1, 3, 5)
    assert triangle.separates(0, 1)
    assert not triangle.separates(0, 2)
    assert OddSet.of([0]).is_subset(triangle)
    assert triangle.is_laminar_with(OddSet.of([1, 3, 5]))
    assert triangle.is_laminar_with(OddSet.of([0, 1, 2, 3, 4]))
    assert not triangle.is_laminar_with(OddSet.of([0, 1, 3]))


def test_odd_set_bounds():
    with pytest.raises(InputError):
        OddSet.of([0, 1, 6]).check_bounds(6)
    with pytest.raises(InputError):
        OddSet.of(range(5)).check_bounds(5)
    OddSet.of(range(5)).check_bounds(6)


@pytest.mark.parametrize(
    "values, alpha",
    [
        ((Fraction(1),), Fraction(1)),
        ((0.5, Fraction(1, 2)), Fraction(1)),
        ((Fraction(1), Fraction(0)), Fraction(3, 2)),
    ],
    ids=["length", "float", "alpha"],
)
def test_frac_matching_rejects_bad_vectors(values, alpha):
    graph = Graph(4, ((0, 1), (2, 3)))
    with pytest.raises(InputError):
        FracMatching(graph, values, alpha)


def test_frac_matching_support():
    x = petersen_without_spokes()

    assert x.m == 10
    assert support(x).m == 10
    assert not support(x).has_edge(0, 5)
    assert x.alpha == Fraction(2, 3)


def test_cut_capacity_and_degrees():
    x = prism_vector()

    assert cut_capacity(x, OddSet.of([0, 2, 4])) == 1
    assert cut_capacity(x, OddSet.of([0, 1, 2])) == Fraction(5, 3)
    assert degree_sums(x) == (Fraction(1),) * 6
    with pytest.raises(InputError):
        cut_capacity(x, OddSet.of(range(7)))


def test_subtract_and_add_matching():
    x = prism_vector()
    rungs = PerfectMatching.of(PRISM_RUNGS)

    residual = subtract_matching(x, rungs, Fraction(1, 3))

    assert residual.alpha == Fraction(2, 3)
    assert all(residual.value(u, v) == 0 for u, v in rungs)
    assert residual.value(0, 2) == Fraction(1, 3)
    assert degree_sums(residual) == (Fraction(2, 3),) * 6
    assert add_matching(residual, rungs, Fraction(1, 3)) == x
    assert subtract_matching(x, rungs, Fraction(0)) is x


@pytest.mark.parametrize("b", [Fraction(1, 2), Fraction(-1, 3)])
def test_subtract_matching_rejects_bad_coefficients(b):
    with pytest.raises(InputError):
        subtract_matching(prism_vector(), PerfectMatching.of(PRISM_RUNGS), b)


def test_denominators():
    x = FracMatching.from_pairs(
        4,
        [
            (0, 1, Fraction(1, 2)),
            (2, 3, Fraction(1, 2)),
            (0, 2, Fraction(1, 2)),
            (1, 3, Fraction(1, 2)),
            (0, 3, Fraction(0)),
        ],
        Fraction(1),
    )

    assert max_denominator(x) == 2
    assert common_denominator(x) == 2
    assert max_denominator(petersen_without_spokes()) == 3
    assert common_denominator(petersen_without_spokes()) == 3


def test_perfect_matching_checks():
    graph = prism()
    rungs = PerfectMatching.of(PRISM_RUNGS)

    assert rungs.is_perfect_in(graph)
    assert not PerfectMatching.of([(0, 1), (2, 3)]).is_perfect_in(graph)
    assert not PerfectMatching.of([(0, 3), (1, 2), (4, 5)]).is_perfect_in(graph)
    weights = [1 if edge in rungs else 0 for edge in graph.edges]
    assert rungs.weight(graph, weights) == 3


def test_decomposition_sums():
    graph = prism()
    decomposition = Decomposition()
    decomposition.append(Fraction(1, 3), PerfectMatching.of(PRISM_RUNGS))
    decomposition.append(Fraction(1, 6), PerfectMatching.of([(0, 1), (2, 4), (3, 5)]))

    assert len(decomposition) == 2
    assert decomposition.total == Fraction(1, 2)
    values = decomposition.weighted_sum(graph)
    assert values[graph.edge_id(0, 1)] == Fraction(1, 2)
    assert values[graph.edge_id(2, 3)] == Fraction(1, 3)
    assert values[graph.edge_id(2, 4)] == Fraction(1, 6)
    assert values[graph.edge_id(0, 2)] == 0
