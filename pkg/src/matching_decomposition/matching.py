"""Minimum-weight perfect matchings on general graphs.

networkx's blossom implementation maximizes weight. Among maximum-cardinality
matchings it is asked to maximize `ceiling - w(e)` with `ceiling` above every
weight, which is the same as minimizing `w` over perfect matchings. All
weights are integers, so the duals stay exact.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.graph import Graph
from matching_decomposition.core.matchings import PerfectMatching


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.graph.m:
            raise InputError(
                f"expected {self.graph.m} edge weights, got {len(self.weights)}."
            )
        if any(not isinstance(w, int) or w < 0 for w in self.weights):
            raise InputError("edge weights must be nonnegative integers.")

    @classmethod
    def unweighted(cls, graph: Graph) -> WeightedGraph:
        return cls(graph, (0,) * graph.m)


def min_weight_perfect_matching(wg: WeightedGraph) -> Optional[PerfectMatching]:
    """Perfect matching of minimum total weight, `None` if there is none."""
    n = wg.graph.n
    if n % 2 == 1:
        raise InputError(f"perfect matchings need an even vertex count, got {n}.")
    if n == 0:
        return PerfectMatching(())

    ceiling = max(wg.weights, default=0) + 1
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for (u, v), weight in zip(wg.graph.edges, wg.weights, strict=True):
        graph.add_edge(u, v, weight=ceiling - weight)

    mate = nx.max_weight_matching(graph, maxcardinality=True, weight="weight")
    if 2 * len(mate) != n:
        return None

    matching = PerfectMatching.of(mate)
    assert matching.is_perfect_in(wg.graph), "blossom returned a non-perfect matching"
    return matching


def has_perfect_matching(graph: Graph) -> bool:
    if graph.n % 2 == 1:
        return False
    return min_weight_perfect_matching(WeightedGraph.unweighted(graph)) is not None
