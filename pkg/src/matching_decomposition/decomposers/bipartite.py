from __future__ import annotations
import logging
from typing import TYPE_CHECKING, Optional

import networkx as nx

from matching_decomposition.core.errors import InfeasibleInputError, InputError
from matching_decomposition.core.fractional import (
    degree_sums,
    subtract_matching,
    support,
)
from matching_decomposition.core.matchings import Decomposition, PerfectMatching
from matching_decomposition.cuts.validation import Violation, ViolationKind

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.core.graph import Graph

logger = logging.getLogger(__name__)


def _any_perfect_matching(graph: Graph) -> Optional[PerfectMatching]:
    nx_graph = graph.to_networkx()
    coloring = nx.bipartite.color(nx_graph)
    top_nodes = [v for v, color in coloring.items() if color == 0]
    mate = nx.bipartite.hopcroft_karp_matching(nx_graph, top_nodes)
    if len(mate) != graph.n:
        return None
    return PerfectMatching.of((u, v) for u, v in mate.items() if u < v)


def bvn_bipartite(x: FracMatching) -> Decomposition:
    """Greedy Birkhoff-von Neumann decomposition of a bipartite vector.

    Repeatedly subtracts any perfect matching of the residual support as far as
    its smallest edge allows. Each step zeroes at least one edge.
    """
    if not support(x).is_bipartite():
        raise InputError("the support of the vector is not bipartite.")
    for edge, value in zip(x.graph.edges, x.values, strict=True):
        if value < 0:
            raise InfeasibleInputError(
                Violation(ViolationKind.NEGATIVE_VALUE, value, x.alpha, edge=edge)
            )
    for vertex, degree in enumerate(degree_sums(x)):
        if degree != x.alpha:
            raise InfeasibleInputError(
                Violation(ViolationKind.DEGREE, degree, x.alpha, vertex=vertex)
            )

    decomposition = Decomposition()
    y = x
    while not y.is_zero():
        matching = _any_perfect_matching(support(y))
        if matching is None:
            raise InfeasibleInputError(
                Violation(ViolationKind.NO_PERFECT_MATCHING, y.alpha, y.alpha)
            )
        beta = min(y.value(u, v) for u, v in matching)
        decomposition.append(beta, matching)
        y = subtract_matching(y, matching, beta)

    logger.debug("Bipartite decomposition with %d terms.", len(decomposition))
    return decomposition
