"""Named example graphs and vectors.

Vertex names follow the letters a, b, c, ... in index order.
"""
from __future__ import annotations
from fractions import Fraction
import string
from typing import TYPE_CHECKING

from matching_decomposition.core.fractional import FracMatching
from matching_decomposition.core.graph import Graph

if TYPE_CHECKING:
    from matching_decomposition.core.matchings import PerfectMatching


def _named(names: str) -> list[tuple[int, int]]:
    index = {name: i for i, name in enumerate(string.ascii_lowercase)}
    return [(index[pair[0]], index[pair[1]]) for pair in names.split()]


def prism() -> Graph:
    """Triangles a-c-e and b-d-f joined by the rungs a-b, c-d, e-f."""
    return Graph.from_edges(6, _named("ac ce ae bd df bf ab cd ef"))


PRISM_RUNGS = _named("ab cd ef")


def petersen() -> Graph:
    """Outer cycle a-b-c-d-e, inner pentagram f-h-j-g-i, spokes a-f ... e-j."""
    return Graph.from_edges(
        10, _named("ab bc cd de ae fh hj gj gi fi af bg ch di ej")
    )


PETERSEN_SPOKES = _named("af bg ch di ej")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def two_triangles() -> Graph:
    return Graph.from_edges(6, _named("ab bc ac de ef df"))


def prism_vector() -> FracMatching:
    return FracMatching.uniform(prism(), Fraction(1, 3))


def petersen_vector() -> FracMatching:
    return FracMatching.uniform(petersen(), Fraction(1, 3))


def petersen_without_spokes() -> FracMatching:
    """Petersen with the spokes at 0 and the cycles at 1/3, scale 2/3."""
    graph = petersen()
    spokes = set(PETERSEN_SPOKES)
    values = tuple(
        Fraction(0) if edge in spokes else Fraction(1, 3) for edge in graph.edges
    )
    return FracMatching(graph, values, Fraction(2, 3))


def cycle_vector(n: int) -> FracMatching:
    return FracMatching.uniform(cycle(n), Fraction(1, 2))


def single_edge() -> FracMatching:
    return FracMatching.uniform(Graph.from_edges(2, [(0, 1)]), Fraction(1))


def matching_indicator(graph: Graph, matching: PerfectMatching) -> FracMatching:
    """Indicator vector of `matching` on `graph`, scale 1."""
    values = tuple(Fraction(int(edge in matching)) for edge in graph.edges)
    return FracMatching(graph, values)
