from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator

from matching_decomposition.core.graph import canonical_edge

if TYPE_CHECKING:
    from matching_decomposition.core.graph import Edge, Graph


@dataclass(frozen=True)
class PerfectMatching:
    """Set of canonical vertex pairs, sorted."""

    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> PerfectMatching:
        return cls(tuple(sorted(canonical_edge(u, v) for u, v in pairs)))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges

    def is_perfect_in(self, graph: Graph) -> bool:
        """True iff every edge belongs to `graph` and covers each vertex once."""
        covered = [0] * graph.n
        for u, v in self.edges:
            if not graph.has_edge(u, v):
                return False
            covered[u] += 1
            covered[v] += 1
        return all(count == 1 for count in covered)

    def weight(self, graph: Graph, weights: Iterable) -> Fraction | int:
        """Total of the edge-indexed `weights` over the matching."""
        weights = list(weights)
        return sum(weights[graph.edge_id(u, v)] for u, v in self.edges)


@dataclass(frozen=True)
class DecompositionTerm:
    coeff: Fraction
    matching: PerfectMatching


@dataclass
class Decomposition:
    """Ordered convex-combination terms."""

    terms: list[DecompositionTerm] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[DecompositionTerm]:
        return iter(self.terms)

    def append(self, coeff: Fraction, matching: PerfectMatching) -> None:
        self.terms.append(DecompositionTerm(coeff, matching))

    @property
    def total(self) -> Fraction:
        return sum((term.coeff for term in self.terms), Fraction(0))

    def weighted_sum(self, graph: Graph) -> list[Fraction]:
        """Componentwise sum of `coeff * indicator(M)` over `graph`'s edges."""
        values = [Fraction(0)] * graph.m
        for term in self.terms:
            for u, v in term.matching.edges:
                values[graph.edge_id(u, v)] += term.coeff
        return values
