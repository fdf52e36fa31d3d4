"""Fractional perfect matching vectors, odd sets and their exact arithmetic.

All numbers are `fractions.Fraction`; nothing in here touches floats.
"""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
import math
from typing import TYPE_CHECKING, Iterable, Sequence

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.graph import Graph

if TYPE_CHECKING:
    from matching_decomposition.core.matchings import PerfectMatching


@dataclass(frozen=True)
class OddSet:
    """Vertex subset of odd cardinality, stored as a sorted tuple."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.members) % 2 == 0:
            raise InputError(
                f"odd set must have odd size, got {len(self.members)}."
            )
        if list(self.members) != sorted(set(self.members)):
            raise InputError("odd set members must be sorted and distinct.")

    @classmethod
    def of(cls, members: Iterable[int]) -> OddSet:
        return cls(tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.as_set

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def complement(self, n: int) -> OddSet:
        """Complement in `0..n-1`; odd only when `n` is even."""
        return OddSet(tuple(v for v in range(n) if v not in self.as_set))

    def separates(self, u: int, v: int) -> bool:
        return (u in self.as_set) != (v in self.as_set)

    def is_subset(self, other: OddSet) -> bool:
        return self.as_set <= other.as_set

    def is_laminar_with(self, other: OddSet) -> bool:
        inter = self.as_set & other.as_set
        return not inter or inter == self.as_set or inter == other.as_set

    def check_bounds(self, n: int) -> None:
        if not self.members:
            raise InputError("odd set must not be empty.")
        if self.members[0] < 0 or self.members[-1] >= n:
            raise InputError(f"odd set has a vertex outside 0..{n - 1}.")
        if len(self.members) >= n:
            raise InputError("odd set must be a proper subset of the vertices.")


@dataclass(frozen=True)
class FracMatching:
    """Edge-indexed rational vector `values` on `graph` with scale `alpha`.

    The vector may hold zeros and, before validation, negative entries; only
    `alpha` is range checked on construction.
    """

    graph: Graph
    values: tuple[Fraction, ...]
    alpha: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if len(self.values) != self.graph.m:
            raise InputError(
                f"expected {self.graph.m} edge values, got {len(self.values)}."
            )
        if not all(isinstance(value, Fraction) for value in self.values):
            raise InputError("edge values must be exact Fractions.")
        if not isinstance(self.alpha, Fraction):
            raise InputError("alpha must be an exact Fraction.")
        if self.alpha < 0 or self.alpha > 1:
            raise InputError(f"alpha must lie in [0, 1], got {self.alpha}.")

    @classmethod
    def uniform(
        cls, graph: Graph, value: Fraction, alpha: Fraction = Fraction(1)
    ) -> FracMatching:
        return cls(graph, tuple(value for _ in graph.edges), alpha)

    @classmethod
    def from_pairs(
        cls,
        n: int,
        weighted_edges: Iterable[tuple[int, int, Fraction]],
        alpha: Fraction = Fraction(1),
    ) -> FracMatching:
        weighted_edges = list(weighted_edges)
        graph = Graph.from_edges(n, ((u, v) for u, v, _ in weighted_edges))
        values = tuple(Fraction(value) for _, _, value in weighted_edges)
        return cls(graph, values, alpha)

    @property
    def n(self) -> int:
        return self.graph.n

    def value(self, u: int, v: int) -> Fraction:
        return self.values[self.graph.edge_id(u, v)]

    @cached_property
    def support_ids(self) -> tuple[int, ...]:
        return tuple(i for i, value in enumerate(self.values) if value > 0)

    @property
    def m(self) -> int:
        """Support size."""
        return len(self.support_ids)

    def is_zero(self) -> bool:
        return not any(self.values)

    def with_values(
        self, values: Sequence[Fraction], alpha: Fraction
    ) -> FracMatching:
        return FracMatching(self.graph, tuple(values), alpha)


def support(x: FracMatching) -> Graph:
    """Subgraph of `x.graph` with the edges carrying a positive value."""
    return x.graph.subgraph(x.support_ids)


def cut_capacity(x: FracMatching, odd_set: OddSet) -> Fraction:
    """Exact `x(delta(S))`."""
    odd_set.check_bounds(x.n)
    return sum(
        (
            x.values[edge_id]
            for edge_id, (u, v) in enumerate(x.graph.edges)
            if odd_set.separates(u, v)
        ),
        Fraction(0),
    )


def degree_sums(x: FracMatching) -> tuple[Fraction, ...]:
    sums = [Fraction(0)] * x.n
    for value, (u, v) in zip(x.values, x.graph.edges, strict=True):
        sums[u] += value
        sums[v] += value
    return tuple(sums)


def _matching_ids(x: FracMatching, matching: PerfectMatching) -> list[int]:
    return [x.graph.edge_id(u, v) for u, v in matching.edges]


def subtract_matching(
    y: FracMatching, matching: PerfectMatching, b: Fraction
) -> FracMatching:
    """Returns `y - b * M` at scale `y.alpha - b`."""
    if b < 0:
        raise InputError(f"coefficient must be nonnegative, got {b}.")
    if b == 0:
        return y

    matching_ids = _matching_ids(y, matching)
    smallest = min(y.values[i] for i in matching_ids)
    if b > smallest:
        raise InputError(
            f"coefficient {b} exceeds the smallest matching edge value {smallest}."
        )
    if b > y.alpha:
        raise InputError(f"coefficient {b} exceeds alpha {y.alpha}.")

    values = list(y.values)
    for edge_id in matching_ids:
        values[edge_id] -= b
    return y.with_values(values, y.alpha - b)


def add_matching(
    y: FracMatching, matching: PerfectMatching, b: Fraction
) -> FracMatching:
    """Inverse of `subtract_matching`."""
    values = list(y.values)
    for edge_id in _matching_ids(y, matching):
        values[edge_id] += b
    return y.with_values(values, y.alpha + b)


def max_denominator(x: FracMatching) -> int:
    """Largest reduced denominator over the support (`d` of the input)."""
    return max((x.values[i].denominator for i in x.support_ids), default=1)


def common_denominator(x: FracMatching) -> int:
    """lcm of the denominators of all components and of alpha."""
    return reduce(
        math.lcm, (value.denominator for value in x.values), x.alpha.denominator
    )
