"""Exact s-t minimum cuts and Gomory-Hu trees over rational capacities.

Capacities are scaled by the lcm of their denominators before they reach
networkx, so every flow computation runs on integers and the results are
divided back into exact Fractions.
"""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
import math
from typing import TYPE_CHECKING, Iterable, Optional

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.graph import canonical_edge

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching

CapacitatedEdge = tuple[int, int, Fraction]


@dataclass
class CutStats:
    """Counts of the expensive primitives, accumulated per call site."""

    max_flow_calls: int = 0
    padberg_rao_calls: int = 0


@dataclass(frozen=True)
class CapacitatedGraph:
    """Simple undirected graph with nonnegative rational capacities.

    Use `from_edges` to build one from a multigraph: parallel edges are merged by
    summing their capacities and self-loops are dropped.
    """

    n: int
    edges: tuple[CapacitatedEdge, ...]

    def __post_init__(self) -> None:
        for u, v, capacity in self.edges:
            if capacity < 0:
                raise InputError(f"capacity of ({u}, {v}) is negative: {capacity}.")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[CapacitatedEdge]) -> CapacitatedGraph:
        merged: dict[tuple[int, int], Fraction] = {}
        for u, v, capacity in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}.")
            if u == v:
                continue
            key = canonical_edge(u, v)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(capacity)

        return cls(n, tuple((u, v, c) for (u, v), c in sorted(merged.items())))

    @classmethod
    def from_frac_matching(cls, x: FracMatching) -> CapacitatedGraph:
        """Support graph of `x` with the edge values as capacities."""
        return cls.from_edges(
            x.n, ((*x.graph.edges[i], x.values[i]) for i in x.support_ids)
        )

    @cached_property
    def scale(self) -> int:
        return reduce(math.lcm, (c.denominator for _, _, c in self.edges), 1)

    @cached_property
    def degrees(self) -> tuple[Fraction, ...]:
        degrees = [Fraction(0)] * self.n
        for u, v, capacity in self.edges:
            degrees[u] += capacity
            degrees[v] += capacity
        return tuple(degrees)

    def cut_value(self, side: Iterable[int]) -> Fraction:
        side = side if isinstance(side, (set, frozenset)) else set(side)
        return sum(
            (c for u, v, c in self.edges if (u in side) != (v in side)), Fraction(0)
        )

    def lowered(self, amounts: dict[int, Fraction]) -> CapacitatedGraph:
        """Copy with `amounts[i]` subtracted from the capacity of edge `i`."""
        return CapacitatedGraph(
            self.n,
            tuple(
                (u, v, c - amounts.get(i, 0)) for i, (u, v, c) in enumerate(self.edges)
            ),
        )

    def positive_components(self) -> list[list[int]]:
        """Components of the graph formed by positive-capacity edges."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v) for u, v, c in self.edges if c > 0)
        components = [sorted(comp) for comp in nx.connected_components(graph)]
        return sorted(components, key=lambda comp: comp[0])

    def to_networkx(self) -> nx.Graph:
        """Integer-scaled copy; divide flow values by `scale`."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v, capacity in self.edges:
            graph.add_edge(u, v, capacity=int(capacity * self.scale))
        return graph


def _scaled_min_cut(
    graph: nx.Graph, scale: int, s: int, t: int, stats: Optional[CutStats]
) -> tuple[Fraction, frozenset[int]]:
    if stats is not None:
        stats.max_flow_calls += 1
    value, (reachable, _) = nx.minimum_cut(
        graph, s, t, capacity="capacity", flow_func=edmonds_karp
    )
    return Fraction(value, scale), frozenset(reachable)


def max_flow_min_cut(
    g: CapacitatedGraph, s: int, t: int, *, stats: Optional[CutStats] = None
) -> tuple[Fraction, frozenset[int]]:
    """Exact s-t minimum cut value and the side of the cut containing `s`."""
    if s == t:
        raise InputError("source and sink must differ.")
    for vertex in (s, t):
        if not 0 <= vertex < g.n:
            raise InputError(f"vertex {vertex} is outside 0..{g.n - 1}.")

    return _scaled_min_cut(g.to_networkx(), g.scale, s, t, stats)


@dataclass(frozen=True)
class GomoryHuTree:
    """Cut tree in parent-pointer form rooted at vertex 0.

    `parent[v]` and `weight[v]` describe the tree edge above `v`; both are
    `None` for the root.
    """

    n: int
    parent: tuple[Optional[int], ...]
    weight: tuple[Optional[Fraction], ...]

    @property
    def edges(self) -> list[tuple[int, int, Fraction]]:
        return [
            (v, p, w)
            for v, (p, w) in enumerate(zip(self.parent, self.weight, strict=True))
            if p is not None and w is not None
        ]

    @cached_property
    def _children(self) -> tuple[tuple[int, ...], ...]:
        children: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                children[p].append(v)
        return tuple(tuple(c) for c in children)

    def subtree(self, vertex: int) -> frozenset[int]:
        """Vertices below `vertex` (inclusive): one side of its fundamental cut."""
        stack, seen = [vertex], set()
        while stack:
            current = stack.pop()
            seen.add(current)
            stack.extend(self._children[current])
        return frozenset(seen)

    def min_cut_value(self, s: int, t: int) -> Fraction:
        """Smallest edge weight on the s-t tree path."""
        if s == t:
            raise InputError("source and sink must differ.")

        def ancestors(v: int) -> list[int]:
            path = [v]
            while (p := self.parent[path[-1]]) is not None:
                path.append(p)
            return path

        s_path, t_path = ancestors(s), ancestors(t)
        common = set(s_path) & set(t_path)
        weights = [
            self.weight[v] for v in s_path + t_path if v not in common
        ]
        return min(w for w in weights if w is not None)


def gomory_hu_tree(
    g: CapacitatedGraph, *, stats: Optional[CutStats] = None
) -> GomoryHuTree:
    """Gusfield's construction: n-1 max-flow calls, no contractions.

    Disconnected graphs are fine; missing connections show up as 0-weight tree
    edges.
    """
    if g.n == 0:
        return GomoryHuTree(0, (), ())

    root = 0
    parent: list[Optional[int]] = [root] * g.n
    parent[root] = None
    weight: list[Optional[Fraction]] = [Fraction(0)] * g.n
    weight[root] = None

    graph, scale = g.to_networkx(), g.scale
    for vertex in range(1, g.n):
        vertex_parent = parent[vertex]
        assert vertex_parent is not None
        cut_value, source_side = _scaled_min_cut(
            graph, scale, vertex, vertex_parent, stats
        )
        weight[vertex] = cut_value

        # Siblings on the vertex's side of the cut move below it.
        for other in source_side:
            if other != vertex and parent[other] == vertex_parent:
                parent[other] = vertex

        grandparent = parent[vertex_parent]
        if grandparent is not None and grandparent in source_side:
            parent[vertex] = grandparent
            parent[vertex_parent] = vertex
            weight[vertex] = weight[vertex_parent]
            weight[vertex_parent] = cut_value

    return GomoryHuTree(g.n, tuple(parent), tuple(weight))
