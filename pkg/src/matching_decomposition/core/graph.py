from __future__ import annotations
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

import networkx as nx

from matching_decomposition.core.errors import InputError

if TYPE_CHECKING:
    from typing import Sequence

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices `0..n-1`.

    Edges are canonical `(min, max)` pairs and their position in `edges` is the
    edge id every edge-indexed vector refers to.
    """

    n: int
    edges: tuple[Edge, ...]
    _index: dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}.")

        index = {}
        for edge_id, (u, v) in enumerate(self.edges):
            if u == v:
                raise InputError(f"self-loop at vertex {u} is not allowed.")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}."
                )
            if u > v:
                raise InputError(f"edge ({u}, {v}) is not canonical.")
            if (u, v) in index:
                raise InputError(f"duplicate edge ({u}, {v}).")
            index[(u, v)] = edge_id

        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Builds a graph canonicalizing each pair, keeping the given order."""
        return cls(n, tuple(canonical_edge(u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[canonical_edge(u, v)]
        except KeyError as exc:
            raise InputError(f"({u}, {v}) is not an edge of the graph.") from exc

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._index

    def subgraph(self, edge_ids: Sequence[int]) -> Graph:
        """Graph on the same vertices keeping only `edge_ids`, in the given order."""
        return Graph(self.n, tuple(self.edges[edge_id] for edge_id in edge_ids))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def connected_components(self) -> list[list[int]]:
        """Vertex sets of the components, sorted by their smallest vertex."""
        components = [
            sorted(comp) for comp in nx.connected_components(self.to_networkx())
        ]
        return sorted(components, key=lambda comp: comp[0])
