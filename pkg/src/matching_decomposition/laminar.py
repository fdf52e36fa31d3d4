"""Maximal laminar families of tight odd cuts and the edge weights they induce.

The family is kept as a list of odd sets in insertion order; the containment
tree is derived from it. Growing a family walks that tree from the root: at a
node `S` the outside `V - S` and every child of `S` are contracted to single
nodes and the contracted graph is searched for a new tight odd cut, until no
node yields one.
"""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
import logging
from typing import TYPE_CHECKING, Iterable, Optional

from matching_decomposition.core.errors import InvariantError, PreconditionError
from matching_decomposition.core.fractional import OddSet, cut_capacity
from matching_decomposition.cuts.flow import CapacitatedGraph
from matching_decomposition.cuts.tight_cuts import search_tight_odd_cut
from matching_decomposition.cuts.validation import validate_fractional_pm

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.core.graph import Graph
    from matching_decomposition.cuts.flow import CutStats
    from matching_decomposition.core.matchings import PerfectMatching

logger = logging.getLogger(__name__)


def _parents(sets: list[OddSet] | tuple[OddSet, ...]) -> list[Optional[int]]:
    parents: list[Optional[int]] = []
    for member in sets:
        containing = [
            i
            for i, other in enumerate(sets)
            if len(other) > len(member) and member.is_subset(other)
        ]
        parents.append(min(containing, key=lambda i: len(sets[i]), default=None))
    return parents


@dataclass(frozen=True)
class LaminarFamily:
    """Laminar family of odd sets on `0..n-1`, tight at `alpha`.

    Tree node `None` stands for the whole vertex set.
    """

    n: int
    alpha: Fraction
    sets: tuple[OddSet, ...] = ()

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    @cached_property
    def parents(self) -> tuple[Optional[int], ...]:
        return tuple(_parents(self.sets))

    def children(self, node: Optional[int]) -> list[int]:
        return [i for i, parent in enumerate(self.parents) if parent == node]

    def walk_order(self) -> list[Optional[int]]:
        """Tree nodes breadth first, parents before children."""
        order: list[Optional[int]] = [None]
        position = 0
        while position < len(order):
            order.extend(self.children(order[position]))
            position += 1
        return order

    def check_invariants(self, x: Optional[FracMatching] = None) -> None:
        """Raises `InvariantError` unless laminar, within size bounds and tight."""
        for i, first in enumerate(self.sets):
            if not 3 <= len(first) <= self.n - 3:
                raise InvariantError(f"family member {first.members} has a bad size.")
            for second in self.sets[i + 1 :]:
                if first == second:
                    raise InvariantError(f"{first.members} appears twice.")
                if not first.is_laminar_with(second):
                    raise InvariantError(
                        f"{first.members} and {second.members} cross."
                    )

        if self.n >= 2 and len(self.sets) > self.n // 2 - 1:
            raise InvariantError(
                f"family holds {len(self.sets)} sets, more than n/2 - 1."
            )

        if x is not None:
            for member in self.sets:
                capacity = cut_capacity(x, member)
                if capacity != self.alpha:
                    raise InvariantError(
                        f"{member.members} has capacity {capacity}, "
                        f"expected {self.alpha}."
                    )


def edge_weights(family: LaminarFamily, graph: Graph) -> tuple[int, ...]:
    """Number of family members whose cut contains each edge."""
    return tuple(
        sum(1 for member in family.sets if member.separates(u, v))
        for u, v in graph.edges
    )


def crossings(odd_set: OddSet, matching: PerfectMatching) -> int:
    return sum(1 for u, v in matching.edges if odd_set.separates(u, v))


class _LaminarGrower:
    def __init__(
        self, sets: Iterable[OddSet], x: FracMatching, stats: Optional[CutStats]
    ) -> None:
        self._sets = list(sets)
        self._x = x
        self._stats = stats
        self._support = CapacitatedGraph.from_frac_matching(x)

    def grow(self) -> LaminarFamily:
        queue = LaminarFamily(self._x.n, self._x.alpha, tuple(self._sets)).walk_order()
        position = 0
        while position < len(queue):
            node = queue[position]
            position += 1
            while (new_set := self._search(node)) is not None:
                self._sets.append(new_set)
                queue.append(len(self._sets) - 1)
                logger.debug(
                    "Added tight odd cut %s under %s.",
                    new_set.members,
                    "root" if node is None else self._sets[node].members,
                )

        family = LaminarFamily(self._x.n, self._x.alpha, tuple(self._sets))
        family.check_invariants(self._x)
        return family

    def _search(self, node: Optional[int]) -> Optional[OddSet]:
        n = self._x.n
        parents = _parents(self._sets)
        children = [i for i, parent in enumerate(parents) if parent == node]
        known = {member.as_set for member in self._sets}

        if node is None:
            scope = frozenset(range(n))
            # V - C coincides with a contracted singleton below, so it is added
            # here for every top-level member C it does not cross.
            for child in children:
                complement = OddSet.of(scope - self._sets[child].as_set)
                if complement.as_set not in known and all(
                    complement.is_laminar_with(member) for member in self._sets
                ):
                    return self._checked(complement)
        else:
            scope = self._sets[node].as_set

        blocks = [self._sets[child].as_set for child in children]
        covered = frozenset().union(*blocks)
        blocks.extend(frozenset([v]) for v in sorted(scope - covered))
        inner_count = len(blocks)
        if node is not None:
            blocks.append(frozenset(range(n)) - scope)
        assert all(len(block) % 2 == 1 for block in blocks), "blocks must be odd"

        # A new set needs three inner blocks and must leave one out.
        if inner_count < 4:
            return None

        block_of = {v: i for i, block in enumerate(blocks) for v in block}
        contracted = CapacitatedGraph.from_edges(
            len(blocks),
            ((block_of[u], block_of[v], c) for u, v, c in self._support.edges),
        )

        def expand(nodes: frozenset[int]) -> frozenset[int]:
            return frozenset().union(*(blocks[i] for i in nodes))

        def admissible(nodes: frozenset[int]) -> bool:
            if any(i >= inner_count for i in nodes):
                return False
            if not 3 <= len(nodes) < inner_count:
                return False
            expanded = expand(nodes)
            return 3 <= len(expanded) <= n - 3 and expanded not in known

        found = search_tight_odd_cut(
            contracted,
            self._x.alpha,
            admissible=admissible,
            exhaustive=False,
            stats=self._stats,
        )
        if found is None:
            return None
        return self._checked(OddSet.of(expand(found)))

    def _checked(self, candidate: OddSet) -> OddSet:
        capacity = cut_capacity(self._x, candidate)
        if capacity != self._x.alpha:
            raise InvariantError(
                f"{candidate.members} has capacity {capacity}, not {self._x.alpha}."
            )
        for member in self._sets:
            if not candidate.is_laminar_with(member):
                raise InvariantError(
                    f"{candidate.members} crosses {member.members}."
                )
        return candidate


def build_maximal_laminar(
    x: FracMatching, *, stats: Optional[CutStats] = None
) -> LaminarFamily:
    """Maximal laminar family of tight odd `x.alpha`-cuts of `x`."""
    violation = validate_fractional_pm(x, stats=stats)
    if violation is not None:
        raise PreconditionError(
            f"cannot build a laminar family: {violation.describe()}"
        )
    return _LaminarGrower((), x, stats).grow()


def update_laminar(
    family: LaminarFamily, x: FracMatching, *, stats: Optional[CutStats] = None
) -> LaminarFamily:
    """Extends `family`, whose members must all be tight under `x`, to a
    maximal laminar family at `x.alpha`."""
    for member in family.sets:
        capacity = cut_capacity(x, member)
        if capacity != x.alpha:
            raise InvariantError(
                f"family member {member.members} is not tight: "
                f"capacity {capacity}, alpha {x.alpha}."
            )
    return _LaminarGrower(family.sets, x, stats).grow()
