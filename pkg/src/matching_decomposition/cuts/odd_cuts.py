from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import TYPE_CHECKING, Iterable, Optional

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.fractional import OddSet
from matching_decomposition.cuts.flow import CapacitatedGraph, gomory_hu_tree

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.cuts.flow import CutStats

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OddCutResult:
    odd_set: OddSet
    capacity: Fraction


def cut_order_key(side: Iterable[int], capacity: Fraction) -> tuple:
    """Orders candidate cuts: capacity, then size, then sorted members."""
    members = sorted(side)
    return (capacity, len(members), members)


def padberg_rao(
    g: CapacitatedGraph, *, stats: Optional[CutStats] = None
) -> tuple[frozenset[int], Fraction]:
    """Minimum cut of `g` over node sets of odd size.

    Candidates are the singletons and the odd sides of the fundamental cuts of a
    Gomory-Hu tree, each reported as the side without node 0. Ties go to the
    smaller set, then to the lexicographically smaller member list.
    """
    if g.n % 2 == 1 or g.n < 2:
        raise InputError(f"minimum odd cut needs an even node count >= 2, got {g.n}.")
    if stats is not None:
        stats.padberg_rao_calls += 1

    candidates = [(frozenset([v]), g.degrees[v]) for v in range(g.n)]

    tree = gomory_hu_tree(g, stats=stats)
    everything = frozenset(range(g.n))
    for child, _, _ in tree.edges:
        side = tree.subtree(child)
        if len(side) % 2 == 0:
            continue
        if 0 in side:
            side = everything - side
        # Exact capacity of the side itself, the tree weight only bounds it.
        candidates.append((side, g.cut_value(side)))

    return min(candidates, key=lambda cand: cut_order_key(*cand))


def min_odd_cut(
    x: FracMatching, *, stats: Optional[CutStats] = None
) -> OddCutResult:
    """Minimum odd cut of the support graph of `x` weighted by `x`."""
    if x.n % 2 == 1:
        raise InputError(f"minimum odd cut needs an even vertex count, got {x.n}.")

    side, capacity = padberg_rao(CapacitatedGraph.from_frac_matching(x), stats=stats)
    return OddCutResult(OddSet.of(side), capacity)
