"""Brute-force ground truth for small instances.

Everything here is exponential in the vertex count and guarded by
`OracleLimits`.
"""
from __future__ import annotations
from fractions import Fraction
import itertools
import logging
from typing import TYPE_CHECKING, Iterator, Optional

from matching_decomposition.core.errors import InputError, SizeLimitError
from matching_decomposition.core.fractional import OddSet
from matching_decomposition.core.matchings import PerfectMatching
from matching_decomposition.cuts.flow import CapacitatedGraph
from matching_decomposition.cuts.odd_cuts import OddCutResult, cut_order_key
from matching_decomposition.laminar import crossings
from matching_decomposition.oracle.limits import OracleLimits

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.core.graph import Graph

logger = logging.getLogger(__name__)


def _check(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeLimitError(f"{what} is limited to {limit} vertices, got {n}.")


def enumerate_perfect_matchings(
    g: Graph, *, limits: Optional[OracleLimits] = None
) -> list[PerfectMatching]:
    """All perfect matchings of `g`, in lexicographic order of their edges."""
    limits = limits or OracleLimits()
    _check(g.n, limits.max_n_enumeration, "matching enumeration")
    if g.n % 2 == 1:
        return []

    neighbours: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        neighbours[u].append(v)
        neighbours[v].append(u)
    for adjacent in neighbours:
        adjacent.sort()

    matchings: list[PerfectMatching] = []
    mate: list[Optional[int]] = [None] * g.n

    def extend(chosen: list[tuple[int, int]]) -> None:
        free = next((v for v in range(g.n) if mate[v] is None), None)
        if free is None:
            matchings.append(PerfectMatching.of(chosen))
            return
        for other in neighbours[free]:
            if mate[other] is None:
                mate[free], mate[other] = other, free
                chosen.append((free, other))
                extend(chosen)
                chosen.pop()
                mate[free] = mate[other] = None

    extend([])
    return matchings


def _odd_sides(n: int, min_size: int) -> Iterator[frozenset[int]]:
    # Every cut is listed once: by its side without vertex 0, plus the
    # singleton {0}.
    others = range(1, n)
    for size in range(1, n, 2):
        for side in itertools.combinations(others, size):
            if min(size, n - size) >= min_size:
                yield frozenset(side)
    if min_size <= 1:
        yield frozenset([0])


def brute_min_odd_cut(
    x: FracMatching, min_size: int = 1, *, limits: Optional[OracleLimits] = None
) -> OddCutResult:
    """Minimum over all odd sets whose both sides have `min_size` vertices or more.

    Ties follow the order of `min_odd_cut`.
    """
    limits = limits or OracleLimits()
    _check(x.n, limits.max_n_subsets, "odd cut enumeration")
    if min_size not in (1, 3):
        raise InputError(f"min_size must be 1 or 3, got {min_size}.")
    if x.n % 2 == 1 or x.n < 2:
        raise InputError(f"odd cuts need an even vertex count >= 2, got {x.n}.")

    g = CapacitatedGraph.from_frac_matching(x)
    candidates = [(side, g.cut_value(side)) for side in _odd_sides(x.n, min_size)]
    if not candidates:
        raise InputError(f"no odd set with both sides of size >= {min_size}.")

    side, capacity = min(candidates, key=lambda cand: cut_order_key(*cand))
    return OddCutResult(OddSet.of(side), capacity)


def brute_tight_odd_cuts(
    x: FracMatching, *, limits: Optional[OracleLimits] = None
) -> list[OddSet]:
    """Every odd set with both sides of 3 or more vertices and cut capacity
    exactly `x.alpha`, each cut listed by its side without vertex 0."""
    limits = limits or OracleLimits()
    _check(x.n, limits.max_n_subsets, "odd cut enumeration")

    g = CapacitatedGraph.from_frac_matching(x)
    return sorted(
        (
            OddSet.of(side)
            for side in _odd_sides(x.n, 3)
            if g.cut_value(side) == x.alpha
        ),
        key=lambda odd_set: (len(odd_set.members), odd_set.members),
    )


def brute_gamma(
    alpha: Fraction,
    y: FracMatching,
    matching: PerfectMatching,
    *,
    limits: Optional[OracleLimits] = None,
) -> Optional[Fraction]:
    """Minimum of `(y(delta(S)) - alpha) / (k - 1)` over odd sets `S` crossed
    `k > 1` times by `matching`; `None` if there is no such set."""
    limits = limits or OracleLimits()
    _check(y.n, limits.max_n_subsets, "odd cut enumeration")

    g = CapacitatedGraph.from_frac_matching(y)
    best: Optional[Fraction] = None
    for side in _odd_sides(y.n, 1):
        k = crossings(OddSet.of(side), matching)
        if k < 2:
            continue
        gamma = (g.cut_value(side) - alpha) / (k - 1)
        if best is None or gamma < best:
            best = gamma
    return best


def brute_all_pairs_min_cut(
    g: CapacitatedGraph, *, limits: Optional[OracleLimits] = None
) -> list[list[Optional[Fraction]]]:
    """Exact s-t minimum cut for every pair; the diagonal is `None`."""
    limits = limits or OracleLimits()
    _check(g.n, limits.max_n_subsets, "cut enumeration")

    values: list[list[Optional[Fraction]]] = [[None] * g.n for _ in range(g.n)]
    for mask in range(1, 2 ** (g.n - 1)):
        # Sides without vertex 0, shifted by one.
        side = frozenset(v + 1 for v in range(g.n - 1) if mask >> v & 1)
        value = g.cut_value(side)
        for s in side:
            for t in range(g.n):
                if t in side:
                    continue
                current = values[s][t]
                if current is None or value < current:
                    values[s][t] = values[t][s] = value
    return values
