"""Search for tight odd cuts by perturbing pairs of support edges.

A tight odd cut with at least three vertices on each side is never the unique
minimum odd cut: the singletons tie with it. Lowering two vertex-disjoint
support edges by a tiny epsilon pushes every cut crossing both below the
singletons, so the minimum odd cut of the perturbed vector lands on a tight
cut whenever one crosses that pair. Every candidate is re-checked exactly
against the unperturbed capacities.
"""
from __future__ import annotations
from fractions import Fraction
from functools import reduce
import itertools
import logging
import math
from typing import TYPE_CHECKING, Callable, Iterator, Optional

from matching_decomposition.core.errors import PreconditionError
from matching_decomposition.core.fractional import OddSet
from matching_decomposition.cuts.flow import CapacitatedGraph
from matching_decomposition.cuts.odd_cuts import padberg_rao
from matching_decomposition.cuts.validation import validate_fractional_pm

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.cuts.flow import CutStats

logger = logging.getLogger(__name__)

Admissible = Callable[[frozenset[int]], bool]


def perturbation_epsilon(g: CapacitatedGraph, alpha: Fraction) -> Fraction:
    """Half the capacity resolution of `g` divided by the node count."""
    resolution = reduce(math.lcm, (c.denominator for _, _, c in g.edges), 1)
    resolution = math.lcm(resolution, alpha.denominator)
    return Fraction(1, 2 * resolution * max(g.n, 1))


def _degenerate_candidates(g: CapacitatedGraph) -> Iterator[frozenset[int]]:
    # With a disconnected support, a tight cut can have all its cut edges at a
    # single node w, e.g. K - {w} or K + {w} for a component K. No pair of
    # disjoint edges crosses such a cut, so these are proposed directly.
    components = g.positive_components()
    if len(components) < 2:
        return
    for component in components:
        members = frozenset(component)
        if len(members) > 2:
            for w in component:
                yield members - {w}
        for w in range(g.n):
            if w not in members:
                yield members | {w}


def _perturbed_candidates(
    g: CapacitatedGraph, alpha: Fraction, stats: Optional[CutStats]
) -> Iterator[frozenset[int]]:
    epsilon = perturbation_epsilon(g, alpha)
    positive = [i for i, (_, _, c) in enumerate(g.edges) if c > 0]
    for i, j in itertools.combinations(positive, 2):
        a, b, capacity_e = g.edges[i]
        c, d, capacity_f = g.edges[j]
        if len({a, b, c, d}) < 4:
            continue
        # A cut of capacity alpha cannot contain two edges summing above alpha.
        if capacity_e + capacity_f > alpha:
            continue
        side, _ = padberg_rao(g.lowered({i: epsilon, j: epsilon}), stats=stats)
        yield side


def tight_order_key(side: frozenset[int]) -> tuple:
    return (len(side), sorted(side))


def search_tight_odd_cut(
    g: CapacitatedGraph,
    alpha: Fraction,
    *,
    admissible: Admissible,
    exhaustive: bool = True,
    stats: Optional[CutStats] = None,
) -> Optional[frozenset[int]]:
    """Finds an odd node set `S` of `g` accepted by `admissible` with
    `g.cut_value(S) == alpha`.

    Every node of `g` must stand for an odd number of original vertices and
    carry capacity exactly `alpha`, so that node-count parity is vertex-count
    parity. Both sides of each candidate cut are offered to `admissible`.

    With `exhaustive` the smallest set (then lexicographically smallest) among
    all candidates is returned, otherwise the first one found.
    """
    found: list[frozenset[int]] = []
    everything = frozenset(range(g.n))

    def consider(side: frozenset[int]) -> bool:
        hit = False
        for candidate in (side, everything - side):
            if len(candidate) % 2 == 0 or not admissible(candidate):
                continue
            if g.cut_value(candidate) == alpha:
                found.append(candidate)
                hit = True
        return hit

    candidates = itertools.chain(
        _degenerate_candidates(g), _perturbed_candidates(g, alpha, stats)
    )
    for side in candidates:
        if consider(side) and not exhaustive:
            break

    if not found:
        return None
    return min(found, key=tight_order_key)


def find_tight_odd_cut(
    x: FracMatching,
    *,
    exhaustive: bool = True,
    stats: Optional[CutStats] = None,
) -> Optional[OddSet]:
    """Tight odd `x.alpha`-cut `S` with `3 <= |S| <= n - 3`, or `None`."""
    violation = validate_fractional_pm(x, stats=stats)
    if violation is not None:
        raise PreconditionError(
            f"tight cuts are only defined for valid vectors: {violation.describe()}"
        )
    if x.n < 6:
        return None

    found = search_tight_odd_cut(
        CapacitatedGraph.from_frac_matching(x),
        x.alpha,
        admissible=lambda side: 3 <= len(side) <= x.n - 3,
        exhaustive=exhaustive,
        stats=stats,
    )
    if found is None:
        return None

    logger.debug("Found tight odd cut %s.", sorted(found))
    return OddSet.of(found)
