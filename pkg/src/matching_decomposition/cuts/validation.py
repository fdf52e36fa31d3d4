"""Checks that a vector is an alpha-fractional perfect matching."""
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

from matching_decomposition.core.fractional import degree_sums
from matching_decomposition.cuts.odd_cuts import min_odd_cut

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching, OddSet
    from matching_decomposition.core.graph import Edge
    from matching_decomposition.cuts.flow import CutStats


class ViolationKind(Enum):
    ODD_VERTEX_COUNT = "odd_vertex_count"
    NEGATIVE_VALUE = "negative_value"
    DEGREE = "degree"
    ODD_CUT = "odd_cut"
    NO_PERFECT_MATCHING = "no_perfect_matching"


@dataclass(frozen=True)
class Violation:
    """Certificate that a vector is not an alpha-fractional perfect matching.

    `value` is the offending quantity: the edge value, the degree sum or the
    cut capacity, depending on `kind`.
    """

    kind: ViolationKind
    value: Fraction
    alpha: Fraction
    edge: Optional[Edge] = None
    vertex: Optional[int] = None
    odd_set: Optional[OddSet] = None

    def describe(self, names: Optional[list[str]] = None) -> str:
        def name(v: int) -> str:
            return names[v] if names is not None else str(v)

        match self.kind:
            case ViolationKind.ODD_VERTEX_COUNT:
                return "the vertex count is odd, no perfect matching exists"
            case ViolationKind.NEGATIVE_VALUE:
                assert self.edge is not None
                u, v = self.edge
                return f"edge ({name(u)}, {name(v)}) has negative value {self.value}"
            case ViolationKind.DEGREE:
                assert self.vertex is not None
                return (
                    f"vertex {name(self.vertex)} has degree sum {self.value}, "
                    f"expected {self.alpha}"
                )
            case ViolationKind.ODD_CUT:
                assert self.odd_set is not None
                members = ", ".join(name(v) for v in self.odd_set.members)
                return (
                    f"odd set {{{members}}} has cut capacity {self.value} "
                    f"< {self.alpha}"
                )
            case ViolationKind.NO_PERFECT_MATCHING:
                return (
                    "the support of a residual at scale "
                    f"{self.value} has no perfect matching"
                )
        raise AssertionError(f"unknown violation kind {self.kind}")


def validate_fractional_pm(
    x: FracMatching, *, stats: Optional[CutStats] = None
) -> Optional[Violation]:
    """Returns `None` if `x` is an `x.alpha`-fractional perfect matching.

    Checks in order: vertex count parity, nonnegativity (first edge by id),
    degree sums (first vertex) and the odd-cut constraints via the minimum odd
    cut. The first failed check is returned as a `Violation`.
    """
    alpha = x.alpha
    if x.n % 2 == 1:
        return Violation(ViolationKind.ODD_VERTEX_COUNT, Fraction(0), alpha)

    for edge, value in zip(x.graph.edges, x.values, strict=True):
        if value < 0:
            return Violation(ViolationKind.NEGATIVE_VALUE, value, alpha, edge=edge)

    for vertex, degree in enumerate(degree_sums(x)):
        if degree != alpha:
            return Violation(ViolationKind.DEGREE, degree, alpha, vertex=vertex)

    if x.n == 0:
        return None

    cut = min_odd_cut(x, stats=stats)
    if cut.capacity < alpha:
        return Violation(
            ViolationKind.ODD_CUT, cut.capacity, alpha, odd_set=cut.odd_set
        )
    return None

