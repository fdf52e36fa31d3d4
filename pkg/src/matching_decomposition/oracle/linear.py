"""Exact linear feasibility: is a vector a convex combination of matchings?

Solves `sum_i a_i * M_i = x`, `sum_i a_i = alpha`, `a >= 0` over all perfect
matchings `M_i` of the support with a first-phase simplex on Fractions. Bland's
rule keeps the pivoting finite.
"""
from __future__ import annotations
from fractions import Fraction
import logging
from typing import TYPE_CHECKING, Optional

from matching_decomposition.core.fractional import support
from matching_decomposition.core.matchings import Decomposition
from matching_decomposition.oracle.enumeration import enumerate_perfect_matchings

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching
    from matching_decomposition.oracle.limits import OracleLimits

logger = logging.getLogger(__name__)


class FirstPhaseSimplex:
    """Feasibility of `A a = b, a >= 0` with `b >= 0`.

    Starts from the artificial basis and minimizes the sum of artificial
    variables. Artificial columns are not stored; once an artificial variable
    leaves the basis it never returns.
    """

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction]) -> None:
        assert all(value >= 0 for value in rhs), "right-hand side must be nonnegative"
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.A = [list(row) for row in rows]
        self.b = list(rhs)
        # Labels 0..n-1 are structural variables, n.. the artificial ones.
        self.basis = list(range(self.n, self.n + self.m))
        self.c = [sum((row[j] for row in self.A), Fraction(0)) for j in range(self.n)]
        self.infeasibility = sum(self.b, Fraction(0))

    def pivot(self, i: int, j: int) -> None:
        pivot = self.A[i][j]
        self.A[i] = [value / pivot for value in self.A[i]]
        self.b[i] /= pivot
        for k in range(self.m):
            if k != i and (factor := self.A[k][j]) != 0:
                self.A[k] = [a - factor * p for a, p in zip(self.A[k], self.A[i])]
                self.b[k] -= factor * self.b[i]
        factor = self.c[j]
        self.c = [c - factor * p for c, p in zip(self.c, self.A[i])]
        self.infeasibility -= factor * self.b[i]
        self.basis[i] = j

    def step(self) -> bool:
        """One Bland pivot; `False` once optimal."""
        entering = next((j for j in range(self.n) if self.c[j] > 0), None)
        if entering is None:
            return False
        _, _, leaving = min(
            (self.b[i] / self.A[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.A[i][entering] > 0
        )
        self.pivot(leaving, entering)
        return True

    def solve(self) -> Optional[list[Fraction]]:
        """A feasible `a`, or `None` if the system has no solution."""
        pivots = 0
        while self.step():
            pivots += 1
        logger.debug("First phase finished after %d pivots.", pivots)
        if self.infeasibility != 0:
            return None

        solution = [Fraction(0)] * self.n
        for i, variable in enumerate(self.basis):
            if variable < self.n:
                solution[variable] = self.b[i]
        return solution


def brute_decompose(
    x: FracMatching, *, limits: Optional[OracleLimits] = None
) -> Optional[Decomposition]:
    """Some decomposition of `x` into perfect matchings of its support, or
    `None` if `x` is not in the `alpha`-scaled perfect matching polytope."""
    graph = support(x)
    matchings = enumerate_perfect_matchings(graph, limits=limits)
    if any(value < 0 for value in x.values):
        return None

    rows = [
        [Fraction(int(edge in matching)) for matching in matchings]
        for edge in graph.edges
    ]
    rhs = [x.value(*edge) for edge in graph.edges]
    rows.append([Fraction(1)] * len(matchings))
    rhs.append(x.alpha)

    if not matchings:
        # Only the empty combination is left.
        return Decomposition() if all(value == 0 for value in rhs) else None

    solution = FirstPhaseSimplex(rows, rhs).solve()
    if solution is None:
        return None

    decomposition = Decomposition()
    for coeff, matching in zip(solution, matchings, strict=True):
        if coeff > 0:
            decomposition.append(coeff, matching)
    return decomposition
