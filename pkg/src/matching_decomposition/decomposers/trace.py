from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

from matching_decomposition.core.matchings import Decomposition
from matching_decomposition.cuts.flow import CutStats

if TYPE_CHECKING:
    from matching_decomposition.core.fractional import FracMatching, OddSet
    from matching_decomposition.core.graph import Edge
    from matching_decomposition.core.matchings import PerfectMatching


class PhaseType(Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"


@dataclass(frozen=True)
class PhaseRecord:
    """One iteration of the main loop.

    Type 1 phases emit `beta * M` and drop at least one support edge. Type 2
    phases emit `gamma * M` and make `new_tight_cut` tight, growing the laminar
    family; `violated_cut` is the odd cut that was violated at `beta`.
    """

    phase_index: int
    phase_type: PhaseType
    matching: PerfectMatching
    coeff: Fraction
    alpha_before: Fraction
    alpha_after: Fraction
    beta: Fraction
    y_before: FracMatching
    matching_weight: int
    laminar_size: int
    removed_edges: tuple[Edge, ...] = ()
    violated_cut: Optional[OddSet] = None
    new_tight_cut: Optional[OddSet] = None


@dataclass
class DecompositionStats(CutStats):
    gamma_iterations: int = 0
    initial_denominator: int = 1
    largest_denominator: int = 1

    def record_denominator(self, denominator: int) -> None:
        self.largest_denominator = max(self.largest_denominator, denominator)


@dataclass
class DecompositionTrace:
    terms: Decomposition = field(default_factory=Decomposition)
    phases: list[PhaseRecord] = field(default_factory=list)
    stats: DecompositionStats = field(default_factory=DecompositionStats)

    def count(self, phase_type: PhaseType) -> int:
        return sum(1 for phase in self.phases if phase.phase_type == phase_type)

    def summary(self) -> dict[str, int]:
        return {
            "phases": len(self.phases),
            "type1_phases": self.count(PhaseType.TYPE1),
            "type2_phases": self.count(PhaseType.TYPE2),
            "max_flow_calls": self.stats.max_flow_calls,
            "padberg_rao_calls": self.stats.padberg_rao_calls,
            "gamma_iterations": self.stats.gamma_iterations,
            "largest_denominator": self.stats.largest_denominator,
        }


def denominator_ceiling(d: int, m: int, n: int) -> int:
    """`d^m * n^(n/2)` for even `n`, the bound on every denominator met while
    decomposing."""
    return d**m * n ** (n // 2)
