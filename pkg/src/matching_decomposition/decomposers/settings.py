# No `from __future__ import annotations` because of dacite
from dataclasses import dataclass

from matching_decomposition.core.specs import BaseValuesSpec

GAMMA_METHODS = ("iterative", "bisect")


@dataclass(kw_only=True)
class DecomposerSettings(BaseValuesSpec):
    """Knobs of the main decomposition loop.

    `gamma_iteration_factor` times the support size caps the iterations of the
    iterative gamma search. `cross_check_gamma` runs the other gamma method in
    every Type 2 phase and fails on disagreement.
    """

    gamma_method: str = "iterative"
    cross_check_gamma: bool = False
    gamma_iteration_factor: int = 10
    check_invariants: bool = True

    def __post_init__(self) -> None:
        if self.gamma_method not in GAMMA_METHODS:
            raise TypeError(
                f"Unknown gamma method '{self.gamma_method}', "
                f"expected one of {GAMMA_METHODS}."
            )
        if self.gamma_iteration_factor < 1:
            raise TypeError("gamma_iteration_factor must be positive.")
