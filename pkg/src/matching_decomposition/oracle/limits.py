# No `from __future__ import annotations` because of dacite
from dataclasses import dataclass

from matching_decomposition.core.specs import BaseValuesSpec


@dataclass(kw_only=True)
class OracleLimits(BaseValuesSpec):
    """Largest vertex counts the brute-force oracles accept."""

    max_n_enumeration: int = 14
    max_n_subsets: int = 12
