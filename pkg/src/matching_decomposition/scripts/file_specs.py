# No `from __future__ import annotations` ruins loading of dataclasses from
# dict with dacite
from dataclasses import dataclass, field
from typing import Optional, Union

from matching_decomposition.core.specs import BaseValuesSpec

# Vertices are indices or declared names, rationals are "p/q" strings or ints.
VertexToken = Union[int, str]
RationalToken = Union[int, str]


@dataclass(kw_only=True)
class InstanceSpec(BaseValuesSpec):
    n: int
    vertex_names: Optional[list[str]] = None
    edges: list[list[VertexToken]]
    alpha: RationalToken = "1"


@dataclass(kw_only=True)
class TermSpec(BaseValuesSpec):
    coeff: RationalToken
    matching: list[list[VertexToken]]


@dataclass(kw_only=True)
class PhaseSpec(BaseValuesSpec):
    phase: int
    type: str
    coeff: str
    alpha_after: str
    new_tight_cut: Optional[list[VertexToken]] = None


@dataclass(kw_only=True)
class ProvenanceSpec(BaseValuesSpec):
    tool_version: str
    input_hash: str
    phase_summary: dict[str, int] = field(default_factory=dict)
    phases: Optional[list[PhaseSpec]] = None


@dataclass(kw_only=True)
class DecompositionSpec(BaseValuesSpec):
    vertex_names: Optional[list[str]] = None
    terms: list[TermSpec]
    provenance: Optional[ProvenanceSpec] = None
