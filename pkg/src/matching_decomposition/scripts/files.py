"""Instance and decomposition files: loading, canonical forms and output."""
from __future__ import annotations
from dataclasses import asdict, dataclass
from fractions import Fraction
import hashlib
from importlib import metadata
from typing import TYPE_CHECKING, Iterable, Optional, Union

import yaml

from matching_decomposition.core.errors import InputError
from matching_decomposition.core.fractional import FracMatching
from matching_decomposition.core.graph import Graph, canonical_edge
from matching_decomposition.core.matchings import Decomposition, PerfectMatching
from matching_decomposition.scripts.file_specs import (
    DecompositionSpec,
    InstanceSpec,
    PhaseSpec,
    ProvenanceSpec,
    TermSpec,
)
from matching_decomposition.scripts.utils import load_spec, load_yaml, parse_rational

if TYPE_CHECKING:
    from matching_decomposition.decomposers.trace import DecompositionTrace
    from matching_decomposition.scripts.utils import YamlDocument

Token = Union[int, str]


def tool_version() -> str:
    try:
        return metadata.version("matching-decomposition")
    except metadata.PackageNotFoundError:
        return "unknown"


@dataclass(frozen=True)
class VertexLabels:
    """Declared vertex names, or plain indices when there are none."""

    names: Optional[tuple[str, ...]] = None

    def label(self, vertex: int) -> Token:
        return vertex if self.names is None else self.names[vertex]

    def format_set(self, members: Iterable[int]) -> str:
        return "{" + ", ".join(str(self.label(v)) for v in members) + "}"

    def format_matching(self, matching: PerfectMatching) -> str:
        return " ".join(f"({self.label(u)}, {self.label(v)})" for u, v in matching)

    def names_list(self) -> Optional[list[str]]:
        return None if self.names is None else list(self.names)


@dataclass(frozen=True)
class Instance:
    x: FracMatching
    labels: VertexLabels = VertexLabels()

    @property
    def n(self) -> int:
        return self.x.n

    def to_spec(self) -> InstanceSpec:
        """Canonical form: edges sorted, rationals reduced, names kept."""
        graph = self.x.graph
        order = sorted(range(graph.m), key=lambda i: graph.edges[i])
        return InstanceSpec(
            n=self.n,
            vertex_names=self.labels.names_list(),
            edges=[
                [
                    self.labels.label(graph.edges[i][0]),
                    self.labels.label(graph.edges[i][1]),
                    str(self.x.values[i]),
                ]
                for i in order
            ],
            alpha=str(self.x.alpha),
        )

    def digest(self) -> str:
        canonical = yaml.safe_dump(asdict(self.to_spec()), sort_keys=True)
        return hashlib.sha256(canonical.encode("utf8")).hexdigest()


@dataclass(frozen=True)
class LoadedDecomposition:
    decomposition: Decomposition
    labels: VertexLabels


class _VertexResolver:
    def __init__(
        self, document: YamlDocument, n: Optional[int], names: Optional[list[str]]
    ) -> None:
        self._document = document
        self._n = n
        self._index = (
            None if names is None else {name: i for i, name in enumerate(names)}
        )

    def __call__(self, token: Token, *keys: Token) -> int:
        if isinstance(token, bool):
            raise self._document.error(f"'{token}' is not a vertex", *keys)
        if isinstance(token, int):
            if token < 0 or (self._n is not None and token >= self._n):
                raise self._document.error(f"vertex {token} is out of range", *keys)
            return token
        if self._index is None or token not in self._index:
            raise self._document.error(f"unknown vertex name '{token}'", *keys)
        return self._index[token]


def _rational(document: YamlDocument, token: Token, *keys: Token) -> Fraction:
    try:
        return parse_rational(token)
    except InputError as exc:
        raise document.error(str(exc), *keys) from exc


def _check_names(
    document: YamlDocument, names: Optional[list[str]], n: Optional[int]
) -> None:
    if names is None:
        return
    if n is not None and len(names) != n:
        raise document.error(
            f"{len(names)} vertex names for {n} vertices", "vertex_names"
        )
    if len(set(names)) != len(names):
        raise document.error("vertex names must be distinct", "vertex_names")


def load_instance(path: str) -> Instance:
    document = load_yaml(path)
    spec: InstanceSpec = load_spec(document, InstanceSpec)

    if spec.n < 0:
        raise document.error("vertex count must be nonnegative", "n")
    _check_names(document, spec.vertex_names, spec.n)

    resolve = _VertexResolver(document, spec.n, spec.vertex_names)
    pairs: list[tuple[int, int]] = []
    values: list[Fraction] = []
    for i, entry in enumerate(spec.edges):
        if len(entry) != 3:
            raise document.error("edges are [u, v, value] triples", "edges", i)
        u = resolve(entry[0], "edges", i, 0)
        v = resolve(entry[1], "edges", i, 1)
        if u == v:
            raise document.error("self-loops are not allowed", "edges", i)
        if (edge := canonical_edge(u, v)) in pairs:
            raise document.error("duplicate edge", "edges", i)
        pairs.append(edge)
        values.append(_rational(document, entry[2], "edges", i, 2))

    alpha = _rational(document, spec.alpha, "alpha")
    try:
        x = FracMatching(Graph(spec.n, tuple(pairs)), tuple(values), alpha)
    except InputError as exc:
        raise document.error(str(exc)) from exc

    names = spec.vertex_names
    return Instance(x, VertexLabels(None if names is None else tuple(names)))


def load_decomposition(
    path: str, instance: Optional[Instance] = None
) -> LoadedDecomposition:
    """Reads a decomposition file.

    Vertices resolve against `instance` when given, otherwise against the
    names stored in the file itself.
    """
    document = load_yaml(path)
    spec: DecompositionSpec = load_spec(document, DecompositionSpec)

    if instance is not None:
        labels = instance.labels
        n: Optional[int] = instance.n
    else:
        _check_names(document, spec.vertex_names, None)
        labels = VertexLabels(
            None if spec.vertex_names is None else tuple(spec.vertex_names)
        )
        n = None if labels.names is None else len(labels.names)
    resolve = _VertexResolver(document, n, labels.names_list())

    decomposition = Decomposition()
    for i, term in enumerate(spec.terms):
        pairs = []
        for j, pair in enumerate(term.matching):
            if len(pair) != 2:
                raise document.error(
                    "matching edges are [u, v] pairs", "terms", i, "matching", j
                )
            u = resolve(pair[0], "terms", i, "matching", j, 0)
            v = resolve(pair[1], "terms", i, "matching", j, 1)
            pairs.append((u, v))
        coeff = _rational(document, term.coeff, "terms", i, "coeff")
        decomposition.append(coeff, PerfectMatching.of(pairs))
    return LoadedDecomposition(decomposition, labels)


def decomposition_spec(
    instance: Instance,
    terms: Decomposition,
    trace: Optional[DecompositionTrace] = None,
    *,
    include_phases: bool = False,
) -> DecompositionSpec:
    labels = instance.labels
    provenance = None
    if trace is not None:
        phases = None
        if include_phases:
            phases = [
                PhaseSpec(
                    phase=record.phase_index,
                    type=record.phase_type.value,
                    coeff=str(record.coeff),
                    alpha_after=str(record.alpha_after),
                    new_tight_cut=(
                        None
                        if record.new_tight_cut is None
                        else [labels.label(v) for v in record.new_tight_cut.members]
                    ),
                )
                for record in trace.phases
            ]
        provenance = ProvenanceSpec(
            tool_version=tool_version(),
            input_hash=instance.digest(),
            phase_summary=trace.summary(),
            phases=phases,
        )

    return DecompositionSpec(
        vertex_names=labels.names_list(),
        terms=[
            TermSpec(
                coeff=str(term.coeff),
                matching=[[labels.label(u), labels.label(v)] for u, v in term.matching],
            )
            for term in terms
        ],
        provenance=provenance,
    )
