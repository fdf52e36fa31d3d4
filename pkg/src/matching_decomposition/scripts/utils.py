from __future__ import annotations
from dataclasses import asdict
from fractions import Fraction
import logging
import sys
from typing import TYPE_CHECKING, Any, Optional, Union

import yaml

from matching_decomposition.core.errors import InputError

if TYPE_CHECKING:
    from matching_decomposition.core.specs import BaseValuesSpec

logger = logging.getLogger(__name__)

PathKey = Union[str, int]


class YamlDocument:
    """Parsed YAML file that remembers where each value came from."""

    def __init__(self, path: str, data: Any, root: Optional[yaml.Node]) -> None:
        self.path = path
        self.data = data
        self._root = root

    def where(self, *keys: PathKey) -> str:
        """`path:line:column` of the deepest node found along `keys`."""
        node = self._root
        for key in keys:
            child = None
            if isinstance(node, yaml.MappingNode):
                child = next(
                    (value for name, value in node.value if name.value == key), None
                )
            elif isinstance(node, yaml.SequenceNode) and isinstance(key, int):
                child = node.value[key] if 0 <= key < len(node.value) else None
            if child is None:
                break
            node = child

        if node is None:
            return self.path
        mark = node.start_mark
        return f"{self.path}:{mark.line + 1}:{mark.column + 1}"

    def error(self, message: str, *keys: PathKey) -> InputError:
        return InputError(f"{self.where(*keys)}: {message}")


def load_yaml(yaml_path: str) -> YamlDocument:
    try:
        with open(yaml_path, mode="r", encoding="utf8") as file:
            text = file.read()
    except OSError as exc:
        raise InputError(f"cannot read '{yaml_path}': {exc.strerror}.") from exc

    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        location = (
            f"{yaml_path}:{mark.line + 1}:{mark.column + 1}"
            if mark is not None
            else yaml_path
        )
        raise InputError(f"{location}: {exc.problem}") from exc
    except yaml.YAMLError as exc:
        raise InputError(f"{yaml_path}: {exc}") from exc

    return YamlDocument(yaml_path, data, root)


def load_spec(document: YamlDocument, spec_type: type[BaseValuesSpec]) -> Any:
    if not isinstance(document.data, dict):
        raise document.error("expected a mapping at the top level")
    try:
        return spec_type.from_dict(document.data)
    except TypeError as exc:
        cause = exc.__cause__ if exc.__cause__ is not None else exc
        raise document.error(str(cause)) from exc


def parse_rational(token: Union[int, str]) -> Fraction:
    """Exact rational from an int or a `"p"`/`"p/q"` string with `q > 0`."""
    if isinstance(token, bool):
        raise InputError(f"'{token}' is not a rational number.")
    if isinstance(token, int):
        return Fraction(token)

    text = token.strip()
    numerator, slash, denominator = text.partition("/")
    try:
        p = int(numerator)
        q = int(denominator) if slash else 1
    except ValueError as exc:
        raise InputError(f"'{token}' is not a rational number.") from exc
    if q <= 0:
        raise InputError(f"'{token}' needs a positive denominator.")
    return Fraction(p, q)


def save_yaml(data: Union[BaseValuesSpec, dict[str, Any]], path: Optional[str]) -> None:
    """Writes `data` to `path`, or to stdout when `path` is `None`."""
    if not isinstance(data, dict):
        data = asdict(data)
    if path is None:
        yaml.safe_dump(data, sys.stdout, sort_keys=False)
        return

    logger.info("Saving results to %s.", path)
    with open(path, mode="w", encoding="utf8") as file:
        yaml.safe_dump(data, file, sort_keys=False)
