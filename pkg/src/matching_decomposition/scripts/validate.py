"""Checks that an instance file holds an alpha-fractional perfect matching.

Prints `Ok` or the violated constraint with its exact value.
"""
from __future__ import annotations
import argparse
from typing import Optional, Sequence

from matching_decomposition.cuts.validation import validate_fractional_pm
from matching_decomposition.scripts.common import (
    ArgumentParser,
    ExitCode,
    run_command,
    setup_logging,
)
from matching_decomposition.scripts.files import load_instance


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = ArgumentParser(description=__doc__)

    parser.add_argument("instance", type=str, help="Path to the instance file.")

    return parser.parse_args(argv)


def validate(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    violation = validate_fractional_pm(instance.x)
    if violation is None:
        print("Ok")
        return ExitCode.OK

    print(f"Violation: {violation.describe(instance.labels.names_list())}")
    return ExitCode.INFEASIBLE


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    return run_command(validate, parse_args(argv))


if __name__ == "__main__":
    raise SystemExit(main())
