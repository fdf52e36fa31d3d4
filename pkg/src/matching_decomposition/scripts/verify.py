"""Verifies a decomposition file against its instance with exact arithmetic."""
from __future__ import annotations
import argparse
from typing import Optional, Sequence

from matching_decomposition.decomposers.verification import verify_decomposition
from matching_decomposition.scripts.common import (
    ArgumentParser,
    ExitCode,
    run_command,
    setup_logging,
)
from matching_decomposition.scripts.files import load_decomposition, load_instance


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = ArgumentParser(description=__doc__)

    parser.add_argument("instance", type=str, help="Path to the instance file.")
    parser.add_argument(
        "decomposition", type=str, help="Path to the decomposition file."
    )

    return parser.parse_args(argv)


def verify(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    decomposition = load_decomposition(args.decomposition, instance).decomposition

    failure = verify_decomposition(instance.x, decomposition)
    if failure is None:
        print("Ok")
        return ExitCode.OK

    print(f"Failed: {failure.describe()}")
    return ExitCode.INFEASIBLE


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    return run_command(verify, parse_args(argv))


if __name__ == "__main__":
    raise SystemExit(main())
