"""Prints the minimum odd cut of an instance and its exact capacity.

With `--min-size 3` singletons and their complements are excluded; this uses
the brute-force oracle and is limited to small instances.
"""
from __future__ import annotations
import argparse
from typing import Optional, Sequence

from matching_decomposition.cuts.odd_cuts import min_odd_cut
from matching_decomposition.oracle.enumeration import brute_min_odd_cut
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
    parser.add_argument(
        "--min-size",
        type=int,
        choices=[1, 3],
        default=1,
        help="Smallest size allowed on either side of the cut.",
    )

    return parser.parse_args(argv)


def print_min_odd_cut(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    if args.min_size == 1:
        result = min_odd_cut(instance.x)
    else:
        result = brute_min_odd_cut(instance.x, args.min_size)

    print(f"set: {instance.labels.format_set(result.odd_set.members)}")
    print(f"capacity: {result.capacity}")
    return ExitCode.OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    return run_command(print_min_odd_cut, parse_args(argv))


if __name__ == "__main__":
    raise SystemExit(main())
