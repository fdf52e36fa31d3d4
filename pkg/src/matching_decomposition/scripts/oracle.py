"""Brute-force answers for small instances, for checking results by hand.

Subcommands: `matchings` lists every perfect matching of the support,
`min-odd-cut` enumerates odd sets, `decompose` solves the exact linear system.
"""
from __future__ import annotations
import argparse
from typing import Optional, Sequence

from matching_decomposition.core.fractional import support
from matching_decomposition.oracle.enumeration import (
    brute_min_odd_cut,
    enumerate_perfect_matchings,
)
from matching_decomposition.oracle.linear import brute_decompose
from matching_decomposition.scripts.common import (
    ArgumentParser,
    ExitCode,
    run_command,
    setup_logging,
)
from matching_decomposition.scripts.files import decomposition_spec, load_instance
from matching_decomposition.scripts.utils import save_yaml


def print_matchings(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    matchings = enumerate_perfect_matchings(support(instance.x))
    for matching in matchings:
        print(instance.labels.format_matching(matching))
    print(f"count: {len(matchings)}")
    return ExitCode.OK


def print_min_odd_cut(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    result = brute_min_odd_cut(instance.x, args.min_size)
    print(f"set: {instance.labels.format_set(result.odd_set.members)}")
    print(f"capacity: {result.capacity}")
    return ExitCode.OK


def solve_decomposition(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    decomposition = brute_decompose(instance.x)
    if decomposition is None:
        print("infeasible: no convex combination of perfect matchings exists")
        return ExitCode.INFEASIBLE

    save_yaml(decomposition_spec(instance, decomposition), args.output)
    return ExitCode.OK


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = ArgumentParser(description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    matchings = subparsers.add_parser("matchings", help="List perfect matchings.")
    matchings.add_argument("instance", type=str, help="Path to the instance file.")
    matchings.set_defaults(command_fn=print_matchings)

    cut = subparsers.add_parser("min-odd-cut", help="Enumerate odd cuts.")
    cut.add_argument("instance", type=str, help="Path to the instance file.")
    cut.add_argument(
        "--min-size",
        type=int,
        choices=[1, 3],
        default=1,
        help="Smallest size allowed on either side of the cut.",
    )
    cut.set_defaults(command_fn=print_min_odd_cut)

    solve = subparsers.add_parser("decompose", help="Solve the linear system.")
    solve.add_argument("instance", type=str, help="Path to the instance file.")
    solve.add_argument(
        "-o",
        "--output",
        type=str,
        default=None,
        help="Path of the decomposition file. Printed to stdout if not given.",
    )
    solve.set_defaults(command_fn=solve_decomposition)

    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    args = parse_args(argv)
    return run_command(args.command_fn, args)


if __name__ == "__main__":
    raise SystemExit(main())
