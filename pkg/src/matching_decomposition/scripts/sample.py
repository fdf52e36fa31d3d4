"""Draws perfect matchings from a decomposition file.

Each term is drawn with probability proportional to its coefficient. The same
seed always prints the same sequence.
"""
from __future__ import annotations
import argparse
import random
from typing import Optional, Sequence

from matching_decomposition.decomposers.sampling import MatchingSampler
from matching_decomposition.scripts.common import (
    ArgumentParser,
    ExitCode,
    run_command,
    setup_logging,
)
from matching_decomposition.scripts.files import load_decomposition


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = ArgumentParser(description=__doc__)

    parser.add_argument(
        "decomposition", type=str, help="Path to the decomposition file."
    )
    parser.add_argument("--seed", type=int, default=0, help="Generator seed.")
    parser.add_argument(
        "--count", type=positive_int, default=1, help="Number of matchings to draw."
    )

    return parser.parse_args(argv)


def sample(args: argparse.Namespace) -> ExitCode:
    loaded = load_decomposition(args.decomposition)
    sampler = MatchingSampler(loaded.decomposition)

    rng = random.Random(args.seed)
    for _ in range(args.count):
        print(loaded.labels.format_matching(sampler.draw(rng)))
    return ExitCode.OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    return run_command(sample, parse_args(argv))


if __name__ == "__main__":
    raise SystemExit(main())
