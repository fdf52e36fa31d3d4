"""Decomposes a fractional perfect matching into perfect matchings.

Writes the convex combination as a decomposition file. With `--trace` every
phase of the algorithm is recorded in the file's provenance.
"""
from __future__ import annotations
import argparse
import logging
from typing import TYPE_CHECKING, Optional, Sequence

from matching_decomposition.core.errors import InvariantError
from matching_decomposition.decomposers.main_algorithm import decompose
from matching_decomposition.decomposers.verification import verify_decomposition
from matching_decomposition.oracle.limits import OracleLimits
from matching_decomposition.oracle.linear import brute_decompose
from matching_decomposition.scripts.common import (
    ArgumentParser,
    ExitCode,
    run_command,
    setup_logging,
)
from matching_decomposition.scripts.files import decomposition_spec, load_instance
from matching_decomposition.scripts.utils import save_yaml

if TYPE_CHECKING:
    from matching_decomposition.scripts.files import Instance

logger = logging.getLogger(__name__)


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = ArgumentParser(description=__doc__)

    parser.add_argument("instance", type=str, help="Path to the instance file.")
    parser.add_argument(
        "-o",
        "--output",
        type=str,
        default=None,
        help="Path of the decomposition file. Printed to stdout if not given.",
    )
    parser.add_argument(
        "--trace",
        action="store_true",
        help="Record every phase in the decomposition file.",
    )
    parser.add_argument(
        "--oracle-check",
        action="store_true",
        help="Cross-check feasibility with the brute-force oracle on small inputs.",
    )

    return parser.parse_args(argv)


def oracle_check(instance: Instance) -> None:
    limits = OracleLimits()
    if instance.n > limits.max_n_enumeration:
        logger.warning(
            "Skipping oracle check, %d vertices exceed the limit of %d.",
            instance.n,
            limits.max_n_enumeration,
        )
        return

    if brute_decompose(instance.x, limits=limits) is None:
        raise InvariantError("the oracle finds no decomposition of a valid input.")
    logger.info("Oracle agrees the instance is decomposable.")


def decompose_instance(args: argparse.Namespace) -> ExitCode:
    instance = load_instance(args.instance)
    trace = decompose(instance.x)

    failure = verify_decomposition(instance.x, trace.terms)
    if failure is not None:
        raise InvariantError(f"decomposition does not verify: {failure.describe()}")
    if args.oracle_check:
        oracle_check(instance)

    if args.trace:
        for record in trace.phases:
            cut = record.new_tight_cut
            logger.info(
                "Phase %d: %s, coefficient %s, new tight cut %s.",
                record.phase_index,
                record.phase_type.value,
                record.coeff,
                "-" if cut is None else instance.labels.format_set(cut.members),
            )

    spec = decomposition_spec(
        instance, trace.terms, trace, include_phases=args.trace
    )
    save_yaml(spec, args.output)
    return ExitCode.OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    return run_command(decompose_instance, parse_args(argv))


if __name__ == "__main__":
    raise SystemExit(main())
