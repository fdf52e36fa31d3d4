from __future__ import annotations
import argparse
from enum import IntEnum
import logging
import sys
from typing import Callable, NoReturn

from matching_decomposition.core.errors import (
    InfeasibleInputError,
    InputError,
    InvariantError,
)

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 1
    INFEASIBLE = 2
    INVARIANT_FAILURE = 3


Command = Callable[[argparse.Namespace], ExitCode]


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with the input-error exit code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.INPUT_ERROR, f"{self.prog}: error: {message}\n")


def setup_logging() -> None:
    logging.basicConfig(
        format="%(asctime)s : %(levelname)s : %(message)s",
        level=logging.INFO,
    )


def run_command(command: Command, args: argparse.Namespace) -> int:
    """Runs `command`, turning library exceptions into exit codes."""
    try:
        return int(command(args))
    except InputError as exc:
        logger.error("Invalid input: %s", exc)
        return ExitCode.INPUT_ERROR
    except InfeasibleInputError as exc:
        logger.error("%s", exc)
        return ExitCode.INFEASIBLE
    except InvariantError as exc:
        logger.error("Internal invariant violated: %s", exc)
        return ExitCode.INVARIANT_FAILURE
