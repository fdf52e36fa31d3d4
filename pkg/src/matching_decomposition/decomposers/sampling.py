from __future__ import annotations
import bisect
from functools import reduce
import itertools
import math
import random
from typing import TYPE_CHECKING

from matching_decomposition.core.errors import InputError

if TYPE_CHECKING:
    from matching_decomposition.core.matchings import Decomposition, PerfectMatching


class MatchingSampler:
    """Draws terms of a decomposition with probability proportional to their
    coefficients.

    Coefficients are brought to their common denominator, so each draw is one
    uniform integer below the scaled total and the thresholds stay exact.
    """

    def __init__(self, decomposition: Decomposition) -> None:
        if len(decomposition) == 0:
            raise InputError("cannot sample from an empty decomposition.")
        if any(term.coeff <= 0 for term in decomposition):
            raise InputError("sampling needs positive coefficients.")

        self._matchings = [term.matching for term in decomposition]
        scale = reduce(
            math.lcm, (term.coeff.denominator for term in decomposition), 1
        )
        self._thresholds = list(
            itertools.accumulate(int(term.coeff * scale) for term in decomposition)
        )

    def draw(self, rng: random.Random) -> PerfectMatching:
        ticket = rng.randrange(self._thresholds[-1])
        return self._matchings[bisect.bisect_right(self._thresholds, ticket)]


def sample_matching(decomposition: Decomposition, seed: int) -> PerfectMatching:
    """Single draw with a generator seeded by `seed`; same seed, same matching."""
    return MatchingSampler(decomposition).draw(random.Random(seed))
