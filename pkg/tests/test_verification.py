from fractions import Fraction

import pytest

from matching_decomposition.core.matchings import Decomposition, PerfectMatching
from matching_decomposition.decomposers.verification import (
    FailureReason,
    verify_decomposition,
    verify_min_weight_property,
)
from matching_decomposition.instances import (
    PRISM_RUNGS,
    matching_indicator,
    prism,
    prism_vector,
)

RUNGS = PerfectMatching.of(PRISM_RUNGS)
PRISM_MATCHINGS = [
    PerfectMatching.of([(0, 1), (2, 4), (3, 5)]),
    PerfectMatching.of([(2, 3), (0, 4), (1, 5)]),
    PerfectMatching.of([(4, 5), (0, 2), (1, 3)]),
]


def _decomposition(*terms: tuple[Fraction, PerfectMatching]) -> Decomposition:
    decomposition = Decomposition()
    for coeff, matching in terms:
        decomposition.append(coeff, matching)
    return decomposition


def test_valid_prism_decomposition():
    third = Fraction(1, 3)
    decomposition = _decomposition(*((third, m) for m in PRISM_MATCHINGS))

    assert verify_decomposition(prism_vector(), decomposition) is None


@pytest.mark.parametrize(
    "terms, reason, term_index",
    [
        (
            [(Fraction(0), RUNGS), (Fraction(1), RUNGS)],
            FailureReason.NON_POSITIVE_COEFFICIENT,
            0,
        ),
        (
            [(Fraction(1, 3), m) for m in PRISM_MATCHINGS[:2]],
            FailureReason.SUM_MISMATCH,
            None,
        ),
        (
            [
                (Fraction(1, 2), PRISM_MATCHINGS[0]),
                (Fraction(1, 2), PerfectMatching.of([(0, 1), (2, 3)])),
            ],
            FailureReason.NOT_PERFECT,
            1,
        ),
        (
            [(Fraction(1, 3), RUNGS), (Fraction(2, 3), PRISM_MATCHINGS[0])],
            FailureReason.VALUE_MISMATCH,
            None,
        ),
    ],
    ids=["coefficient", "sum", "not-perfect", "values"],
)
def test_failures(terms, reason, term_index):
    failure = verify_decomposition(prism_vector(), _decomposition(*terms))

    assert failure.reason == reason
    assert failure.term_index == term_index


def test_matching_outside_the_support():
    x = matching_indicator(prism(), RUNGS)

    failure = verify_decomposition(x, _decomposition((Fraction(1), PRISM_MATCHINGS[0])))

    assert failure.reason == FailureReason.OUTSIDE_SUPPORT
    assert failure.describe() == (
        "outside_support (term 0): edge (2, 4) is not in the support"
    )


def test_min_weight_property():
    weights = {edge: Fraction(int(edge in RUNGS)) for edge in prism().edges}
    decomposition = _decomposition(
        *((Fraction(1, 3), m) for m in PRISM_MATCHINGS)
    )

    assert verify_min_weight_property(decomposition, weights) is None

    decomposition.append(Fraction(1, 3), RUNGS)
    failure = verify_min_weight_property(decomposition, weights)
    assert failure.reason == FailureReason.WEIGHT_MISMATCH
    assert failure.term_index == 3
