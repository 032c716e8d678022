"""Shared randomized-input helpers.

All randomness is seeded per test, so failures reproduce exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from omstrata import LabeledArrangement, PlanePoint, Vector3


def rand_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_positive_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(1, span), rng.randint(1, span))


def rand_vector3(rng: random.Random, span: int = 9) -> Vector3:
    return Vector3(
        rand_fraction(rng, span), rand_fraction(rng, span), rand_fraction(rng, span)
    )


def rand_point(rng: random.Random, span: int = 9) -> PlanePoint:
    return PlanePoint(rand_fraction(rng, span), rand_fraction(rng, span))


def rand_spanning_arrangement(
    rng: random.Random, size: int, span: int = 9
) -> LabeledArrangement:
    """Random integer-labeled spanning arrangement with `size` elements."""
    while True:
        arr = LabeledArrangement(
            (i + 1, rand_vector3(rng, span)) for i in range(size)
        )
        if arr.is_spanning():
            return arr


def sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def sampled_sign_patterns(arrangement: LabeledArrangement, rng: random.Random, trials: int):
    """Brute-force oracle: sign patterns of random rational functionals
    against the arrangement in canonical label order."""
    vectors = [v for _, v in arrangement.sorted_by_label().elements]
    patterns = set()
    for _ in range(trials):
        functional = rand_vector3(rng)
        patterns.add(tuple(sign_of(v.dot(functional)) for v in vectors))
    return patterns
