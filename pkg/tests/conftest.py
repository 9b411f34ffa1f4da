import random
from fractions import Fraction

import pytest


def rand_fraction(rng: random.Random, span: int = 4, dens=(1, 1, 2, 3)) -> Fraction:
    """Small random rational; denominator 1 twice as likely."""
    return Fraction(rng.randint(-span, span), rng.choice(dens))


def rand_series_coeffs(rng: random.Random, order: int, span: int = 4):
    return [rand_fraction(rng, span) for _ in range(order)]


@pytest.fixture
def rng():
    return random.Random(20240815)
