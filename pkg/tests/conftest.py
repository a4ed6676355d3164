"""Shared helpers: seeded random polynomials, fields and candidates."""

import random
from fractions import Fraction

import pytest

from todasym.fields import VectorField
from todasym.ratpoly import Polynomial, num_vars


def random_polynomial(rng, n, max_terms=4, max_degree=3, with_t=False):
    """Small random polynomial with coefficients in [-5, 5]."""
    width = num_vars(n)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * width
        for _ in range(rng.randint(0, max_degree)):
            top = width if with_t else width - 1
            mono[rng.randrange(top)] += 1
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        mono = tuple(mono)
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return Polynomial(n, terms)


def random_field(rng, n, **kw):
    comps = [random_polynomial(rng, n, **kw) for _ in range(2 * n - 1)]
    return VectorField.from_components(n, comps)


@pytest.fixture
def rng():
    return random.Random(1729)
