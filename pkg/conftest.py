# -*- coding: utf-8 -*-
"""
Shared pytest fixtures. The repository root is put on the path so the tests
run against the working copy of pdmoments.
"""
import os
import sys
from fractions import Fraction

import numpy as np
import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, ROOT)

from pdmoments.corpus import Corpus, PiecewiseSpec  # noqa: E402
from pdmoments.diffop import DiffOperator  # noqa: E402
from pdmoments.exact import Poly  # noqa: E402
from pdmoments.inputs import Numerical_Inputs  # noqa: E402

EXAMPLES = os.path.join(ROOT, 'Examples')


@pytest.fixture(scope='session')
def inputs():
    return Numerical_Inputs()


@pytest.fixture(scope='session')
def corpus(inputs):
    return Corpus(inputs)


@pytest.fixture(scope='session')
def corpus_signals(corpus):
    """Corpus signals with polynomial pieces, whose moments are exact"""
    return [signal for signal in corpus.signals() if signal.spec.is_polynomial]


@pytest.fixture(scope='session')
def analytic_signals(corpus):
    return [signal for signal in corpus.signals() if not signal.spec.is_polynomial]


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture
def derivative():
    return DiffOperator.derivative_operator(1)


@pytest.fixture
def unit_step():
    """f = 1 on [0, 1]"""
    return PiecewiseSpec((0, 1), (Poly.constant(1),))


@pytest.fixture
def examples_path():
    return lambda name: os.path.join(EXAMPLES, name)


def random_rational(rng, size=5, denominator=4):
    return Fraction(int(rng.integers(-size, size + 1)), int(rng.integers(1, denominator + 1)))


def random_poly(rng, degree, nonzero=False):
    coefficients = [random_rational(rng) for _ in range(degree + 1)]
    if nonzero:
        while coefficients[-1] == 0:
            coefficients[-1] = random_rational(rng)
    return Poly(tuple(coefficients))


def random_operator(rng, max_order=3, max_degree=4):
    order = int(rng.integers(1, max_order + 1))
    coeffs = [random_poly(rng, int(rng.integers(0, max_degree + 1))) for _ in range(order)]
    coeffs.append(random_poly(rng, int(rng.integers(0, max_degree + 1)), nonzero=True))
    return DiffOperator(tuple(coeffs))
