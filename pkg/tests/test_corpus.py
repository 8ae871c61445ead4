#!/usr/bin/env python
u"""
test_corpus.py
Tests the ground-truth corpus: Legendre data, annihilators, exact moments,
jump data and the power-series oracle
"""
from fractions import Fraction
import math

import numpy as np
import pytest
from scipy import integrate

from pdmoments.corpus import InitialConditions, PiecewiseSpec, power_series_solution
from pdmoments.diffop import DiffOperator
from pdmoments.errors import (AccuracyNotMet, NonPolynomialPiece, NotAnnihilated,
                              SingularExpansionPoint, ZeroPolynomial)
from pdmoments.exact import Poly

EXPONENTIAL = DiffOperator((Poly((-1,)), Poly((1,))))


#-- PURPOSE: Legendre polynomials and their operators
def test_legendre(corpus):
    operator, poly = corpus.legendre(2)
    assert poly == Poly((Fraction(-1, 2), 0, Fraction(3, 2)))
    assert operator == DiffOperator((Poly((6,)), Poly((0, -2)), Poly((1, 0, -1))))
    for m in range(11):
        operator, poly = corpus.legendre(m)
        assert poly.degree == m
        assert poly(1) == 1
        assert operator.apply(poly).is_zero
    with pytest.raises(ValueError):
        corpus.legendre(-1)


#-- PURPOSE: m-th moment of P_m
def test_legendre_moment(corpus):
    assert corpus.legendre_moment(0) == 2
    assert corpus.legendre_moment(2) == Fraction(4, 15)
    for m in range(11):
        _, poly = corpus.legendre(m)
        moments = corpus.exact_moments(PiecewiseSpec((-1, 1), (poly,)), m)
        assert moments[m] == corpus.legendre_moment(m)
        assert all(moments[k] == 0 for k in range(m))


#-- PURPOSE: first-order annihilators g D - g'
def test_annihilator_of_poly(corpus):
    assert corpus.annihilator_of_poly(Poly.x()) == DiffOperator((Poly((-1,)), Poly((0, 1))))
    assert corpus.annihilator_of_poly(Poly((1,))) == DiffOperator.derivative_operator(1)
    g = Poly((-1, 0, 3))
    operator = corpus.annihilator_of_poly(g)
    assert operator == DiffOperator((Poly((0, -6)), g))
    assert operator.apply(g * 5).is_zero
    with pytest.raises(ZeroPolynomial):
        corpus.annihilator_of_poly(Poly())
    assert corpus.annihilator_of_pieces((Poly((1,)), Poly((0, 0, 1)))) == DiffOperator.derivative_operator(3)


#-- PURPOSE: piecewise specifications validate their pieces
def test_piecewise_spec(derivative):
    with pytest.raises(ValueError):
        PiecewiseSpec((0, 1), (Poly((1,)), Poly((1,))))
    with pytest.raises(ValueError):
        PiecewiseSpec((1, 0), (Poly((1,)),))
    with pytest.raises(NotAnnihilated):
        PiecewiseSpec((0, 1), (Poly.x(),), derivative)
    with pytest.raises(ValueError):
        PiecewiseSpec((0, 1), (InitialConditions((1,)),))
    with pytest.raises(ValueError):
        PiecewiseSpec((0, 1), (InitialConditions((1, 2)),), derivative)
    step = PiecewiseSpec((0, Fraction(1, 2), 1), (Poly((1,)), Poly.x()))
    assert step.p == 1
    assert step(Fraction(1, 4)) == 1
    assert step(Fraction(3, 4)) == Fraction(3, 4)
    assert step(Fraction(1, 2)) == Fraction(1, 2)
    assert step(2) == 0


#-- PURPOSE: exact moments by antiderivatives
def test_exact_moments(corpus, unit_step):
    assert corpus.exact_moments(unit_step, 5).values == tuple(Fraction(1, k + 1) for k in range(6))
    step = PiecewiseSpec((0, Fraction(1, 2), 1), (Poly((1,)), Poly.x()))
    assert corpus.exact_moments(step, 0)[0] == Fraction(7, 8)
    spec = PiecewiseSpec((0, 1), (InitialConditions((1,)),), EXPONENTIAL)
    with pytest.raises(NonPolynomialPiece):
        corpus.exact_moments(spec, 3)


#-- PURPOSE: jump vectors include the endpoints
def test_jump_data(corpus, unit_step):
    assert corpus.jump_data(unit_step, 1).jumps == ((1,), (-1,))
    _, poly = corpus.legendre(2)
    jumps = corpus.jump_data(PiecewiseSpec((-1, 1), (poly,)), 2)
    assert jumps.jumps == ((1, -3), (-1, -3))
    x = Poly.x()
    jumps = corpus.jump_data(PiecewiseSpec((0, 1, 2), (x, x)), 2)
    assert jumps.jumps[1] == (0, 0)


#-- PURPOSE: series moments of e^x on [0, 1] against closed forms and quadrature
def test_series_exponential(corpus):
    spec = PiecewiseSpec((0, 1), (InitialConditions((1,)),), EXPONENTIAL)
    moments = corpus.series_moments(EXPONENTIAL, spec, 5, degree=30)
    assert abs(moments[0] - (math.e - 1)) <= 1e-12
    assert abs(moments[1] - 1) <= 1e-12
    for k in range(6):
        expected = integrate.quad(lambda x: x ** k * np.exp(x), 0, 1)[0]
        assert abs(moments[k] - expected) <= 1e-12


#-- PURPOSE: series coefficients of e^x at 0
def test_power_series_solution():
    b = power_series_solution(EXPONENTIAL, 0, (1,), 10)
    assert np.allclose(b, [1 / math.factorial(N) for N in range(11)])
#   u'' + u = 0 with u(0) = 0, u'(0) = 1 is sin
    b = power_series_solution(DiffOperator((Poly((1,)), Poly(), Poly((1,)))), 0, (0, 1), 7)
    assert np.allclose(b, [0, 1, 0, -1 / 6, 0, 1 / 120, 0, -1 / 5040])


#-- PURPOSE: polynomial pieces through the series path agree with exact moments
def test_series_matches_exact(corpus, corpus_signals):
    for signal in corpus_signals:
        if signal.family != 'piecewise-poly':
            continue
        exact = corpus.exact_moments(signal.spec, 10)
        series = corpus.series_moments(signal.operator, signal.spec, 10)
        assert np.allclose(np.array(series.values), np.array(exact.values, dtype=float),
                           rtol=0, atol=1e-12), signal.name


#-- PURPOSE: expansion points at or near roots of p_n are refused
def test_singular_expansion_point(corpus):
    operator, poly = corpus.legendre(2)
    with pytest.raises(SingularExpansionPoint):
        corpus.series_solution(operator, PiecewiseSpec((-1, 1), (poly,), operator))
#   p_n = 1 - x^2 has a root within the radius of [-1/2, 1]
    with pytest.raises(SingularExpansionPoint):
        corpus.series_solution(operator, PiecewiseSpec((Fraction(-1, 2), 1), (poly,), operator))


#-- PURPOSE: truncation that misses the tolerance is reported
def test_accuracy_not_met(corpus):
    spec = PiecewiseSpec((0, 1), (InitialConditions((1,)),), EXPONENTIAL)
    with pytest.raises(AccuracyNotMet) as error:
        corpus.series_moments(EXPONENTIAL, spec, 3, degree=5)
    assert error.value.estimate > 1e-10


#-- PURPOSE: the corpus is large, named uniquely and annihilated piece by piece
def test_corpus_contents(corpus):
    signals = corpus.signals()
    assert len(signals) >= 50
    names = [signal.name for signal in signals]
    assert len(set(names)) == len(names)
    families = {signal.family for signal in signals}
    assert families == {'legendre', 'legendre-split', 'piecewise-poly', 'scaled', 'composed', 'analytic'}
    for signal in signals:
        assert signal.spec.operator == signal.operator
        for piece in signal.spec.pieces:
            if isinstance(piece, Poly):
                assert signal.operator.apply(piece).is_zero
            else:
                assert len(piece.values) == signal.order
    assert max(signal.p for signal in signals) >= 2
    assert max(signal.order for signal in signals) == 3
    assert sum(not signal.spec.is_polynomial for signal in signals) >= 5


#-- PURPOSE: jumps of analytic pieces come from their power series
def test_series_jump_data(corpus):
    jumps = corpus.jump_data(corpus.signal('analytic-exp').spec, 1)
    assert jumps.nodes == (0, 1)
    assert np.allclose([d for jump in jumps.jumps for d in jump], [1, -math.e], rtol=0, atol=1e-12)
#   cos(x + 1) on [-1, 0), 2 sin on [0, 1]
    jumps = corpus.jump_data(corpus.signal('analytic-trig-split').spec, 2)
    expected = [(1, 0), (-math.cos(1), 2 + math.sin(1)), (-2 * math.sin(1), -2 * math.cos(1))]
    assert np.allclose(np.array(jumps.jumps, dtype=float), np.array(expected), rtol=0, atol=1e-12)
    with pytest.raises(ValueError):
        corpus.jump_data(corpus.signal('analytic-exp').spec, 2)


#-- PURPOSE: the corpus is reproducible
def test_corpus_deterministic(corpus):
    first = [(s.name, s.spec) for s in corpus.signals()]
    second = [(s.name, s.spec) for s in corpus.signals()]
    assert first == second
    assert corpus.signal('step').spec.breakpoints == (0, Fraction(1, 2), 1)
    with pytest.raises(KeyError):
        corpus.signal('nothing')
