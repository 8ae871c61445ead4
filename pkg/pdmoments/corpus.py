# -*- coding: utf-8 -*-
"""
===============================================================================
                                CORPUS FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Ground-truth signals in PD(L, p) with exact moment oracles: Legendre
polynomials and their operators, piecewise polynomials under a power of D,
scaled copies of a polynomial g under g D - g', and a power-series solver for
pieces given by initial conditions.
===============================================================================
"""
from dataclasses import dataclass
from fractions import Fraction
import math
import datetime
import logging

import numpy as np
from numpy.polynomial import Polynomial, legendre as np_legendre

from .concomitant import JumpData
from .diffop import DiffOperator
from .errors import (AccuracyNotMet, NonPolynomialPiece, NotAnnihilated,
                     SingularExpansionPoint, ZeroPolynomial)
from .exact import Poly, falling_factorial
from .inputs import Numerical_Inputs
from .momrec import MomentSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InitialConditions:
    """(f, f', ..., f^(n-1)) at the left endpoint of a piece"""
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))


@dataclass(frozen=True)
class PiecewiseSpec:
    """
    breakpoints     a = xi_0 < ... < xi_{p+1} = b
    pieces          One Poly or InitialConditions per interval
    operator        Optional DiffOperator every piece must solve
    """
    breakpoints: tuple
    pieces: tuple
    operator: object = None

    def __post_init__(self):
        breakpoints = tuple(self.breakpoints)
        pieces = tuple(self.pieces)
        if len(breakpoints) < 2 or len(pieces) != len(breakpoints) - 1:
            raise ValueError('{} breakpoints cannot hold {} pieces'.format(len(breakpoints), len(pieces)))
        if any(b <= a for a, b in zip(breakpoints, breakpoints[1:])):
            raise ValueError('Breakpoints must be strictly increasing: {}'.format(breakpoints))
        for index, piece in enumerate(pieces):
            if isinstance(piece, InitialConditions):
                if self.operator is None:
                    raise ValueError('Initial-condition pieces need an operator')
                if len(piece.values) != self.operator.order:
                    raise ValueError('Piece {} gives {} initial values for an operator of order {}'.format(
                        index, len(piece.values), self.operator.order))
            elif self.operator is not None and not self.operator.apply(piece).is_zero:
                raise NotAnnihilated('Piece {} ({}) is not annihilated by {}'.format(
                    index, piece, self.operator))
        object.__setattr__(self, 'breakpoints', breakpoints)
        object.__setattr__(self, 'pieces', pieces)

    @property
    def p(self):
        return len(self.breakpoints) - 2

    @property
    def is_polynomial(self):
        return all(isinstance(piece, Poly) for piece in self.pieces)

    def intervals(self):
        return list(zip(self.breakpoints, self.breakpoints[1:], self.pieces))

    def __call__(self, x):
        """Evaluates a polynomial signal, zero outside [a, b], right-continuous inside"""
        if not self.is_polynomial:
            raise NonPolynomialPiece('Only polynomial signals can be evaluated directly')
        if x < self.breakpoints[0] or x > self.breakpoints[-1]:
            return 0 * x
        for start, end, piece in self.intervals():
            if start <= x < end:
                return piece(x)
        return self.pieces[-1](x)


@dataclass(frozen=True)
class CorpusSignal:
    name: str
    family: str
    operator: DiffOperator
    spec: PiecewiseSpec

    @property
    def p(self):
        return self.spec.p

    @property
    def order(self):
        return self.operator.order


@dataclass(frozen=True)
class SeriesPiece:
    """Truncated power series sum_N b_N (x - start)^N on [start, end]"""
    start: float
    end: float
    coefficients: np.ndarray
    error_estimate: float

    def __call__(self, x):
        return Polynomial(self.coefficients)(np.asarray(x, dtype=float) - self.start)

    def derivatives(self, x, order):
        series = Polynomial(self.coefficients)
        return [float(series.deriv(t)(x - self.start)) if t else float(series(x - self.start))
                for t in range(order)]


#%%
# =============================================================================
# POWER SERIES SOLUTIONS
#       Expansion at an ordinary point x0 of L; with p_j(x0 + y) = sum_i a~_{i,j} y^i
#       the coefficient of y^N in L f gives
#           a~_{0,n} (N+n)_n b_{N+n} = - sum_{(i,j) != (0,n)} a~_{i,j} (N+j-i)_j b_{N+j-i}
# =============================================================================
def check_expansion_point(operator, start, end):
    """
    Function:
        Raises SingularExpansionPoint unless every root of p_n lies further
        than end - start from start
    """
    leading = operator.leading
    if operator.leading(Fraction(start)) == 0:
        raise SingularExpansionPoint('p_n vanishes at the expansion point {}'.format(start))
    if leading.degree < 1:
        return
    roots = np.roots([float(c) for c in reversed(leading.coefficients)])
    radius = float(end) - float(start)
    close = [r for r in roots if abs(r - float(start)) <= radius]
    if close:
        raise SingularExpansionPoint('p_n has roots {} within {} of the expansion point {}'.format(
            close, radius, start))


def power_series_solution(operator, start, initial, degree):
    """
    Function:
        Taylor coefficients at start of the solution with the given initial values
    Inputs:
        operator    DiffOperator, with p_n(start) != 0
        start       Expansion point
        initial     (f, f', ..., f^(n-1)) at start
        degree      Truncation degree
    Outputs:
        numpy array b_0, ..., b_degree of coefficients in (x - start)
    """
    n = operator.order
    shifted = [p.shift(start) for p in operator.coeffs]
    leading = float(shifted[n].coefficient(0))
    if leading == 0:
        raise SingularExpansionPoint('p_n vanishes at the expansion point {}'.format(start))
    b = np.zeros(degree + 1)
    for t in range(min(n, degree + 1)):
        b[t] = float(initial[t]) / math.factorial(t)
    table = [(i, j, float(a)) for j, p in enumerate(shifted) for i, a in enumerate(p.coefficients)
             if a != 0 and not (i == 0 and j == n)]
    for N in range(degree + 1 - n):
        total = 0.0
        for i, j, a in table:
            index = N + j - i
            if index < 0:
                continue
            total += a * falling_factorial(index, j) * b[index]
        b[N + n] = -total / (leading * falling_factorial(N + n, n))
    return b


def tail_estimate(coefficients, order, radius):
    """Size of the last order retained terms on a disk of the given radius"""
    degree = len(coefficients) - 1
    return float(sum(abs(coefficients[N]) * radius ** N
                     for N in range(max(degree - order + 1, 0), degree + 1)))


#%%
class Corpus():
    def __init__(self, inputs=None):
        self.inputs = inputs or Numerical_Inputs()

#%%
# =============================================================================
# OPERATORS AND KERNEL ELEMENTS
# =============================================================================
    def legendre(self, m):
        """
        Function:
            Legendre operator and polynomial of degree m
        Inputs:
            m           Degree, m >= 0
        Outputs:
            (Op_m, P_m) with Op_m = (1 - x^2) D^2 - 2x D + m(m+1)
        """
        if m < 0:
            raise ValueError('Legendre degree must be nonnegative')
        operator = DiffOperator((Poly.constant(m * (m + 1)), Poly((0, -2)), Poly((1, 0, -1))))
        previous, current = Poly(), Poly.constant(1)
        for k in range(m):
            previous, current = current, (Poly.x() * current * (2 * k + 1) - previous * k) * Fraction(1, k + 1)
        return operator, current

    @staticmethod
    def legendre_moment(m):
        """m-th moment of P_m on [-1, 1], 2^(m+1) (m!)^2 / (2m+1)!"""
        return Fraction(2 ** (m + 1) * math.factorial(m) ** 2, math.factorial(2 * m + 1))

    def annihilator_of_poly(self, g):
        """g D - g', the first-order operator killing g"""
        if g.is_zero:
            raise ZeroPolynomial('The zero polynomial has no first-order annihilator')
        return DiffOperator((-g.derivative(), g))

    def annihilator_of_pieces(self, polys):
        """D^(D+1) for the largest degree D among the pieces"""
        degrees = [p.degree for p in polys if not p.is_zero]
        top = int(max(degrees)) if degrees else 0
        return DiffOperator.derivative_operator(top + 1)

#%%
# =============================================================================
# EXACT ORACLES
# =============================================================================
    def exact_moments(self, spec, K):
        """
        Function:
            Moments of a piecewise polynomial by exact antiderivatives
        Inputs:
            spec        PiecewiseSpec with Poly pieces
            K           Last moment index
        Outputs:
            MomentSequence m_0..m_K of Fractions
        """
        if not spec.is_polynomial:
            raise NonPolynomialPiece('Exact moments need polynomial pieces')
        values = []
        for k in range(K + 1):
            power = Poly.monomial(k)
            values.append(sum((Fraction(0),) + tuple((power * piece).integrate(start, end)
                                                      for start, end, piece in spec.intervals())))
        return MomentSequence(tuple(values))

    def jump_data(self, spec, n):
        """
        Function:
            Jumps of f, f', ..., f^(n-1) at every breakpoint, f = 0 outside [a, b]
        Outputs:
            JumpData; exact for polynomial pieces, floating through the power
            series of every piece otherwise
        """
        if not spec.is_polynomial:
            return self._series_jump_data(spec, n)
        jumps = []
        for j, xi in enumerate(spec.breakpoints):
            right = spec.pieces[j] if j < len(spec.pieces) else Poly()
            left = spec.pieces[j - 1] if j > 0 else Poly()
            jumps.append(tuple(right.derivative(i)(Fraction(xi)) - left.derivative(i)(Fraction(xi))
                               for i in range(n)))
        return JumpData(spec.breakpoints, tuple(jumps))

    def _series_jump_data(self, spec, n):
        if spec.operator.order != n:
            raise ValueError('Signal solves an operator of order {}, not {}'.format(spec.operator.order, n))
        pieces = self.series_solution(spec.operator, spec)
        outside = [0.0] * n
        jumps = []
        for j, xi in enumerate(spec.breakpoints):
            right = pieces[j].derivatives(float(xi), n) if j < len(pieces) else outside
            left = pieces[j - 1].derivatives(float(xi), n) if j > 0 else outside
            jumps.append(tuple(r - l for r, l in zip(right, left)))
        return JumpData(spec.breakpoints, tuple(jumps))

#%%
# =============================================================================
# POWER SERIES ORACLE
# =============================================================================
    def series_solution(self, operator, spec, degree=None):
        """
        Function:
            Truncated power series of every piece, expanded at its left endpoint
        Outputs:
            List of SeriesPiece
        """
        degree = degree or self.inputs.series_degree
        n = operator.order
        pieces = []
        for start, end, piece in spec.intervals():
            check_expansion_point(operator, start, end)
            if isinstance(piece, InitialConditions):
                initial = piece.values
            else:
                initial = [piece.derivative(t)(Fraction(start)) for t in range(n)]
            b = power_series_solution(operator, start, initial, degree)
            radius = float(end) - float(start)
            pieces.append(SeriesPiece(float(start), float(end), b, tail_estimate(b, n, radius)))
        return pieces

    def series_moments(self, operator, spec, K, degree=None):
        """
        Function:
            Floating moments of a signal whose pieces solve L f = 0, through
            truncated power series
        Inputs:
            operator    DiffOperator
            spec        PiecewiseSpec; Poly pieces are converted to initial values
            K           Last moment index
            degree      Series truncation degree (defaults to "Series degree")
        Outputs:
            MomentSequence of floats
        Notes:
            Each x^k * series product is a polynomial, integrated exactly by a
            Gauss-Legendre rule of sufficient size
        """
        degree = degree or self.inputs.series_degree
        pieces = self.series_solution(operator, spec, degree)
        estimate = max(piece.error_estimate for piece in pieces)
        logger.debug('Series tail estimate %.3e at degree %d', estimate, degree)
        if estimate > self.inputs.series_tolerance:
            raise AccuracyNotMet('Series tail estimate {:.3e} exceeds {:.3e} at degree {}'.format(
                estimate, self.inputs.series_tolerance, degree), estimate=estimate)
        points, weights = np_legendre.leggauss((K + degree) // 2 + 1)
        moments = np.zeros(K + 1)
        for piece in pieces:
            half = (piece.end - piece.start) / 2
            x = piece.start + half * (points + 1)
            values = piece(x) * weights * half
            for k in range(K + 1):
                moments[k] += np.sum(values * x ** k)
        return MomentSequence(tuple(float(m) for m in moments))

#%%
# =============================================================================
# THE SIGNAL CORPUS
# =============================================================================
    def signals(self, seed=2026, random_count=24):
        """
        Function:
            The ground-truth corpus
        Inputs:
            seed            Seed of the random piecewise polynomials
            random_count    Number of random piecewise polynomials
        Outputs:
            List of CorpusSignal
        """
        timer_start = datetime.datetime.now()
        corpus = []
#   Legendre polynomials on [-1, 1]; jumps only where p_n vanishes
        for m in range(11):
            operator, poly = self.legendre(m)
            spec = PiecewiseSpec((-1, 1), (poly,), operator)
            corpus.append(CorpusSignal('legendre-{}'.format(m), 'legendre', operator, spec))
#   Legendre polynomials doubled on [0, 1]; an interior node at a regular point
        for m in range(1, 6):
            operator, poly = self.legendre(m)
            spec = PiecewiseSpec((-1, 0, 1), (poly, poly * 2), operator)
            corpus.append(CorpusSignal('legendre-split-{}'.format(m), 'legendre-split', operator, spec))
#   The step: 1 on [0, 1/2), x on [1/2, 1]
        step = (Poly.constant(1), Poly.x())
        operator = self.annihilator_of_pieces(step)
        corpus.append(CorpusSignal('step', 'piecewise-poly', operator,
                                   PiecewiseSpec((0, Fraction(1, 2), 1), step, operator)))
#   Random piecewise polynomials on a grid of spacing 1/5 in [-1, 1]
        rng = np.random.default_rng(seed)
        grid = [Fraction(t - 5, 5) for t in range(11)]
        for index in range(random_count):
            top_degree = index % 3
            p = int(rng.integers(0, 4))
            breakpoints = tuple(sorted(grid[t] for t in rng.choice(len(grid), size=p + 2, replace=False)))
            pieces = self._random_pieces(rng, breakpoints, top_degree)
            operator = self.annihilator_of_pieces(pieces)
            corpus.append(CorpusSignal('piecewise-{}'.format(index), 'piecewise-poly', operator,
                                       PiecewiseSpec(breakpoints, pieces, operator)))
#   Scaled copies of g under g D - g'
        kernels = [Poly((1,)), Poly((0, 1)), Poly((-1, 0, 3)), Poly((2, 1)), Poly((1, 0, 1)),
                   Poly((0, 1, 0, -1))]
        for index, g in enumerate(kernels):
            operator = self.annihilator_of_poly(g)
            spec = PiecewiseSpec((0, 1), (g,), operator)
            corpus.append(CorpusSignal('scaled-{}'.format(index), 'scaled', operator, spec))
            scales = (Fraction(1), Fraction(-3, 2), Fraction(2))
            spec = PiecewiseSpec((-1, Fraction(-1, 5), Fraction(1, 2), 1),
                                 tuple(g * c for c in scales), operator)
            corpus.append(CorpusSignal('scaled-split-{}'.format(index), 'scaled', operator, spec))
#   The same copies under D composed with g D - g'
        for index, g in enumerate(kernels[1:]):
            operator = DiffOperator.derivative_operator(1).compose(self.annihilator_of_poly(g))
            spec = PiecewiseSpec((-1, Fraction(2, 5), 1), (g, g * -1), operator)
            corpus.append(CorpusSignal('composed-{}'.format(index), 'composed', operator, spec))
#   Analytic pieces from initial values: e^x, trigonometric and hyperbolic
        exponential = DiffOperator((Poly.constant(-1), Poly.constant(1)))
        oscillator = DiffOperator((Poly.constant(1), Poly(), Poly.constant(1)))
        hyperbolic = DiffOperator((Poly.constant(-1), Poly(), Poly.constant(1)))
        analytic = [
            ('exp', exponential, (0, 1), ((1,),)),
            ('exp-split', exponential, (-1, Fraction(-1, 5), Fraction(1, 2), 1),
             ((1,), (-2,), (Fraction(3, 2),))),
            ('sin', oscillator, (0, 1), ((0, 1),)),
            ('trig-split', oscillator, (-1, 0, 1), ((1, 0), (0, 2))),
            ('cosh-split', hyperbolic, (-1, Fraction(1, 2), 1), ((1, 1), (-1, 2))),
        ]
        for name, operator, breakpoints, values in analytic:
            spec = PiecewiseSpec(breakpoints, tuple(InitialConditions(v) for v in values), operator)
            corpus.append(CorpusSignal('analytic-' + name, 'analytic', operator, spec))
        timer_end = datetime.datetime.now()
        logger.info('Time taken for corpus construction: %.2f seconds, %d signals',
                    (timer_end - timer_start).total_seconds(), len(corpus))
        return corpus

    def signal(self, name):
        for item in self.signals():
            if item.name == name:
                return item
        raise KeyError('No corpus signal named ' + name)

    def _random_pieces(self, rng, breakpoints, top_degree):
#   Redraw until f itself jumps at every node
        while True:
            pieces = []
            for _ in range(len(breakpoints) - 1):
                coefficients = [Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))
                                for _ in range(top_degree + 1)]
                pieces.append(Poly(tuple(coefficients)))
            if all(piece.degree < top_degree for piece in pieces) and top_degree > 0:
                continue
            padded = [Poly()] + pieces + [Poly()]
            if all(padded[j + 1](xi) != padded[j](xi) for j, xi in enumerate(breakpoints)):
                return tuple(pieces)
