# -*- coding: utf-8 -*-
"""
===============================================================================
                          DIFFERENTIAL OPERATOR FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
The operator L = p_n(x) D^n + ... + p_1(x) D + p_0(x) with exact polynomial
coefficients: construction, algebra, formal adjoint, application to
polynomials, the degree profile alpha, the recurrence coefficients q_l(k),
Lambda(L) and the analysis of the point at infinity.
===============================================================================
"""
from dataclasses import dataclass
from fractions import Fraction
import math
import logging

import numpy as np
import pandas as pd

from .errors import DegenerateLeading, RangeError, ZeroPolynomial
from .exact import (Poly, ZERO_DEGREE, falling_factorial_poly, format_poly,
                    positive_integer_roots, rational_roots)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaProfile:
    alphas: tuple
    alpha: int


@dataclass(frozen=True)
class InfinityAnalysis:
    """
    fuchsian                alpha_n >= alpha_j for every nonzero p_j
    indicial                q_{alpha_n}(s - 1) as a polynomial in s
    exponents               rational roots of the indicial polynomial, with multiplicity
    approximate_exponents   double-precision estimates of the remaining roots
    integer_exponents       positive integer roots
    lambda_                 largest positive integer root, None when there is none
    exponent_offset         alpha_n; classical exponents at infinity are the roots plus this offset
    """
    fuchsian: bool
    indicial: Poly
    exponents: tuple
    approximate_exponents: tuple
    integer_exponents: tuple
    lambda_: object
    exponent_offset: int

    @property
    def lambda_cap(self):
        """Lambda(L) recovered as lambda - 1, with the 0 sentinel."""
        if self.lambda_ is None:
            return 0
        return max(self.lambda_ - 1, 0)


@dataclass(frozen=True)
class DiffOperator:
    """
    coeffs holds p_0, ..., p_n as Poly values. a(i, j) is the coefficient of
    x^i in p_j and is zero outside 0 <= i <= d_j.
    """
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(c if isinstance(c, Poly) else Poly(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError('A differential operator has order n >= 1')
        if coeffs[-1].is_zero:
            raise ZeroPolynomial('The leading coefficient p_n must be nonzero')
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def from_coefficients(cls, table):
        """
        Function:
            Builds an operator from nested coefficient lists
        Inputs:
            table       [[c_00, c_10, ...], [c_01, c_11, ...], ...], one list per p_j,
                        lowest power first
        """
        return cls(tuple(Poly(tuple(row)) for row in table))

    @classmethod
    def derivative_operator(cls, r):
        """D^r"""
        return cls(tuple(Poly() for _ in range(r)) + (Poly.constant(1),))

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def degrees(self):
        return tuple(p.degree for p in self.coeffs)

    @property
    def leading(self):
        return self.coeffs[-1]

    def a(self, i, j):
        if j < 0 or j > self.order or i < 0:
            return Fraction(0)
        return self.coeffs[j].coefficient(i)

    def table(self):
        """
        Function:
            Coefficient table a_{i,j}
        Outputs:
            DataFrame, rows x^i, columns p_j
        """
        height = max(len(p.coefficients) for p in self.coeffs)
        data = {'p_{}'.format(j): [self.a(i, j) for i in range(height)]
                for j in range(self.order + 1)}
        return pd.DataFrame(data, index=['x^{}'.format(i) for i in range(height)])

    def __str__(self):
        terms = []
        for j in range(self.order, -1, -1):
            p = self.coeffs[j]
            if p.is_zero:
                continue
            derivative = '' if j == 0 else ('D' if j == 1 else 'D^{}'.format(j))
            coefficient = format_poly(p)
            if derivative and coefficient == '1':
                terms.append(derivative)
            elif derivative:
                terms.append('({})*{}'.format(coefficient, derivative))
            else:
                terms.append('({})'.format(coefficient))
        return ' + '.join(terms)

#%%
# =============================================================================
# OPERATOR ALGEBRA
# =============================================================================
    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        coeffs = [Poly() for _ in range(size)]
        for j, p in enumerate(self.coeffs):
            coeffs[j] = coeffs[j] + p
        for j, p in enumerate(other.coeffs):
            coeffs[j] = coeffs[j] + p
        while len(coeffs) > 2 and coeffs[-1].is_zero:
            coeffs.pop()
        return DiffOperator(tuple(coeffs))

    def compose(self, other):
        """
        Function:
            The product L o M, i.e. u -> L(M u)
        Notes:
            D^j (r_i D^i u) = sum_t C(j, t) r_i^(j-t) D^(i+t) u
        """
        coeffs = [Poly() for _ in range(self.order + other.order + 1)]
        for j, p in enumerate(self.coeffs):
            if p.is_zero:
                continue
            for i, r in enumerate(other.coeffs):
                if r.is_zero:
                    continue
                for t in range(j + 1):
                    coeffs[i + t] = coeffs[i + t] + p * r.derivative(j - t) * math.comb(j, t)
        return DiffOperator(tuple(coeffs))

    def adjoint(self):
        """
        Function:
            Formal adjoint L* v = sum_j (-1)^j D^j (p_j v), expanded by Leibniz
        Outputs:
            DiffOperator with coefficient of D^t equal to
            sum_{j >= t} (-1)^j C(j, t) p_j^(j-t)
        """
        n = self.order
        coeffs = []
        for t in range(n + 1):
            total = Poly()
            for j in range(t, n + 1):
                total = total + self.coeffs[j].derivative(j - t) * ((-1) ** j * math.comb(j, t))
            coeffs.append(total)
        return DiffOperator(tuple(coeffs))

    def apply(self, u):
        """sum_j p_j u^(j), exactly"""
        result = Poly()
        for j, p in enumerate(self.coeffs):
            result = result + p * u.derivative(j)
        return result

#%%
# =============================================================================
# RECURRENCE COEFFICIENTS
# =============================================================================
    def alpha_profile(self):
        """
        Function:
            Degree profile alpha_j = d_j - j and alpha = max_j alpha_j
        Outputs:
            AlphaProfile; zero coefficients get alpha_j = ZERO_DEGREE and are
            left out of the maximum
        """
        alphas = tuple(d - j if d != ZERO_DEGREE else ZERO_DEGREE
                       for j, d in enumerate(self.degrees))
        alpha = max(int(a) for a in alphas if a != ZERO_DEGREE)
        return AlphaProfile(alphas, alpha)

    @property
    def alpha(self):
        return self.alpha_profile().alpha

    def q_poly(self, ell):
        """
        Function:
            q_l(k) = sum_j (-1)^j a_{l+j, j} (k + l + j)_j
        Inputs:
            ell         Offset in [-n, alpha]
        Outputs:
            Poly in k
        """
        if ell < -self.order or ell > self.alpha:
            raise RangeError('q_l is defined for l in [{}, {}], got {}'.format(
                -self.order, self.alpha, ell))
        result = Poly()
        for j in range(self.order + 1):
            a = self.a(ell + j, j)
            if a == 0:
                continue
            result = result + falling_factorial_poly(ell + j, j) * ((-1) ** j * a)
        return result

    def q_polys(self):
        """{l: q_l} for every l in [-n, alpha]"""
        return {ell: self.q_poly(ell) for ell in range(-self.order, self.alpha + 1)}

    def lambda_cap(self):
        """
        Function:
            Lambda(L), the largest positive integer zero of q_alpha
        Outputs:
            Integer; 0 when q_alpha has no positive integer zero
        """
        q_alpha = self.q_poly(self.alpha)
        if q_alpha.is_zero:
            raise DegenerateLeading('q_alpha vanishes identically')
        roots = positive_integer_roots(q_alpha)
        return roots[-1] if roots else 0

#%%
# =============================================================================
# THE POINT AT INFINITY
# =============================================================================
    def infinity_analysis(self):
        """
        Function:
            Fuchsian test at infinity and the characteristic exponents
        Outputs:
            InfinityAnalysis
        Notes:
            The indicial polynomial is q_{alpha_n}(s - 1). Rational roots are
            exact; any others are estimated with numpy and flagged approximate.
        """
        profile = self.alpha_profile()
        alpha_n = int(profile.alphas[-1])
        fuchsian = all(a <= alpha_n for a in profile.alphas[:-1] if a != ZERO_DEGREE)
        indicial = self.q_poly(alpha_n).shift(-1)
        exponents, rest = rational_roots(indicial)
        approximate = ()
        if rest.degree >= 1:
            approximate = tuple(complex(r) for r in
                                np.roots([float(c) for c in reversed(rest.coefficients)]))
            logger.warning('Indicial polynomial %s has irrational roots, estimates %s',
                           format_poly(indicial, 's'), approximate)
        integer_exponents = tuple(sorted({int(r) for r in exponents
                                          if r.denominator == 1 and r >= 1}))
        lambda_ = integer_exponents[-1] if integer_exponents else None
        return InfinityAnalysis(fuchsian, indicial, tuple(exponents), approximate,
                                integer_exponents, lambda_, alpha_n)

    def is_regular_at(self, xi):
        return self.leading(xi) != 0
