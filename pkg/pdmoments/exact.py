# -*- coding: utf-8 -*-
"""
===============================================================================
                              EXACT CORE FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Exact rational scalars (fractions.Fraction), univariate polynomials, truncated
Laurent series at infinity and partial-fraction rational functions. Every
verification path in PDMoments computes over these types, so nothing in here
ever rounds. Scalars may also be floats: the same routines then run in double
precision, which is how the reconstruction path reuses them.
===============================================================================
"""
from dataclasses import dataclass
from fractions import Fraction
import math
import logging

import sympy

from .errors import ParseError, SingularSystem, ZeroPolynomial

logger = logging.getLogger(__name__)

ZERO_DEGREE = float('-inf')


#%%
# =============================================================================
# SCALARS
#       Rat is fractions.Fraction: always in lowest terms, positive denominator
# =============================================================================
Rat = Fraction


def parse_rat(text):
    """
    Function:
        Parses a rational literal
    Inputs:
        text        "p/q", "p", or a decimal literal such as "0.25" or "1e-3"
    Outputs:
        Fraction holding the exact value of the literal
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError('Not a rational literal: ' + repr(text)) from error


def format_rat(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return '{}/{}'.format(value.numerator, value.denominator)
    return repr(float(value))


def falling_factorial(x, j):
    """
    Function:
        Pochhammer symbol (x)_j = x(x-1)...(x-j+1), with (x)_0 = 1
    Notes:
        For integers 0 <= x < j one factor is zero, which gives the
        "zero when x < j" convention automatically
    """
    result = 1
    for t in range(j):
        result = result * (x - t)
    return result


def power_term(xi, k, ell):
    """
    Function:
        Basis term (k)_l * xi^(k-l) of a generalised power sum
    Inputs:
        xi          Node (Fraction or float)
        k           Sample index
        ell         Confluence order
    Outputs:
        Exact term; zero for k < l, and l! at xi = 0, k = l
    """
    if k < ell:
        return 0 * xi
    return falling_factorial(k, ell) * xi ** (k - ell)


#%%
# =============================================================================
# POLYNOMIALS
# =============================================================================
@dataclass(frozen=True)
class Poly:
    """
    Univariate polynomial with exact rational coefficients, lowest power
    first. The zero polynomial has no coefficients and degree ZERO_DEGREE.
    """
    coefficients: tuple = ()

    def __post_init__(self):
        coefficients = [Fraction(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, power, value=1):
        return cls((0,) * power + (value,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots, leading=1):
        result = cls.constant(leading)
        for root in roots:
            result = result * cls((-Fraction(root), 1))
        return result

    @property
    def degree(self):
        if not self.coefficients:
            return ZERO_DEGREE
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, power):
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, x):
        result = 0 * x
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __add__(self, other):
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Poly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self, r=1):
        coefficients = self.coefficients
        for _ in range(r):
            coefficients = tuple(i * c for i, c in enumerate(coefficients) if i > 0)
        return Poly(coefficients)

    def antiderivative(self):
        return Poly((0,) + tuple(c / (i + 1) for i, c in enumerate(self.coefficients)))

    def integrate(self, a, b):
        primitive = self.antiderivative()
        return primitive(b) - primitive(a)

    def divide_linear(self, root):
        """
        Function:
            Synthetic division by (x - root)
        Outputs:
            (quotient, remainder)
        """
        if self.is_zero:
            return Poly(), Fraction(0)
        quotient = []
        carry = Fraction(0)
        for c in reversed(self.coefficients):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return Poly(tuple(reversed(quotient))), remainder

    def shift(self, x0):
        """
        Function:
            Taylor shift, returns q(y) = p(y + x0)
        """
        result = Poly()
        step = Poly((Fraction(x0), 1))
        for c in reversed(self.coefficients):
            result = result * step + c
        return result

    def __str__(self):
        return format_poly(self)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def format_poly(p, variable='x'):
    if p.is_zero:
        return '0'
    terms = []
    for power in range(len(p.coefficients) - 1, -1, -1):
        c = p.coefficients[power]
        if c == 0:
            continue
        sign = '-' if c < 0 else '+'
        magnitude = abs(c)
        if power == 0:
            body = format_rat(magnitude)
        else:
            monomial = variable if power == 1 else '{}^{}'.format(variable, power)
            body = monomial if magnitude == 1 else format_rat(magnitude) + '*' + monomial
        terms.append((sign, body))
    text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
    for sign, body in terms[1:]:
        text += ' {} {}'.format(sign, body)
    return text


def poly_arith(a, b, op):
    """
    Function:
        Exact polynomial arithmetic
    Inputs:
        a, b        Poly
        op          'add', 'sub' or 'mul'
    Outputs:
        Poly
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError('Unknown polynomial operation: ' + str(op))


def poly_derivative(p, r=1):
    if r < 0:
        raise ValueError('Derivative order must be nonnegative')
    return p.derivative(r)


def falling_factorial_poly(shift, j):
    """
    Function:
        The Pochhammer symbol (k + shift)_j as a polynomial in k
    """
    result = Poly.constant(1)
    for t in range(j):
        result = result * Poly((Fraction(shift - t), 1))
    return result


def positive_integer_roots(p):
    """
    Function:
        All positive integer zeros of a polynomial, exactly
    Inputs:
        p           Poly, not identically zero
    Outputs:
        Sorted list of the integers k >= 1 with p(k) = 0
    Notes:
        Candidates are the divisors of the trailing coefficient of the
        integer-scaled polynomial (rational root theorem); each candidate is
        confirmed by exact evaluation
    """
    if p.is_zero:
        raise ZeroPolynomial('positive_integer_roots needs a nonzero polynomial')
    scale = 1
    for c in p.coefficients:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    integer_coefficients = [int(c * scale) for c in p.coefficients]
#   Roots at zero are not positive, strip the factor x^t
    while integer_coefficients[0] == 0:
        integer_coefficients.pop(0)
    if len(integer_coefficients) == 1:
        return []
    candidates = sympy.divisors(abs(integer_coefficients[0]))
    roots = [int(k) for k in candidates if p(Fraction(int(k))) == 0]
    return sorted(roots)


def rational_roots(p):
    """
    Function:
        All rational zeros of a polynomial, with multiplicity
    Inputs:
        p           Poly, not identically zero
    Outputs:
        (roots, rest): sorted list of rational roots repeated by multiplicity,
        and the deflated cofactor, which has no rational roots left
    """
    if p.is_zero:
        raise ZeroPolynomial('rational_roots needs a nonzero polynomial')
    roots = []
    rest = p
    while rest.degree >= 1 and rest.coefficients[0] == 0:
        roots.append(Fraction(0))
        rest = Poly(rest.coefficients[1:])
    if rest.degree < 1:
        return roots, rest
    scale = 1
    for c in rest.coefficients:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    trailing = abs(int(rest.coefficients[0] * scale))
    leading = abs(int(rest.coefficients[-1] * scale))
    candidates = set()
    for numerator in sympy.divisors(trailing):
        for denominator in sympy.divisors(leading):
            candidates.add(Fraction(int(numerator), int(denominator)))
            candidates.add(-Fraction(int(numerator), int(denominator)))
    for candidate in sorted(candidates):
        while rest.degree >= 1:
            quotient, remainder = rest.divide_linear(candidate)
            if remainder != 0:
                break
            roots.append(candidate)
            rest = quotient
    return sorted(roots), rest


#%%
# =============================================================================
# TRUNCATED LAURENT SERIES AT INFINITY
# =============================================================================
@dataclass(frozen=True)
class LaurentTail:
    """
    Truncated series  sum_{t = start_power}^{truncation_order} c_t z^(-t).
    Coefficients beyond truncation_order are unknown, never zero.
    """
    start_power: int
    coefficients: tuple
    truncation_order: int

    def __post_init__(self):
        if self.start_power < 1:
            raise ValueError('A Laurent tail starts at z^-1 or lower')
        expected = max(self.truncation_order - self.start_power + 1, 0)
        if len(self.coefficients) != expected:
            raise ValueError('Laurent tail holds {} coefficients, expected {}'.format(
                len(self.coefficients), expected))

    @classmethod
    def from_terms(cls, terms, truncation_order):
        """
        Function:
            Builds a tail from a {power t: coefficient of z^-t} mapping, keeping
            1 <= t <= truncation_order
        """
        kept = {t: c for t, c in terms.items() if 1 <= t <= truncation_order}
        start = min(kept) if kept else 1
        start = min(start, max(truncation_order, 1))
        coefficients = tuple(kept.get(t, Fraction(0)) for t in range(start, truncation_order + 1))
        return cls(start, coefficients, truncation_order)

    def coefficient(self, t):
        if t > self.truncation_order:
            raise ValueError('Coefficient of z^-{} lies beyond the truncation order {}'.format(
                t, self.truncation_order))
        if t < self.start_power:
            return Fraction(0)
        return self.coefficients[t - self.start_power]

    def terms(self):
        return {self.start_power + i: c for i, c in enumerate(self.coefficients)}

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coefficients)

    def __add__(self, other):
        order = min(self.truncation_order, other.truncation_order)
        terms = {}
        for t, c in list(self.terms().items()) + list(other.terms().items()):
            terms[t] = terms.get(t, 0) + c
        return LaurentTail.from_terms(terms, order)

    def scale(self, factor):
        return LaurentTail(self.start_power, tuple(factor * c for c in self.coefficients),
                           self.truncation_order)

    def derivative(self):
#   d/dz z^-t = -t z^-(t+1)
        terms = {t + 1: -t * c for t, c in self.terms().items()}
        return LaurentTail.from_terms(terms, self.truncation_order + 1)

    def times_polynomial(self, p):
        """
        Function:
            Multiplies the series by a polynomial p(z)
        Outputs:
            (tail, polynomial part): the z^-t part as a LaurentTail, trustworthy
            through truncation_order - deg p, and the z^0, z^1, ... part as a Poly
        """
        if p.is_zero:
            return LaurentTail.from_terms({}, self.truncation_order), Poly()
        order = self.truncation_order - p.degree
        negative = {}
        nonnegative = {}
        for i, a in enumerate(p.coefficients):
            if a == 0:
                continue
            for t, c in self.terms().items():
                power = t - i
                if power >= 1:
                    negative[power] = negative.get(power, 0) + a * c
                else:
                    nonnegative[-power] = nonnegative.get(-power, 0) + a * c
        size = max(nonnegative) + 1 if nonnegative else 0
        polynomial = Poly(tuple(nonnegative.get(e, 0) for e in range(size)))
        return LaurentTail.from_terms(negative, order), polynomial


#%%
# =============================================================================
# RATIONAL FUNCTIONS REGULAR AT INFINITY
# =============================================================================
@dataclass(frozen=True)
class RatFun:
    """
    Partial-fraction rational function  sum_j sum_l terms[j][l] / (z - poles[j])^(l+1).
    No polynomial part, so the function vanishes at infinity.
    """
    poles: tuple
    terms: tuple

    def __post_init__(self):
        if len(self.poles) != len(self.terms):
            raise ValueError('One coefficient list is needed per pole')
        object.__setattr__(self, 'terms', tuple(tuple(row) for row in self.terms))

    @property
    def is_zero(self):
        return all(c == 0 for row in self.terms for c in row)

    def __call__(self, z):
        value = 0 * z
        for pole, row in zip(self.poles, self.terms):
            for ell, c in enumerate(row):
                value = value + c / (z - pole) ** (ell + 1)
        return value

    def expansion(self, count):
        """
        Function:
            Coefficients of z^(-k-1), k = 0..count-1, of the expansion at infinity
        Notes:
            1/(z - xi)^(l+1) = sum_k C(k, l) xi^(k-l) z^(-k-1)
        """
        values = []
        for k in range(count):
            total = Fraction(0)
            for pole, row in zip(self.poles, self.terms):
                for ell, c in enumerate(row):
                    if c == 0 or k < ell:
                        continue
                    total = total + c * math.comb(k, ell) * pole ** (k - ell)
            values.append(total)
        return values

    def laurent(self, count):
        terms = {k + 1: value for k, value in enumerate(self.expansion(count))}
        return LaurentTail.from_terms(terms, count)

    def __str__(self):
        pieces = []
        for pole, row in zip(self.poles, self.terms):
            for ell, c in enumerate(row):
                if c == 0:
                    continue
                if pole == 0:
                    base = 'z'
                elif pole < 0:
                    base = '(z + {})'.format(format_rat(-pole))
                else:
                    base = '(z - {})'.format(format_rat(pole))
                denominator = base if ell == 0 else '{}^{}'.format(base, ell + 1)
                pieces.append('{}/{}'.format(format_rat(c), denominator))
        return ' + '.join(pieces) if pieces else '0'


#%%
# =============================================================================
# EXACT LINEAR ALGEBRA
#       sympy matrices over the rationals, converted back to Fractions
# =============================================================================
def _to_sympy(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value):
    value = sympy.nsimplify(value) if not isinstance(value, sympy.Rational) else value
    return Fraction(int(value.p), int(value.q))


def solve_exact(matrix, rhs):
    """
    Function:
        Solves a square linear system exactly
    Inputs:
        matrix      Nested lists of rationals
        rhs         List of rationals
    Outputs:
        List of Fractions
    """
    A = sympy.Matrix([[_to_sympy(v) for v in row] for row in matrix])
    b = sympy.Matrix([_to_sympy(v) for v in rhs])
    if A.shape[0] != A.shape[1] or A.det() == 0:
        raise SingularSystem('Linear system of shape {} is singular'.format(A.shape))
    return [_from_sympy(v) for v in A.LUsolve(b)]


def count_real_roots(p, a, b):
    """
    Function:
        Number of real roots of p in the closed interval [a, b], counted
        exactly by sympy (Poly.count_roots over the rationals)
    """
    if p.is_zero:
        raise ZeroPolynomial('count_real_roots needs a nonzero polynomial')
    x = sympy.Symbol('x')
    expression = sympy.Poly([_to_sympy(c) for c in reversed(p.coefficients)], x)
    return int(expression.count_roots(_to_sympy(a), _to_sympy(b)))


def det_exact(matrix):
    if not matrix:
        return Fraction(1)
    A = sympy.Matrix([[_to_sympy(v) for v in row] for row in matrix])
    return _from_sympy(A.det())
