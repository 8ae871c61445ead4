# -*- coding: utf-8 -*-
"""
===============================================================================
                        MOMENT GENERATING FUNCTION FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
I_f(z) = sum_k m_k z^(-k-1) as a truncated Laurent series at infinity, the
formal action of L on it, and the check of L I_f = R_f with R_f the rational
function fixed by the jump data.
===============================================================================
"""
from dataclasses import dataclass
import math
import logging

from .concomitant import Concomitant
from .errors import InsufficientMoments
from .exact import LaurentTail, Poly, RatFun
from .momrec import residual_report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OperatorSeries:
    """
    tail        z^(-t) part of L applied to a series, exact through tail.truncation_order
    polynomial  z^0, z^1, ... part, present when alpha >= 1
    """
    tail: LaurentTail
    polynomial: Poly


@dataclass(frozen=True)
class MGFReport:
    residuals: object
    rhs: RatFun
    polynomial_part: Poly


def moment_series(moments):
    """sum_{k=0}^{K} m_k z^(-k-1), truncated at K+1"""
    return LaurentTail(1, tuple(moments.values), moments.K + 1)


#%%
class Generating_Function():
    def __init__(self, operator):
        self.operator = operator
        self.alpha = operator.alpha

    def apply_operator_series(self, series):
        """
        Function:
            sum_j p_j(z) s^(j)(z), term by term
        Inputs:
            series      LaurentTail
        Outputs:
            OperatorSeries; differentiating j times shifts the known order up
            by j and multiplying by p_j costs deg p_j, so the tail is exact
            through truncation_order - alpha
        """
        order = series.truncation_order - self.alpha
        tail = LaurentTail.from_terms({}, order)
        polynomial = Poly()
        derivative = series
        for j, p in enumerate(self.operator.coeffs):
            if j > 0:
                derivative = derivative.derivative()
            if p.is_zero:
                continue
            part, nonnegative = derivative.times_polynomial(p)
            tail = tail + LaurentTail.from_terms(part.terms(), order)
            polynomial = polynomial + nonnegative
        return OperatorSeries(LaurentTail.from_terms(tail.terms(), order), polynomial)

    def rhs_rational(self, jumps):
        """
        Function:
            R_f = sum_j sum_l l! c_{l,j} / (z - xi_j)^(l+1)
        Outputs:
            RatFun whose z^(-k-1) coefficient is eps_k
        """
        model = Concomitant(self.operator).epsilon_model(jumps)
        terms = tuple(tuple(math.factorial(ell) * c for ell, c in enumerate(row)) for row in model.coeffs)
        return RatFun(model.nodes, terms)

    def verify_mgf_ode(self, moments, jumps, K, tolerance=0):
        """
        Function:
            Compares L I_f with R_f coefficient by coefficient, z^-1 .. z^-(K+1)
        Inputs:
            moments     MomentSequence, at least K + alpha + 1 values
            jumps       JumpData
            K           Last index k compared
            tolerance   Largest accepted coefficient difference, 0 for exact data
        Outputs:
            MGFReport; residuals is a ResidualReport with columns 'L I_f' and 'R_f'
        """
        if moments.K < K + self.alpha:
            raise InsufficientMoments('Order {} needs moments through m_{}, got m_{}'.format(
                K, K + self.alpha, moments.K))
        result = self.apply_operator_series(moment_series(moments))
        left = [result.tail.coefficient(k + 1) for k in range(K + 1)]
        rhs = self.rhs_rational(jumps)
        right = rhs.expansion(K + 1)
        if not result.polynomial.is_zero:
            logger.info('L I_f has polynomial part %s, not compared', result.polynomial)
        report = residual_report(left, right, tolerance, labels=('L I_f', 'R_f'))
        return MGFReport(report, rhs, result.polynomial)
