# -*- coding: utf-8 -*-
"""
===============================================================================
                          MOMENT RECURRENCE FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
The moment recurrence of a piecewise solution of L f = 0:

    mu_k = sum_j sum_i a_{i,j} (-1)^j (i+k)_j m_{i-j+k} = eps_k

Evaluates the left-hand side on a moment sequence, extracts eps from moments,
generates moments forward from eps and a seed, and checks the identity
against jump data.
===============================================================================
"""
from dataclasses import dataclass
from fractions import Fraction
import logging

import pandas as pd

from .concomitant import Concomitant
from .errors import InsufficientMoments, InsufficientSeed, LeadingZero
from .exact import falling_factorial, format_rat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentSequence:
    """
    Moments m_0, ..., m_K. Indexing below zero returns zero; indexing past K
    raises InsufficientMoments.
    """
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))

    @property
    def K(self):
        return len(self.values) - 1

    @property
    def is_exact(self):
        return all(isinstance(v, (Fraction, int)) for v in self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        if k < 0:
            return Fraction(0) if self.is_exact else 0.0
        if k > self.K:
            raise InsufficientMoments('Moment m_{} requested, sequence stops at m_{}'.format(k, self.K))
        return self.values[k]

    def as_floats(self):
        return MomentSequence(tuple(float(v) for v in self.values))

    def perturbed(self, index, amount):
        values = list(self.values)
        values[index] = values[index] + amount
        return MomentSequence(tuple(values))


@dataclass(frozen=True)
class ResidualReport:
    """
    table           DataFrame indexed by k with the two sides and their difference
    max_residual    Largest absolute difference
    first_failing   First k whose difference exceeds the tolerance, None if none does
    """
    table: pd.DataFrame
    max_residual: object
    first_failing: object

    @property
    def passed(self):
        return self.first_failing is None


def residual_report(left, right, tolerance=0, labels=('lhs', 'rhs')):
    """
    Function:
        Compares two sequences index by index
    Inputs:
        left, right     Sequences of equal length
        tolerance       Largest accepted absolute difference (0 for exact checks)
        labels          Column names of the two sides
    Outputs:
        ResidualReport
    """
    residuals = [a - b for a, b in zip(left, right)]
    first_failing = next((k for k, r in enumerate(residuals) if abs(r) > tolerance), None)
    table = pd.DataFrame({labels[0]: [_cell(v) for v in left],
                          labels[1]: [_cell(v) for v in right],
                          'residual': [_cell(v) for v in residuals]})
    table.index.name = 'k'
    max_residual = max((abs(r) for r in residuals), default=0)
    return ResidualReport(table, max_residual, first_failing)


def _cell(value):
    return format_rat(value) if isinstance(value, Fraction) else value


#%%
class Moment_Recurrence():
    def __init__(self, operator):
        self.operator = operator
        self.alpha = operator.alpha
        self.q = operator.q_polys()

#%%
# =============================================================================
# LEFT-HAND SIDE
# =============================================================================
    def moment_form(self, moments, k):
        """
        Function:
            mu_k by the double sum over the coefficient table
        Inputs:
            moments     MomentSequence
            k           Index with 0 <= k <= K - alpha
        Outputs:
            mu_k
        """
        if k + self.alpha > moments.K:
            raise InsufficientMoments('mu_{} needs m_{}, sequence stops at m_{}'.format(
                k, k + self.alpha, moments.K))
        total = 0
        for j, p in enumerate(self.operator.coeffs):
            for i, a in enumerate(p.coefficients):
                if a == 0:
                    continue
                total = total + a * (-1) ** j * falling_factorial(i + k, j) * moments[i - j + k]
        return total

    def moment_form_grouped(self, moments, k):
        """mu_k as sum_l q_l(k) m_{k+l}"""
        if k + self.alpha > moments.K:
            raise InsufficientMoments('mu_{} needs m_{}, sequence stops at m_{}'.format(
                k, k + self.alpha, moments.K))
        return sum((q(k) * moments[k + ell] for ell, q in self.q.items()), 0 * moments[0])

    def epsilon_from_moments(self, moments):
        """
        Function:
            mu_0, ..., mu_{K - alpha}
        Outputs:
            List; by the moment recurrence this is the eps sequence of the signal
        """
        last = moments.K - self.alpha
        if last < 0:
            raise InsufficientMoments('At least {} moments are needed'.format(self.alpha + 1))
        return [self.moment_form(moments, k) for k in range(last + 1)]

#%%
# =============================================================================
# FORWARD GENERATION
# =============================================================================
    def generate_moments(self, eps, seed, K, k0=None):
        """
        Function:
            Solves the recurrence for its highest moment,
            m_{k+alpha} = (eps_k - sum_{l<alpha} q_l(k) m_{k+l}) / q_alpha(k)
        Inputs:
            eps         eps_0, eps_1, ... at least through eps_{K - alpha}
            seed        Leading moments m_0, m_1, ...; kept as given
            K           Index of the last moment wanted
            k0          First k at which the recurrence may be divided by
                        q_alpha(k); defaults to Lambda + 1
        Outputs:
            MomentSequence m_0..m_K
        """
        alpha = self.alpha
        q_alpha = self.q[alpha]
        if k0 is None:
            k0 = self.operator.lambda_cap() + 1
        if len(seed) < k0 + alpha:
            raise InsufficientSeed('Seed holds {} moments, {} are needed to start at k = {}'.format(
                len(seed), k0 + alpha, k0))
        last = K - alpha
        for k in range(k0, last + 1):
            if q_alpha(k) == 0:
                raise LeadingZero('q_alpha vanishes at k = {}, forward generation is undefined'.format(k),
                                  index=k)
        if len(eps) <= last and len(seed) < K + 1:
            raise InsufficientMoments('eps_{} is needed, {} values given'.format(last, len(eps)))
        values = list(seed[:K + 1])
        lower = [(ell, q) for ell, q in self.q.items() if ell < alpha]
        for k in range(max(k0, len(values) - alpha), last + 1):
            known = sum(q(k) * _moment(values, k + ell) for ell, q in lower)
            values.append((eps[k] - known) / q_alpha(k))
        logger.debug('Generated moments m_%d..m_%d', len(seed), K)
        return MomentSequence(tuple(values))

#%%
# =============================================================================
# VERIFICATION
# =============================================================================
    def verify_recurrence(self, moments, jumps, tolerance=0):
        """
        Function:
            Compares mu_k from the moments with eps_k from the jump data for
            every computable k
        Inputs:
            moments     MomentSequence
            jumps       JumpData of the same signal
            tolerance   0 for exact data
        Outputs:
            ResidualReport with columns mu, eps, residual
        """
        mu = self.epsilon_from_moments(moments)
        eps = Concomitant(self.operator).epsilon_sequence(jumps, len(mu))
        report = residual_report(mu, eps, tolerance, labels=('mu', 'eps'))
        if not report.passed:
            logger.info('Moment recurrence fails first at k = %s', report.first_failing)
        return report


def _moment(values, index):
    if index < 0:
        return 0
    return values[index]
