# -*- coding: utf-8 -*-
"""
===============================================================================
                                BOUNDS FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Upper bounds on the moment vanishing index sigma(L, p) and the moment
uniqueness index tau(L, p), and the certificate count of leading vanishing
moments of a concrete signal.

All bounds are counts: "sigma = s" means at most s leading moments
m_0, ..., m_{s-1} of a nonzero signal can vanish. Reports also give the
index convention s - 1.
===============================================================================
"""
from dataclasses import dataclass, field
from fractions import Fraction
import logging

import pandas as pd

from .exact import count_real_roots
from .inputs import Numerical_Inputs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularBound:
    value: int
    applicable: bool
    criteria: tuple = ()


@dataclass(frozen=True)
class BoundReport:
    p: int
    n: int
    alpha: int
    lambda_cap: int
    regular_bound: object
    regular_criteria: tuple
    general_bound: int
    fuchsian: bool
    lambda_: int
    fuchsian_bound: object
    tau_bound: int
    notes: tuple = field(default=())

    def table(self):
        """
        Function:
            The bounds as a DataFrame, in both conventions
        Outputs:
            DataFrame indexed by bound name with columns 'count' and 'last index'
        """
        rows = {'regular': self.regular_bound, 'general': self.general_bound,
                'fuchsian': self.fuchsian_bound, 'tau': self.tau_bound}
        table = pd.DataFrame({
            'count': [value if value is not None else 'inapplicable' for value in rows.values()],
            'last index': [value - 1 if value is not None else 'inapplicable' for value in rows.values()],
        }, index=list(rows))
        table.index.name = 'bound'
        return table

    def porcelain(self):
        """key=value lines for scripts"""
        values = {
            'p': self.p, 'n': self.n, 'alpha': self.alpha, 'Lambda': self.lambda_cap,
            'regular_bound': _text(self.regular_bound),
            'regular_criteria': ','.join(self.regular_criteria) or 'none',
            'general_bound': self.general_bound,
            'fuchsian': str(self.fuchsian).lower(),
            'lambda': self.lambda_,
            'fuchsian_bound': _text(self.fuchsian_bound),
            'tau_bound': self.tau_bound,
        }
        return ['{}={}'.format(key, value) for key, value in values.items()]


def _text(value):
    return 'inapplicable' if value is None else str(value)


#%%
class Bounds():
    def __init__(self, operator, inputs=None):
        self.operator = operator
        self.inputs = inputs or Numerical_Inputs()
        self.n = operator.order
        self.alpha = operator.alpha

#%%
# =============================================================================
# BOUNDS
# =============================================================================
    def sigma_bound_regular(self, p, interval=None, nodes=None):
        """
        Function:
            (p+2)n + alpha - 1, valid when p_n(xi_j) != 0 at some node
        Inputs:
            p           Number of interior discontinuities
            interval    Optional (a, b): the bound applies if p_n has no root there
            nodes       Optional actual nodes: the bound applies if p_n is nonzero at one
        Outputs:
            RegularBound; criteria names the conditions that hold
                'F2'        deg p_n < p + 2, so p_n cannot vanish at all p + 2 nodes
                'F1'        p_n has no root on the supplied interval
                'nodes'     p_n is nonzero at one of the supplied nodes
        """
        leading = self.operator.leading
        criteria = []
        if leading.degree < p + 2:
            criteria.append('F2')
        if interval is not None:
            a, b = (Fraction(v) for v in interval)
            if count_real_roots(leading, a, b) == 0:
                criteria.append('F1')
        if nodes is not None and any(leading(Fraction(xi)) != 0 for xi in nodes):
            criteria.append('nodes')
        value = (p + 2) * self.n + self.alpha - 1
        return RegularBound(value, bool(criteria), tuple(criteria))

    def sigma_bound_general(self, p):
        """max{n(p+2) - 1, Lambda} + alpha, valid for every operator"""
        return max(self.n * (p + 2) - 1, self.operator.lambda_cap()) + self.alpha

    def sigma_bound_fuchsian(self, p):
        """
        Function:
            max{(p+2)n, lambda} + d_n - n - 1 for operators Fuchsian at infinity
        Outputs:
            Integer, or None when the operator is not Fuchsian
        """
        analysis = self.operator.infinity_analysis()
        if not analysis.fuchsian:
            return None
        lambda_ = analysis.lambda_ or 0
        return max((p + 2) * self.n, lambda_) + int(self.operator.leading.degree) - self.n - 1

    def tau_bound(self, p):
        """sigma_bound_general at 2p, an upper bound on tau(L, p)"""
        return self.sigma_bound_general(2 * p)

    def report(self, p, interval=None, nodes=None):
        regular = self.sigma_bound_regular(p, interval, nodes)
        analysis = self.operator.infinity_analysis()
        notes = []
        lambda_cap = self.operator.lambda_cap()
        if lambda_cap == 0:
            notes.append('q_alpha has no positive integer zero, Lambda = 0 by convention')
        if analysis.approximate_exponents:
            notes.append('irrational exponents at infinity, estimates {}'.format(
                ['{:.6g}'.format(z) for z in analysis.approximate_exponents]))
        return BoundReport(p, self.n, self.alpha, lambda_cap,
                           regular.value if regular.applicable else None, regular.criteria,
                           self.sigma_bound_general(p), analysis.fuchsian, analysis.lambda_ or 0,
                           self.sigma_bound_fuchsian(p), self.tau_bound(p), tuple(notes))

#%%
# =============================================================================
# CERTIFICATE
# =============================================================================
    def vanishing_count(self, moments):
        """
        Function:
            Number of leading moments that vanish
        Inputs:
            moments     MomentSequence
        Outputs:
            Count r with m_0 = ... = m_{r-1} = 0. Floating moments count as zero
            when |m_k| <= "Zero tolerance" * max |m_k|
        """
        return vanishing_count(moments, self.inputs.zero_tolerance)


def vanishing_count(moments, tolerance=1e-10):
    values = list(moments.values)
    if moments.is_exact:
        threshold = 0
    else:
        scale = max((abs(v) for v in values), default=0.0)
        threshold = tolerance * scale
    count = 0
    for value in values:
        if abs(value) > threshold:
            return count
        count += 1
    logger.warning('All %d moments vanish, the vanishing count is truncated', count)
    return count
