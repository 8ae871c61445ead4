# -*- coding: utf-8 -*-
"""
===============================================================================
                            RECONSTRUCTION FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Recovers the discontinuity nodes and jump vectors of a piecewise solution of a
known operator from finitely many of its moments, then rebuilds the signal
piece by piece.
    * recover_jumps(...)
        moments -> mu_k -> nodes (Hankel fit) -> coefficients -> jump vectors
    * rebuild_signal(...)
        jump vectors -> power-series pieces -> samples on a grid
    * residual_report(...)
        consistency of an estimate with the moments it came from
===============================================================================
"""
from dataclasses import dataclass, field
import datetime
import logging

import numpy as np
import pandas as pd

from .concomitant import Concomitant, JumpData
from .corpus import check_expansion_point, power_series_solution, SeriesPiece, tail_estimate
from .errors import InsufficientMoments, PDMomentsError, SingularNode, WrongModelOrder
from .exact import falling_factorial
from .inputs import Numerical_Inputs
from .momrec import Moment_Recurrence
from .powersums import NodeEstimate, Power_Sums

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JumpEstimate:
    """
    jumps           Recovered JumpData (floating)
    nodes           NodeEstimate from the Hankel fit, before refinement
    fit_residual    Relative misfit of the fitted power sum to mu
    """
    jumps: JumpData
    nodes: NodeEstimate
    fit_residual: float
    refined: bool = False

    @property
    def condition(self):
        return self.nodes.condition

    @property
    def rank(self):
        return self.nodes.rank


@dataclass(frozen=True)
class ReconstructionReport:
    table: pd.DataFrame
    max_eps_residual: float
    max_moment_residual: object
    notes: tuple = field(default=())


#%%
class Reconstruction():
    def __init__(self, operator, inputs=None):
        self.operator = operator
        self.inputs = inputs or Numerical_Inputs()
        self.order = operator.order
        self.alpha = operator.alpha
        self.concomitant = Concomitant(operator)
        self.recurrence = Moment_Recurrence(operator)
        self.power_sums = Power_Sums(self.inputs)

    def required_moments(self, p_max):
        """2 n (p_max + 2) + max(alpha, 0): the moments consumed by recover_jumps"""
        return 2 * self.order * (p_max + 2) + max(self.alpha, 0)

#%%
# =============================================================================
# JUMP RECOVERY
# =============================================================================
    def recover_jumps(self, moments, p_max):
        """
        Function:
            Estimates nodes and jump vectors from moments
        Inputs:
            moments     MomentSequence (converted to floats)
            p_max       Largest number of interior nodes allowed
        Outputs:
            JumpEstimate
        """
        timer_start = datetime.datetime.now()
        moments = moments.as_floats()
        required = self.required_moments(p_max)
        if len(moments) < required:
            raise InsufficientMoments('Reconstruction with p_max = {} needs {} moments, got {}'.format(
                p_max, required, len(moments)))
        mu = np.array(self.recurrence.epsilon_from_moments(moments), dtype=float)
        reference = self._mu_reference(moments, len(mu))
        if np.max(np.abs(mu)) <= self.inputs.zero_tolerance * reference:
            raise WrongModelOrder('mu vanishes to tolerance, no jumps to recover: zero model',
                                  diagnosis='zero model')
        estimate = self.power_sums.recover_nodes(mu, self.order, p_max)
        nodes = estimate.nodes
        refined = False
        if self.inputs.refine_nodes:
            nodes = self.power_sums.refine_nodes(mu, nodes, self.order)
            refined = nodes != estimate.nodes
        for xi in nodes:
            if abs(float(self.operator.leading(xi))) <= self.inputs.singular_node_tolerance:
                raise SingularNode('Recovered node {:.12g} is a root of p_n'.format(xi), node=xi)
        model = self.power_sums.solve_coeffs(nodes, self.order, list(mu))
        jumps = tuple(self.concomitant.c_to_jump(xi, c, self.inputs.singular_node_tolerance)
                      for xi, c in zip(model.nodes, model.coeffs))
        fitted = np.array(model.samples(len(mu)), dtype=float)
        fit_residual = float(np.linalg.norm(fitted - mu) / np.linalg.norm(mu))
        timer_end = datetime.datetime.now()
        logger.info('Time taken for jump recovery: %.3f seconds, %d nodes, fit residual %.3e',
                    (timer_end - timer_start).total_seconds(), len(nodes), fit_residual)
        return JumpEstimate(JumpData(tuple(nodes), jumps), estimate, fit_residual, refined)

    def _mu_reference(self, moments, count):
#   Size of the terms summed into mu_k, for a relative zero test
        largest = max(abs(v) for v in moments.values)
        weight = max(sum(abs(float(a)) * falling_factorial(i + k, j)
                         for j, p in enumerate(self.operator.coeffs)
                         for i, a in enumerate(p.coefficients))
                     for k in range(count))
        return largest * weight

#%%
# =============================================================================
# SIGNAL REBUILD
# =============================================================================
    def series_pieces(self, jumps, degree=None):
        """
        Function:
            Power-series pieces between consecutive nodes; each starts from the
            previous piece's right limit plus the jump at its left node
        Outputs:
            List of SeriesPiece
        """
        degree = degree or self.inputs.series_degree
        state = np.zeros(self.order)
        pieces = []
        for start, end, jump in zip(jumps.nodes, jumps.nodes[1:], jumps.jumps):
            check_expansion_point(self.operator, start, end)
            state = state + np.array([float(d) for d in jump])
            b = power_series_solution(self.operator, start, state, degree)
            piece = SeriesPiece(float(start), float(end), b,
                                tail_estimate(b, self.order, float(end) - float(start)))
            pieces.append(piece)
            state = np.array(piece.derivatives(float(end), self.order))
        return pieces

    def rebuild_signal(self, jumps, grid, degree=None):
        """
        Function:
            Samples of the signal described by jump data
        Inputs:
            jumps       JumpData, endpoints included
            grid        Abscissae
            degree      Series truncation degree
        Outputs:
            numpy array; zero outside [a, b]
        """
        grid = np.asarray(grid, dtype=float)
        samples = np.zeros(len(grid))
        pieces = self.series_pieces(jumps, degree)
        for index, piece in enumerate(pieces):
            last = index == len(pieces) - 1
            inside = (grid >= piece.start) & ((grid <= piece.end) if last else (grid < piece.end))
            samples[inside] = piece(grid[inside])
        return samples

#%%
# =============================================================================
# DIAGNOSTICS
# =============================================================================
    def residual_report(self, moments, estimate):
        """
        Function:
            Checks an estimate against the moments it came from
        Inputs:
            moments     MomentSequence given
            estimate    JumpEstimate or JumpData
        Outputs:
            ReconstructionReport; the table holds mu, the eps of the estimate and,
            when forward generation applies, the regenerated moments
        """
        jumps = estimate.jumps if isinstance(estimate, JumpEstimate) else estimate
        moments = moments.as_floats()
        mu = np.array(self.recurrence.epsilon_from_moments(moments), dtype=float)
        eps = np.array(self.concomitant.epsilon_sequence(jumps, len(mu)), dtype=float)
        table = pd.DataFrame({'mu': mu, 'eps': eps, 'eps residual': mu - eps})
        table.index.name = 'k'
        notes = []
        max_moment_residual = None
        try:
            k0 = self.operator.lambda_cap() + 1
            seed = list(moments.values[:max(k0 + self.alpha, 0)])
            regenerated = self.recurrence.generate_moments(list(eps), seed, moments.K, k0)
            difference = np.array(regenerated.values, dtype=float) - np.array(moments.values)
            max_moment_residual = float(np.max(np.abs(difference)))
            moment_table = pd.DataFrame({'moment': moments.values, 'regenerated': regenerated.values,
                                         'moment residual': difference})
            table = table.join(moment_table, how='outer')
        except PDMomentsError as error:
            notes.append('moments not regenerated: {}'.format(error))
        max_eps_residual = float(np.max(np.abs(mu - eps))) if len(mu) else 0.0
        return ReconstructionReport(table, max_eps_residual, max_moment_residual, tuple(notes))
