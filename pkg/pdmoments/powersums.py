# -*- coding: utf-8 -*-
"""
===============================================================================
                            POWER SUMS FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Generalised power sums s_k = sum_j sum_l c_{l,j} (k)_l xi_j^(k-l): evaluation,
the annihilating recurrence prod_j (S - xi_j)^n, recovery of the coefficients
from samples (confluent Vandermonde system) and of the nodes from samples
(Hankel fit of the annihilating recurrence), and the generating function.
===============================================================================
"""
from dataclasses import dataclass, field
from fractions import Fraction
import math
import logging

import numpy as np
from numpy.polynomial import Polynomial
from scipy import linalg, optimize
from scipy.cluster import hierarchy

from .errors import (IllConditioned, InsufficientMoments, SingularSystem,
                     WrongModelOrder)
from .exact import Poly, RatFun, power_term, solve_exact
from .inputs import Numerical_Inputs

logger = logging.getLogger(__name__)


def is_exact(values):
    return all(isinstance(v, (Fraction, int)) for v in values)


@dataclass(frozen=True)
class PowerSumModel:
    """
    nodes       p+2 pairwise distinct scalars xi_j
    order       n, the number of confluent terms per node
    coeffs      coeffs[j][l] = c_{l,j}, shape (p+2) x n
    """
    nodes: tuple
    order: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(tuple(row) for row in self.coeffs)
        if len(coeffs) != len(self.nodes) or any(len(row) != self.order for row in coeffs):
            raise ValueError('Coefficient array must have shape ({}, {})'.format(
                len(self.nodes), self.order))
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError('Power sum nodes must be pairwise distinct')
        object.__setattr__(self, 'nodes', tuple(self.nodes))
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def size(self):
        return self.order * len(self.nodes)

    @property
    def is_zero(self):
        return all(c == 0 for row in self.coeffs for c in row)

    def samples(self, count):
        return [eval_power_sum(self, k) for k in range(count)]


#%%
# =============================================================================
# EVALUATION AND THE ANNIHILATING RECURRENCE
# =============================================================================
def eval_power_sum(model, k):
    """
    Function:
        s_k of a generalised power sum
    Inputs:
        model       PowerSumModel
        k           Index, k >= 0
    Outputs:
        Exact for rational models, floating otherwise
    """
    total = 0
    for xi, row in zip(model.nodes, model.coeffs):
        for ell, c in enumerate(row):
            if c == 0:
                continue
            total = total + c * power_term(xi, k, ell)
    return total


def char_recurrence(model):
    """
    Function:
        Coefficients of the monic polynomial prod_j (z - xi_j)^n
    Outputs:
        List of length n(p+2)+1, lowest power first; the samples satisfy
        sum_t coeff_t s_{k+t} = 0 for every k >= 0
    """
    roots = [xi for xi in model.nodes for _ in range(model.order)]
    if is_exact(model.nodes):
        return list(Poly.from_roots(roots).coefficients)
    return list(np.polynomial.polynomial.polyfromroots(roots))


def apply_recurrence(coefficients, samples, k):
    return sum(c * samples[k + t] for t, c in enumerate(coefficients))


def leading_zero_count(samples):
    count = 0
    for s in samples:
        if s != 0:
            break
        count += 1
    return count


def generating_function(model):
    """
    Function:
        g(z) = sum_k s_k z^(-k-1) as a partial-fraction rational function
    Outputs:
        RatFun with coefficient l! c_{l,j} on 1/(z - xi_j)^(l+1)
    """
    terms = tuple(tuple(math.factorial(ell) * c for ell, c in enumerate(row))
                  for row in model.coeffs)
    return RatFun(model.nodes, terms)


def confluent_vandermonde(nodes, order, count):
    """
    Function:
        Matrix of the basis (k)_l xi_j^(k-l), rows k = 0..count-1, columns
        ordered node by node, l = 0..order-1 within each node
    """
    return [[power_term(xi, k, ell) for xi in nodes for ell in range(order)]
            for k in range(count)]


@dataclass(frozen=True)
class NodeEstimate:
    nodes: tuple
    multiplicities: tuple
    rank: int
    condition: float
    residual: float
    max_imaginary: float
    recurrence: tuple = field(default=())


#%%
class Power_Sums():
    def __init__(self, inputs=None):
        self.inputs = inputs or Numerical_Inputs()

#%%
# =============================================================================
# COEFFICIENT RECOVERY
# =============================================================================
    def solve_coeffs(self, nodes, order, samples):
        """
        Function:
            Recovers the coefficients c_{l,j} from samples at known nodes
        Inputs:
            nodes       Pairwise distinct nodes
            order       n
            samples     s_0, s_1, ...: exactly n(p+2) of them in exact mode,
                        at least that many in floating mode (least squares)
        Outputs:
            PowerSumModel
        """
        nodes = tuple(nodes)
        size = order * len(nodes)
        if len(set(nodes)) != len(nodes):
            raise SingularSystem('Nodes are not pairwise distinct: {}'.format(nodes))
        if len(samples) < size:
            raise InsufficientMoments('{} samples given, {} needed'.format(len(samples), size))
        if is_exact(nodes) and is_exact(samples):
            matrix = confluent_vandermonde(nodes, order, size)
            solution = solve_exact(matrix, list(samples[:size]))
            model = PowerSumModel(nodes, order, _reshape(solution, len(nodes), order))
            for k in range(size, len(samples)):
                if eval_power_sum(model, k) != samples[k]:
                    raise WrongModelOrder('Sample {} does not fit the model'.format(k))
            return model
        matrix = np.array(confluent_vandermonde([float(x) for x in nodes], order, len(samples)),
                          dtype=float)
        solution = linalg.lstsq(matrix, np.array([float(s) for s in samples]))[0]
        return PowerSumModel(nodes, order, _reshape(list(solution), len(nodes), order))

#%%
# =============================================================================
# NODE RECOVERY
# =============================================================================
    def recover_nodes(self, samples, order, p):
        """
        Function:
            Estimates the nodes of a power sum from its samples
        Inputs:
            samples     At least 2n(p+2) samples
            order       n
            p           Number of interior nodes; the model has p+2 nodes
        Outputs:
            NodeEstimate
        Notes:
            The Hankel rank gives the number of fundamental solutions present,
            so fewer nodes than p+2 are detected. Roots of the fitted
            recurrence are clustered and each cluster polished by Newton's
            method on the derivative of matching order.
        """
        samples = np.array([float(s) for s in samples])
        size = order * (p + 2)
        count = len(samples)
        if count < 2 * size:
            raise InsufficientMoments('Node recovery needs {} samples, got {}'.format(2 * size, count))
        scale = np.max(np.abs(samples))
        if scale == 0:
            raise WrongModelOrder('All samples vanish: zero model', diagnosis='zero model')
        samples = samples / scale
#   Rank of the Hankel matrix of the samples
        hankel = linalg.hankel(samples[:count - size], samples[count - size - 1:count - 1])
        singular_values = linalg.svdvals(hankel)
        rank = int(np.sum(singular_values > self.inputs.rank_tolerance * singular_values[0]))
        logger.debug('Hankel singular values %s, rank %d', singular_values, rank)
        if rank == 0:
            raise WrongModelOrder('Hankel matrix has rank zero: zero model', diagnosis='zero model')
#   Fit the annihilating recurrence of order rank
        fit_matrix = linalg.hankel(samples[:count - rank], samples[count - rank - 1:count - 1])
        rhs = -samples[rank:]
        recurrence = linalg.lstsq(fit_matrix, rhs)[0]
        condition = float(np.linalg.cond(fit_matrix))
        if condition > self.inputs.condition_threshold:
            raise IllConditioned('Hankel condition estimate {:.3e} exceeds {:.3e}'.format(
                condition, self.inputs.condition_threshold), condition=condition)
        residual = float(linalg.norm(fit_matrix @ recurrence - rhs) / max(linalg.norm(rhs), 1.0))
        if residual > self.inputs.residual_tolerance:
            raise WrongModelOrder('Recurrence of order {} leaves residual {:.3e}: more than {} nodes?'.format(
                rank, residual, p + 2), diagnosis='order too small')
        characteristic = Polynomial(np.append(recurrence, 1.0))
        roots = characteristic.roots()
#   Cluster the roots; a full rank means p+2 nodes of multiplicity n
        if len(roots) == 1:
            clusters = [roots]
        else:
            points = np.column_stack([roots.real, roots.imag])
            tree = hierarchy.linkage(points, method='single')
            if rank == size:
                labels = hierarchy.fcluster(tree, p + 2, criterion='maxclust')
            else:
                spread = max(np.ptp(roots.real), np.ptp(roots.imag), 1e-12)
                labels = hierarchy.fcluster(tree, self.inputs.node_gap * spread, criterion='distance')
            clusters = [roots[labels == label] for label in np.unique(labels)]
        if len(clusters) > p + 2 or max(len(cluster) for cluster in clusters) > order:
            nodes, multiplicities = self._merge_clusters(tree, roots, samples, order, p)
        else:
            nodes = [self._polish(characteristic, np.mean(cluster), len(cluster)) for cluster in clusters]
            multiplicities = [len(cluster) for cluster in clusters]
        order_index = np.argsort([z.real for z in nodes])
        nodes = [nodes[i] for i in order_index]
        multiplicities = [multiplicities[i] for i in order_index]
        max_imaginary = float(max(abs(z.imag) for z in nodes))
        logger.info('Recovered %d nodes (rank %d, condition %.3e)', len(nodes), rank, condition)
        return NodeEstimate(tuple(float(z.real) for z in nodes), tuple(multiplicities), rank,
                            condition, residual, max_imaginary, tuple(recurrence * 1.0))

    def _merge_clusters(self, tree, roots, samples, order, p):
        """
        Function:
            Groups roots into at most p+2 nodes when the rank estimate left
            multiple roots split apart
        Inputs:
            tree        Single-linkage tree of the roots
            roots       Roots of the fitted recurrence
            samples     Normalised samples
            order       n, the largest multiplicity of a node
            p           Number of interior nodes
        Outputs:
            (nodes, multiplicities) of the first grouping, fewest clusters
            first, whose refined nodes fit the samples with a full model of
            order n
        """
        for count in range(-(-len(roots) // order), p + 3):
            labels = hierarchy.fcluster(tree, count, criterion='maxclust')
            clusters = [roots[labels == label] for label in np.unique(labels)]
            if max(len(cluster) for cluster in clusters) > order:
                continue
            centers = sorted(float(np.mean(cluster).real) for cluster in clusters)
            if len(set(centers)) != len(centers):
                continue
            nodes = self.refine_nodes(samples, centers, order)
            matrix = np.array(confluent_vandermonde(list(nodes), order, len(samples)), dtype=float)
            solution = linalg.lstsq(matrix, samples)[0]
            residual = float(linalg.norm(matrix @ solution - samples) / linalg.norm(samples))
            logger.debug('%d clusters fit with residual %.3e', len(clusters), residual)
            if residual <= self.inputs.residual_tolerance:
                sizes = [len(cluster) for cluster in sorted(clusters, key=lambda c: float(np.mean(c).real))]
                return [complex(x) for x in nodes], sizes
        raise WrongModelOrder('{} recurrence roots do not group into at most {} nodes'.format(
            len(roots), p + 2), diagnosis='order too small')

    def _polish(self, characteristic, start, multiplicity, iterations=8):
#   A root of multiplicity m is a simple root of the (m-1)-th derivative
        target = characteristic.deriv(multiplicity - 1) if multiplicity > 1 else characteristic
        slope = target.deriv()
        z = complex(start)
        for _ in range(iterations):
            d = slope(z)
            if d == 0:
                break
            step = target(z) / d
            if not np.isfinite(step) or abs(step) > 1e-2 * max(1.0, abs(z)):
                break
            z = z - step
        return z

    def refine_nodes(self, samples, nodes, order):
        """
        Function:
            Polishes node estimates by nonlinear least squares, the
            coefficients being eliminated by a linear solve at every step
        Inputs:
            samples     Floating samples
            nodes       Initial node estimates
            order       n
        Outputs:
            Tuple of refined nodes (the initial ones if the fit does not improve)
        """
        samples = np.array([float(s) for s in samples])

        def residual(x):
            matrix = np.array(confluent_vandermonde(list(x), order, len(samples)), dtype=float)
            solution = linalg.lstsq(matrix, samples)[0]
            return matrix @ solution - samples

        start = np.array(nodes, dtype=float)
        initial = linalg.norm(residual(start))
        result = optimize.least_squares(residual, start, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        if linalg.norm(result.fun) <= initial and len(set(result.x)) == len(start):
            logger.debug('Node refinement reduced the residual from %.3e to %.3e',
                         initial, linalg.norm(result.fun))
            return tuple(float(x) for x in np.sort(result.x))
        return tuple(nodes)


def _reshape(values, rows, columns):
    return tuple(tuple(values[j * columns + ell] for ell in range(columns)) for j in range(rows))
