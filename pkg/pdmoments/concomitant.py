# -*- coding: utf-8 -*-
"""
===============================================================================
                            CONCOMITANT FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
The bilinear concomitant P_L(u, v) of an operator, Green's formula, the
inhomogeneity eps_k of the moment recurrence computed from jump data, and the
exact linear map between the jump vector at a node and the power-sum
coefficients c_0, ..., c_{n-1} of that node.
===============================================================================
"""
from dataclasses import dataclass
import math
import logging

from .errors import SingularNode
from .exact import Poly, det_exact
from .powersums import PowerSumModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JumpData:
    """
    nodes       xi_0 < xi_1 < ... < xi_{p+1}; the first and last are the
                endpoints a and b of the support
    jumps       jumps[j][i] = f^(i)(xi_j+) - f^(i)(xi_j-), with f = 0 outside [a, b]
    """
    nodes: tuple
    jumps: tuple

    def __post_init__(self):
        nodes = tuple(self.nodes)
        jumps = tuple(tuple(vector) for vector in self.jumps)
        if len(nodes) != len(jumps):
            raise ValueError('One jump vector is needed per node')
        if len(nodes) < 2:
            raise ValueError('Jump data needs at least the two endpoints')
        if any(b <= a for a, b in zip(nodes, nodes[1:])):
            raise ValueError('Nodes must be strictly increasing: {}'.format(nodes))
        if len({len(vector) for vector in jumps}) != 1:
            raise ValueError('All jump vectors must have the same length')
        object.__setattr__(self, 'nodes', nodes)
        object.__setattr__(self, 'jumps', jumps)

    @property
    def order(self):
        return len(self.jumps[0])

    @property
    def p(self):
        return len(self.nodes) - 2

    @classmethod
    def zeros(cls, nodes, order):
        return cls(tuple(nodes), tuple((0,) * order for _ in nodes))


@dataclass(frozen=True)
class CMatrix:
    """matrix[l][r] maps the jump vector at node onto c_l"""
    node: object
    matrix: tuple

    def apply(self, jump):
        return tuple(sum((m * d for m, d in zip(row, jump)), 0 * self.node) for row in self.matrix)

    def determinant(self):
        return det_exact([list(row) for row in self.matrix])


#%%
class Concomitant():
    def __init__(self, operator):
        self.operator = operator
        self.order = operator.order
        self.adjoint = operator.adjoint()

    def _check_order(self, jumps):
        if jumps.order != self.order:
            raise ValueError('Jump vectors have length {}, the operator has order {}'.format(
                jumps.order, self.order))

#%%
# =============================================================================
# CONCOMITANT AND GREEN'S FORMULA
# =============================================================================
    def concomitant_poly(self, u, v):
        """
        Function:
            P_L(u, v) = sum_r u^(r) sum_s (-1)^s (p_{r+s+1} v)^(s) as a polynomial
        Inputs:
            u, v        Poly
        Outputs:
            Poly
        """
        n = self.order
        result = Poly()
        for r in range(n):
            row = Poly()
            for s in range(n - r):
                row = row + (self.operator.coeffs[r + s + 1] * v).derivative(s) * ((-1) ** s)
            result = result + u.derivative(r) * row
        return result

    def concomitant_eval(self, u, v, x):
        return self.concomitant_poly(u, v)(x)

    def greens_residual(self, u, v, a, b):
        """
        Function:
            int_a^b [v Lu - u L*v] dx - (P_L(u, v)(b) - P_L(u, v)(a)), exactly
        Outputs:
            Rational, always zero
        """
        if not a < b:
            raise ValueError('Green interval needs a < b, got [{}, {}]'.format(a, b))
        integrand = v * self.operator.apply(u) - u * self.adjoint.apply(v)
        boundary = self.concomitant_poly(u, v)
        return integrand.integrate(a, b) - (boundary(b) - boundary(a))

#%%
# =============================================================================
# EPSILON FROM JUMP DATA
# =============================================================================
    def epsilon_direct(self, jumps, k):
        """
        Function:
            eps_k = sum_j [P_L(f, x^k)(xi_j+) - P_L(f, x^k)(xi_j-)]
        Inputs:
            jumps       JumpData
            k           Index
        Outputs:
            eps_k
        Notes:
            p_m and x^k are continuous at every node, so only the jumps of f
            and its derivatives survive the difference
        """
        self._check_order(jumps)
        n = self.order
        power = Poly.monomial(k)
        rows = []
        for r in range(n):
            row = Poly()
            for s in range(n - r):
                row = row + (self.operator.coeffs[r + s + 1] * power).derivative(s) * ((-1) ** s)
            rows.append(row)
        total = 0
        for xi, jump in zip(jumps.nodes, jumps.jumps):
            for r, delta in enumerate(jump):
                if delta != 0:
                    total = total + delta * rows[r](xi)
        return total

    def epsilon_sequence(self, jumps, count):
        return [self.epsilon_direct(jumps, k) for k in range(count)]

#%%
# =============================================================================
# JUMP VECTORS AND POWER-SUM COEFFICIENTS
# =============================================================================
    def jump_to_c(self, xi):
        """
        Function:
            Matrix M(L, xi) taking the jump vector at xi to its power-sum
            coefficients
        Outputs:
            CMatrix with M[l][r] = sum_{s=l}^{n-1-r} (-1)^s C(s, l) p_{r+s+1}^(s-l)(xi)
        Notes:
            Entries with l + r > n - 1 vanish and the antidiagonal holds
            (-1)^l p_n(xi), hence |det M| = |p_n(xi)|^n
        """
        n = self.order
        matrix = []
        for ell in range(n):
            row = []
            for r in range(n):
                entry = 0 * xi
                for s in range(ell, n - r):
                    entry = entry + ((-1) ** s * math.comb(s, ell)
                                     * self.operator.coeffs[r + s + 1].derivative(s - ell)(xi))
                row.append(entry)
            matrix.append(tuple(row))
        return CMatrix(xi, tuple(matrix))

    def c_to_jump(self, xi, c, tolerance=None):
        """
        Function:
            Inverts jump_to_c by back-substitution along the antidiagonal
        Inputs:
            xi          Node
            c           Coefficients c_0, ..., c_{n-1}
            tolerance   Floating mode only: |p_n(xi)| at or below this is a root
        Outputs:
            Tuple with the jump vector
        """
        leading = self.operator.leading(xi)
        if leading == 0 or (tolerance is not None and abs(leading) <= tolerance):
            raise SingularNode('Node {} is a root of p_n, jumps there are not determined'.format(xi),
                               node=xi)
        n = self.order
        matrix = self.jump_to_c(xi).matrix
        jump = [None] * n
        for ell in range(n - 1, -1, -1):
            r = n - 1 - ell
            known = sum((matrix[ell][t] * jump[t] for t in range(r)), 0 * xi)
            jump[r] = (c[ell] - known) / matrix[ell][r]
        return tuple(jump)

    def epsilon_model(self, jumps):
        """
        Function:
            eps_k as a generalised power sum over the nodes of the jump data
        Outputs:
            PowerSumModel of order n
        """
        self._check_order(jumps)
        coeffs = tuple(self.jump_to_c(xi).apply(jump) for xi, jump in zip(jumps.nodes, jumps.jumps))
        return PowerSumModel(jumps.nodes, self.order, coeffs)
