#!/usr/bin/env python
u"""
test_reconstruct.py
Tests recovery of nodes and jumps from moments and the rebuilt signals
"""
from fractions import Fraction

import numpy as np
import pytest

from pdmoments.concomitant import JumpData
from pdmoments.corpus import PiecewiseSpec
from pdmoments.diffop import DiffOperator
from pdmoments.errors import InsufficientMoments, SingularNode, WrongModelOrder
from pdmoments.exact import Poly
from pdmoments.inputs import Numerical_Inputs
from pdmoments.reconstruct import Reconstruction

STEP_NODES = (0.0, 0.5, 1.0)
STEP_JUMPS = ((1.0, 0.0), (-0.5, 1.0), (-1.0, -1.0))


def jump_error(estimate, truth):
    return max(abs(float(a) - float(b)) for x, y in zip(estimate.jumps, truth.jumps) for a, b in zip(x, y))


def node_error(estimate, truth):
    return max(abs(float(a) - float(b)) for a, b in zip(estimate.nodes, truth.nodes))


#-- PURPOSE: moments consumed by a reconstruction
def test_required_moments(corpus, derivative):
    assert Reconstruction(DiffOperator.derivative_operator(2)).required_moments(1) == 12
    assert Reconstruction(corpus.legendre(3)[0]).required_moments(0) == 8
    assert Reconstruction(derivative).required_moments(0) == 4
    assert Reconstruction(DiffOperator((Poly(), Poly.monomial(3)))).required_moments(0) == 6


#-- PURPOSE: the indicator of [0, 1] from its moments under D
def test_recover_unit_step(corpus, unit_step, derivative):
    moments = corpus.exact_moments(unit_step, 7)
    estimate = Reconstruction(derivative).recover_jumps(moments, 0)
    truth = corpus.jump_data(unit_step, 1)
    assert len(estimate.jumps.nodes) == 2
    assert node_error(estimate.jumps, truth) <= 1e-10
    assert jump_error(estimate.jumps, truth) <= 1e-10
    assert estimate.rank == 2
    assert estimate.fit_residual <= 1e-10


#-- PURPOSE: the step 1 on [0, 1/2), x on [1/2, 1] under D^2
def test_recover_step(corpus):
    signal = corpus.signal('step')
    moments = corpus.exact_moments(signal.spec, 15)
    engine = Reconstruction(signal.operator)
    estimate = engine.recover_jumps(moments, 1)
    truth = JumpData(STEP_NODES, STEP_JUMPS)
    assert node_error(estimate.jumps, truth) <= 1e-8
    assert jump_error(estimate.jumps, truth) <= 1e-6
    grid = np.linspace(-0.2, 1.2, 141) + 0.0025
    rebuilt = engine.rebuild_signal(estimate.jumps, grid)
    expected = np.array([float(signal.spec(Fraction(x))) for x in grid])
    assert np.max(np.abs(rebuilt - expected)) <= 1e-6


def recoverable(signal):
    nodes = signal.spec.breakpoints
    return (signal.p <= 3
            and min(b - a for a, b in zip(nodes, nodes[1:])) >= Fraction(1, 5)
            and all(signal.operator.leading(xi) != 0 for xi in nodes))


#-- PURPOSE: corpus signals with separated regular nodes are recovered and rebuilt
def test_recover_corpus(corpus, corpus_signals):
    signals = [s for s in corpus_signals if recoverable(s)]
    assert len(signals) >= 30
    assert any(s.order >= 3 and s.p >= 2 for s in signals)
    for signal in signals:
        engine = Reconstruction(signal.operator)
        moments = corpus.exact_moments(signal.spec, engine.required_moments(signal.p) + 8)
        estimate = engine.recover_jumps(moments, signal.p)
        truth = corpus.jump_data(signal.spec, signal.order)
        assert len(estimate.jumps.nodes) == len(truth.nodes), signal.name
        assert node_error(estimate.jumps, truth) <= 1e-8, signal.name
        scale = max([1.0] + [abs(float(d)) for jump in truth.jumps for d in jump])
        assert jump_error(estimate.jumps, truth) <= 1e-6 * scale, signal.name
        if signal.operator.leading.degree > 0:
            continue
        grid = np.linspace(-1.0, 1.0, 101)
        away = np.min(np.abs(grid[:, None] - np.array([float(x) for x in truth.nodes])[None, :]), axis=1) > 1e-6
        rebuilt = engine.rebuild_signal(estimate.jumps, grid)
        expected = np.array([float(signal.spec(Fraction(x))) for x in grid])
        assert np.max(np.abs(rebuilt - expected)[away]) <= 1e-6 * scale, signal.name


#-- PURPOSE: split multiple roots are grouped into at most p+2 nodes
@pytest.mark.parametrize('name', ['piecewise-2', 'piecewise-7', 'piecewise-8'])
def test_confluent_nodes_grouped(corpus, name):
    signal = corpus.signal(name)
    assert signal.order >= 2
    engine = Reconstruction(signal.operator)
    moments = corpus.exact_moments(signal.spec, engine.required_moments(signal.p) + 8)
    estimate = engine.recover_jumps(moments, signal.p)
    truth = corpus.jump_data(signal.spec, signal.order)
    assert len(estimate.jumps.nodes) == signal.p + 2
    assert node_error(estimate.jumps, truth) <= 1e-8
    assert max(estimate.nodes.multiplicities) <= signal.order
    assert len(estimate.nodes.nodes) <= signal.p + 2


#-- PURPOSE: rebuilding from exact jump data
def test_rebuild_signal(corpus, unit_step, derivative):
    engine = Reconstruction(derivative)
    grid = np.linspace(-0.5, 1.5, 101)
    samples = engine.rebuild_signal(corpus.jump_data(unit_step, 1), grid)
    inside = (grid >= 0) & (grid <= 1)
    assert np.all(samples[inside] == 1.0)
    assert np.all(samples[~inside] == 0.0)
    step = Reconstruction(DiffOperator.derivative_operator(2))
    samples = step.rebuild_signal(JumpData(STEP_NODES, STEP_JUMPS), [0.25, 0.75])
    assert np.allclose(samples, [1.0, 0.75], atol=1e-12)


#-- PURPOSE: signals with eps = 0 carry no recoverable jumps
def test_zero_model(corpus):
    operator, poly = corpus.legendre(2)
    moments = corpus.exact_moments(PiecewiseSpec((-1, 1), (poly,)), 12)
    with pytest.raises(WrongModelOrder) as error:
        Reconstruction(operator).recover_jumps(moments, 0)
    assert error.value.diagnosis == 'zero model'


#-- PURPOSE: too few moments and nodes at roots of p_n are refused
def test_reconstruction_errors(corpus, unit_step, derivative):
    moments = corpus.exact_moments(unit_step, 2)
    with pytest.raises(InsufficientMoments):
        Reconstruction(derivative).recover_jumps(moments, 0)
#   x D^2 kills 1, and the node 0 of the indicator is a root of p_2
    operator = DiffOperator((Poly(), Poly(), Poly.x()))
    spec = PiecewiseSpec((0, 1), (Poly((1,)),), operator)
    moments = corpus.exact_moments(spec, 15)
    engine = Reconstruction(operator, Numerical_Inputs(refine_nodes=False))
    with pytest.raises(SingularNode) as error:
        engine.recover_jumps(moments, 0)
    assert abs(error.value.node) <= 1e-9


#-- PURPOSE: residual report of an exact-input reconstruction
def test_residual_report(corpus, unit_step, derivative):
    moments = corpus.exact_moments(unit_step, 9)
    engine = Reconstruction(derivative)
    estimate = engine.recover_jumps(moments, 0)
    report = engine.residual_report(moments, estimate)
    assert report.max_eps_residual <= 1e-9
    assert report.max_moment_residual <= 1e-9
    assert not report.notes
    assert {'mu', 'eps', 'moment', 'regenerated'} <= set(report.table.columns)
    truth = engine.residual_report(moments, corpus.jump_data(unit_step, 1))
    assert truth.max_eps_residual <= 1e-12
