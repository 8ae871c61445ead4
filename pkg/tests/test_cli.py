#!/usr/bin/env python
u"""
test_cli.py
Runs the command line on the example files and checks outputs and exit codes
"""
import math

import pytest

from pdmoments import cli


def porcelain(text):
    return dict(line.split('=', 1) for line in text.splitlines() if '=' in line)


#-- PURPOSE: the Legendre worked example for m = 5
def test_demo_legendre(capsys):
    assert cli.run(['--porcelain', 'demo-legendre', '5']) == 0
    values = porcelain(capsys.readouterr().out)
    assert values['Lambda'] == '5'
    assert values['exponents'] == '6 -5'
    assert values['fuchsian'] == 'true'
    assert values['m_m'] == '16/693'
    assert values['vanishing_count'] == '5'
    assert values['bound'] == '5'
    assert values['failed'] == 'none'


#-- PURPOSE: bounds of the Legendre operator of degree 2
def test_bound(capsys, examples_path):
    assert cli.run(['--porcelain', 'bound', '--operator', examples_path('legendre2.op'), '--p', '0']) == 0
    values = porcelain(capsys.readouterr().out)
    assert values['general_bound'] == '3'
    assert values['regular_bound'] == 'inapplicable'
    assert cli.run(['bound', '--operator', examples_path('legendre2.op'), '--p', '0']) == 0
    assert 'general' in capsys.readouterr().out


#-- PURPOSE: the recurrence identity from a signal and from files
def test_verify(capsys, tmp_path, examples_path):
    operator = examples_path('derivative.op')
    assert cli.run(['--porcelain', 'verify', '--operator', operator,
                    '--signal', examples_path('unit_step.signal'), '--order', '20']) == 0
    assert porcelain(capsys.readouterr().out)['first_failing'] == 'none'
    assert cli.run(['verify', '--operator', operator, '--moments', examples_path('unit_step.moments'),
                    '--jumps', examples_path('unit_step.jumps')]) == 0
    capsys.readouterr()
#   m_3 = 1/3 instead of 1/4
    moments = tmp_path / 'perturbed.moments'
    moments.write_text('1\n1/2\n1/3\n1/3\n1/5\n1/6\n')
    code = cli.run(['--porcelain', 'verify', '--operator', operator, '--moments', str(moments),
                    '--jumps', examples_path('unit_step.jumps')])
    captured = capsys.readouterr()
    assert code == 3
    assert porcelain(captured.out)['first_failing'] == '4'
    assert captured.err.startswith('error:')


#-- PURPOSE: unreadable inputs exit with 1
def test_parse_errors(capsys, tmp_path, examples_path):
    operator = tmp_path / 'bad.op'
    operator.write_text('p_0: 1\np_1: x\n')
    assert cli.run(['bound', '--operator', str(operator), '--p', '0']) == 1
    assert 'error:' in capsys.readouterr().err
    assert cli.run(['bound', '--operator', str(tmp_path / 'missing.op'), '--p', '0']) == 1
    assert cli.run(['verify', '--operator', examples_path('derivative.op')]) == 1
    assert cli.run(['no-such-command']) == 1
    assert cli.run(['--help']) == 0


#-- PURPOSE: moments of polynomial and initial-condition signals
def test_moments(capsys, examples_path):
    assert cli.run(['moments', '--signal', examples_path('unit_step.signal'), '--order', '3']) == 0
    assert capsys.readouterr().out.split() == ['1', '1/2', '1/3', '1/4']
    assert cli.run(['moments', '--signal', examples_path('step.signal'), '--order', '0']) == 0
    assert capsys.readouterr().out.split() == ['7/8']
    assert cli.run(['moments', '--signal', examples_path('exponential.signal'),
                    '--operator', examples_path('exponential.op'), '--order', '1']) == 0
    values = [float(v) for v in capsys.readouterr().out.split()]
    assert abs(values[0] - (math.e - 1)) <= 1e-10
    assert abs(values[1] - 1) <= 1e-10


#-- PURPOSE: recurrence coefficients and forward generation
def test_recurrence(capsys, examples_path):
    assert cli.run(['--porcelain', 'recurrence', '--operator', examples_path('legendre2.op')]) == 0
    values = porcelain(capsys.readouterr().out)
    assert values['n'] == '2'
    assert values['alpha'] == '0'
    assert values['Lambda'] == '2'
    assert values['q_0'] == '-k^2 - k + 6'
    assert cli.run(['recurrence', '--operator', examples_path('derivative.op'),
                    '--jumps', examples_path('unit_step.jumps'), '--order', '3']) == 0
    assert capsys.readouterr().out.split() == ['1', '1/2', '1/3', '1/4']
    assert cli.run(['--porcelain', 'recurrence', '--operator', examples_path('derivative.op'),
                    '--moments', examples_path('unit_step.moments')]) == 0
    values = porcelain(capsys.readouterr().out)
    assert values['mu_0'] == '0'
    assert values['mu_5'] == '-1'


#-- PURPOSE: the generating function identity for the unit step
def test_mgf_check(capsys, examples_path):
    assert cli.run(['--porcelain', 'mgf-check', '--operator', examples_path('derivative.op'),
                    '--moments', examples_path('unit_step.moments'),
                    '--jumps', examples_path('unit_step.jumps'), '--order', '10']) == 0
    values = porcelain(capsys.readouterr().out)
    assert values['order'] == '10'
    assert values['first_failing'] == 'none'
#   without --order every available index is compared: K - alpha = 10 + 1
    assert cli.run(['--porcelain', 'mgf-check', '--operator', examples_path('derivative.op'),
                    '--moments', examples_path('unit_step.moments'),
                    '--jumps', examples_path('unit_step.jumps')]) == 0
    assert porcelain(capsys.readouterr().out)['order'] == '11'


#-- PURPOSE: reconstruction of the unit step and its sampled rebuild
def test_reconstruct(capsys, examples_path):
    argv = ['--porcelain', 'reconstruct', '--operator', examples_path('derivative.op'),
            '--moments', examples_path('unit_step.moments')]
    assert cli.run(argv + ['--pmax', '0', '--grid', '0.25:0.75:0.25']) == 0
    lines = capsys.readouterr().out.splitlines()
    values = porcelain('\n'.join(lines))
    assert values['nodes'] == '2'
    assert values['rank'] == '2'
    jumps = [line for line in lines if ':' in line and '=' not in line]
    assert len(jumps) == 2
    nodes = sorted(float(line.split(':')[0]) for line in jumps)
    assert nodes == pytest.approx([0.0, 1.0], abs=1e-8)
    samples = [float(line.split()[1]) for line in lines[-3:]]
    assert samples == pytest.approx([1.0, 1.0, 1.0], abs=1e-8)
#   D with pmax = 10 needs 24 moments
    assert cli.run(argv + ['--pmax', '10']) == 2
    assert 'error:' in capsys.readouterr().err


#-- PURPOSE: the whole corpus passes from the command line
def test_corpus_check(capsys):
    assert cli.run(['--porcelain', 'corpus-check', '--order', '20']) == 0
    values = porcelain(capsys.readouterr().out)
    assert int(values['signals']) >= 50
    assert values['failed'] == '0'


#-- PURPOSE: repeated runs print identical output
def test_deterministic(capsys, examples_path):
    argv = ['--porcelain', 'bound', '--operator', examples_path('legendre5.op'), '--p', '1']
    cli.run(argv)
    first = capsys.readouterr().out
    cli.run(argv)
    assert capsys.readouterr().out == first
