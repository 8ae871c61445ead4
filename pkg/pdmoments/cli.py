# -*- coding: utf-8 -*-
"""
===============================================================================
                            COMMAND LINE FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
    python -m pdmoments <command> [options]

    bound           bounds on the moment vanishing and uniqueness indices
    verify          check mu_k = eps_k for moments against jump data
    moments         moments of a piecewise signal
    recurrence      the recurrence of an operator; mu of a moment file;
                    forward moment generation
    mgf-check       check L I_f = R_f for the moment generating function
    reconstruct     nodes and jumps from moments, optionally sampled on a grid
    demo-legendre   the Legendre worked example for degree m
    corpus-check    every identity over the whole signal corpus

Exit codes: 0 success, 1 unreadable input, 2 a mathematical precondition
fails, 3 an identity check fails.
===============================================================================
"""
import argparse
import concurrent.futures
import datetime
import logging
import sys

import numpy as np
import pandas as pd

from . import formats
from .bounds import Bounds
from .concomitant import Concomitant
from .corpus import Corpus, PiecewiseSpec
from .errors import ParseError, PDMomentsError, VerificationFailure
from .exact import format_poly, format_rat
from .inputs import Numerical_Inputs
from .mgf import Generating_Function
from .momrec import Moment_Recurrence
from .reconstruct import Reconstruction

logger = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(prog='pdmoments',
                                     description='Moments of piecewise D-finite functions')
    parser.add_argument('--inputs', help='alternative "Numerical inputs.csv"')
    parser.add_argument('--tol', type=float, help='zero and residual tolerance of floating checks')
    parser.add_argument('--porcelain', action='store_true', help='key=value output')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    commands = parser.add_subparsers(dest='command', required=True)

    bound = commands.add_parser('bound', help='sigma and tau bounds')
    bound.add_argument('--operator', required=True)
    bound.add_argument('--p', type=int, required=True)
    bound.add_argument('--interval', help='a:b on which p_n is tested for roots')
    bound.add_argument('--jumps', help='jump data whose nodes are tested against p_n')

    verify = commands.add_parser('verify', help='moment recurrence identity')
    verify.add_argument('--operator', required=True)
    verify.add_argument('--moments')
    verify.add_argument('--jumps')
    verify.add_argument('--signal', help='piecewise polynomial giving exact moments and jumps')
    verify.add_argument('--order', type=int, default=50, help='K, used with --signal')

    moments = commands.add_parser('moments', help='moments of a signal')
    moments.add_argument('--signal', required=True)
    moments.add_argument('--operator', help='needed for initial-condition pieces')
    moments.add_argument('--order', type=int, default=20, help='last moment index K')

    recurrence = commands.add_parser('recurrence', help='recurrence coefficients and moment generation')
    recurrence.add_argument('--operator', required=True)
    recurrence.add_argument('--moments', help='moments whose mu_k are printed, or the seed')
    recurrence.add_argument('--jumps', help='generate moments from eps of these jumps')
    recurrence.add_argument('--order', type=int, default=20, help='last moment index K')

    mgf = commands.add_parser('mgf-check', help='moment generating function identity')
    mgf.add_argument('--operator', required=True)
    mgf.add_argument('--moments', required=True)
    mgf.add_argument('--jumps', required=True)
    mgf.add_argument('--order', type=int, help='last compared index K (default: all)')

    reconstruct = commands.add_parser(
        'reconstruct', help='nodes and jumps from moments',
        description='Needs 2n(pmax+2) + max(alpha, 0) moments for an operator of order n.')
    reconstruct.add_argument('--operator', required=True)
    reconstruct.add_argument('--moments', required=True)
    reconstruct.add_argument('--pmax', type=int, required=True)
    reconstruct.add_argument('--grid', help='a:b:step sample grid')

    demo = commands.add_parser('demo-legendre', help='Legendre worked example')
    demo.add_argument('m', type=int)

    sweep = commands.add_parser('corpus-check', help='identities over the signal corpus')
    sweep.add_argument('--order', type=int, default=50)
    sweep.add_argument('--workers', type=int, default=1)
    return parser


def run(argv=None):
    """
    Function:
        Runs one command
    Inputs:
        argv        Argument list, sys.argv[1:] by default
    Outputs:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return 0 if exit_.code in (0, None) else 1
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        inputs = load_inputs(args)
        return COMMANDS[args.command](args, inputs)
    except PDMomentsError as error:
        print('error: {}'.format(error), file=sys.stderr)
        return error.exit_code


def load_inputs(args):
    try:
        inputs = Numerical_Inputs(args.inputs) if args.inputs else Numerical_Inputs()
    except (OSError, KeyError, ValueError) as error:
        raise ParseError('Cannot load numerical inputs: {}'.format(error)) from error
    if args.tol is not None:
        inputs.zero_tolerance = args.tol
        inputs.residual_tolerance = args.tol
    return inputs


def emit(args, values, table=None):
    """Prints key=value lines in porcelain mode, aligned text otherwise"""
    if args.porcelain:
        for key, value in values.items():
            print('{}={}'.format(key, value))
        return
    width = max((len(key) for key in values), default=0)
    for key, value in values.items():
        print('{}  {}'.format(key.ljust(width), value))
    if table is not None:
        print()
        print(table.to_string())


def parse_range(text, parts):
    try:
        values = [float(v) for v in text.split(':')]
    except ValueError as error:
        raise ParseError('Not a range: {!r}'.format(text)) from error
    if len(values) != parts:
        raise ParseError('Expected {} colon-separated numbers, got {!r}'.format(parts, text))
    return values


def _fail_if(report, what):
    if not report.passed:
        raise VerificationFailure('{} fails first at k = {}'.format(what, report.first_failing),
                                  first_failing=report.first_failing)


def _text(value):
    return format_rat(value) if not isinstance(value, float) else '{:.12g}'.format(value)


#%%
# =============================================================================
# COMMANDS
# =============================================================================
def command_bound(args, inputs):
    operator = formats.read_operator(args.operator)
    interval = None
    if args.interval:
        interval = formats.parse_values(args.interval.replace(':', ' '))
        if len(interval) != 2:
            raise ParseError('Expected a:b, got {!r}'.format(args.interval))
    nodes = formats.read_jumps(args.jumps).nodes if args.jumps else None
    report = Bounds(operator, inputs).report(args.p, interval, nodes)
    if args.porcelain:
        for line in report.porcelain():
            print(line)
    else:
        print('operator  {}'.format(operator))
        for line in report.porcelain():
            key, value = line.split('=', 1)
            print('{}  {}'.format(key.ljust(16), value))
        print()
        print(report.table().to_string())
        for note in report.notes:
            print('note: ' + note)
    return 0


def command_verify(args, inputs):
    operator = formats.read_operator(args.operator)
    if args.signal:
        spec = formats.read_signal(args.signal, operator)
        corpus = Corpus(inputs)
        moments = corpus.exact_moments(spec, args.order + max(operator.alpha, 0))
        jumps = corpus.jump_data(spec, operator.order)
    elif args.moments and args.jumps:
        moments = formats.read_moments(args.moments)
        jumps = formats.read_jumps(args.jumps)
    else:
        raise ParseError('verify needs --signal, or both --moments and --jumps')
    tolerance = 0 if moments.is_exact else inputs.residual_tolerance
    report = Moment_Recurrence(operator).verify_recurrence(moments, jumps, tolerance)
    emit(args, {'checked': len(report.table), 'max_residual': _text(report.max_residual),
                'first_failing': report.first_failing if report.first_failing is not None else 'none'},
         None if args.porcelain else report.table)
    _fail_if(report, 'Moment recurrence')
    return 0


def command_moments(args, inputs):
    operator = formats.read_operator(args.operator) if args.operator else None
    spec = formats.read_signal(args.signal, operator)
    corpus = Corpus(inputs)
    if spec.is_polynomial:
        moments = corpus.exact_moments(spec, args.order)
    else:
        moments = corpus.series_moments(operator, spec, args.order)
    print(formats.format_moments(moments), end='')
    return 0


def command_recurrence(args, inputs):
    operator = formats.read_operator(args.operator)
    recurrence = Moment_Recurrence(operator)
    if args.jumps:
        seed = formats.read_moments(args.moments).values if args.moments else ()
        jumps = formats.read_jumps(args.jumps)
        eps = Concomitant(operator).epsilon_sequence(jumps, args.order - operator.alpha + 1)
        moments = recurrence.generate_moments(eps, seed, args.order)
        print(formats.format_moments(moments), end='')
        return 0
    values = {'n': operator.order, 'alpha': operator.alpha, 'Lambda': operator.lambda_cap()}
    for ell, q in recurrence.q.items():
        values['q_{}'.format(ell)] = format_poly(q, 'k')
    table = None
    if args.moments:
        mu = recurrence.epsilon_from_moments(formats.read_moments(args.moments))
        table = pd.DataFrame({'mu': [_text(v) for v in mu]})
        table.index.name = 'k'
        if args.porcelain:
            values.update({'mu_{}'.format(k): _text(v) for k, v in enumerate(mu)})
    emit(args, values, None if args.porcelain else table)
    return 0


def command_mgf(args, inputs):
    operator = formats.read_operator(args.operator)
    moments = formats.read_moments(args.moments)
    jumps = formats.read_jumps(args.jumps)
    K = args.order if args.order is not None else moments.K - operator.alpha
    tolerance = 0 if moments.is_exact else inputs.residual_tolerance
    result = Generating_Function(operator).verify_mgf_ode(moments, jumps, K, tolerance)
    report = result.residuals
    emit(args, {'order': K, 'R_f': str(result.rhs), 'polynomial_part': str(result.polynomial_part),
                'max_residual': _text(report.max_residual),
                'first_failing': report.first_failing if report.first_failing is not None else 'none'},
         None if args.porcelain else report.table)
    _fail_if(report, 'L I_f = R_f')
    return 0


def command_reconstruct(args, inputs):
    operator = formats.read_operator(args.operator)
    moments = formats.read_moments(args.moments)
    engine = Reconstruction(operator, inputs)
    estimate = engine.recover_jumps(moments, args.pmax)
    report = engine.residual_report(moments, estimate)
    emit(args, {'nodes': len(estimate.jumps.nodes), 'rank': estimate.rank,
                'condition': '{:.3e}'.format(estimate.condition),
                'fit_residual': '{:.3e}'.format(estimate.fit_residual),
                'max_eps_residual': '{:.3e}'.format(report.max_eps_residual)})
    print(formats.format_jumps(estimate.jumps), end='')
    if args.grid:
        start, stop, step = parse_range(args.grid, 3)
        grid = np.arange(start, stop + step / 2, step)
        samples = engine.rebuild_signal(estimate.jumps, grid)
        for x, value in zip(grid, samples):
            print('{:.12g} {:.12g}'.format(x, value))
    return 0


def command_demo_legendre(args, inputs):
    m = args.m
    corpus = Corpus(inputs)
    operator, poly = corpus.legendre(m)
    spec = PiecewiseSpec((-1, 1), (poly,), operator)
    K = 2 * m + 4
    moments = corpus.exact_moments(spec, K)
    jumps = corpus.jump_data(spec, operator.order)
    eps = Moment_Recurrence(operator).epsilon_from_moments(moments)
    analysis = operator.infinity_analysis()
    bounds = Bounds(operator, inputs)
    count = bounds.vanishing_count(moments)
    bound = bounds.sigma_bound_general(0)
    checks = {
        'kernel': operator.apply(poly).is_zero,
        'eps_zero': all(e == 0 for e in eps)
        and all(e == 0 for e in Concomitant(operator).epsilon_sequence(jumps, len(eps))),
        'Lambda': operator.lambda_cap() == m,
        'exponents': sorted(analysis.exponents) == sorted([m + 1, -m]),
        'lambda': analysis.lambda_cap == m,
        'moment': moments[m] == corpus.legendre_moment(m),
        'certificate': count == m and count <= bound and (m < 3 or count == bound),
    }
    emit(args, {'operator': str(operator), 'P_m': str(poly), 'Lambda': operator.lambda_cap(),
                'exponents': ' '.join(format_rat(e) for e in sorted(analysis.exponents, reverse=True)),
                'fuchsian': str(analysis.fuchsian).lower(), 'm_m': format_rat(moments[m]),
                'vanishing_count': count, 'bound': bound,
                'failed': ','.join(name for name, ok in checks.items() if not ok) or 'none'})
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise VerificationFailure('Legendre example fails: ' + ', '.join(failed))
    return 0


def check_signal(signal, order, inputs):
    """
    Function:
        All identities for one corpus signal; exact for polynomial pieces,
        to "Series tolerance" through power series otherwise
    Outputs:
        Dict with the signal name and one flag per check
    """
    corpus = Corpus(inputs)
    operator = signal.operator
    alpha = operator.alpha
    K = order + max(alpha, 0)
    if signal.spec.is_polynomial:
        moments = corpus.exact_moments(signal.spec, K)
        tolerance = 0
    else:
        moments = corpus.series_moments(operator, signal.spec, K)
        tolerance = inputs.series_tolerance
    jumps = corpus.jump_data(signal.spec, operator.order)
    recurrence = Moment_Recurrence(operator).verify_recurrence(moments, jumps, tolerance)
    mgf = Generating_Function(operator).verify_mgf_ode(moments, jumps, min(order, moments.K - alpha),
                                                       tolerance)
    bounds = Bounds(operator, inputs)
    count = bounds.vanishing_count(moments)
    return {'signal': signal.name, 'p': signal.p, 'n': operator.order,
            'recurrence': recurrence.passed, 'mgf': mgf.residuals.passed,
            'certificate': count <= bounds.sigma_bound_general(signal.p)}


def command_corpus_check(args, inputs):
    timer_start = datetime.datetime.now()
    signals = Corpus(inputs).signals()
    if args.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as executor:
            rows = list(executor.map(check_signal, signals, [args.order] * len(signals),
                                     [inputs] * len(signals)))
    else:
        rows = [check_signal(signal, args.order, inputs) for signal in signals]
    table = pd.DataFrame(rows).set_index('signal')
    failed = table[~(table['recurrence'] & table['mgf'] & table['certificate'])]
    timer_end = datetime.datetime.now()
    logger.info('Time taken for corpus check: %.2f seconds', (timer_end - timer_start).total_seconds())
    emit(args, {'signals': len(table), 'failed': len(failed)}, None if args.porcelain else table)
    if len(failed):
        raise VerificationFailure('Corpus signals fail: ' + ', '.join(failed.index))
    return 0


COMMANDS = {
    'bound': command_bound,
    'verify': command_verify,
    'moments': command_moments,
    'recurrence': command_recurrence,
    'mgf-check': command_mgf,
    'reconstruct': command_reconstruct,
    'demo-legendre': command_demo_legendre,
    'corpus-check': command_corpus_check,
}
