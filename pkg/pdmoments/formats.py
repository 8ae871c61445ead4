# -*- coding: utf-8 -*-
"""
===============================================================================
                                FORMATS FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Readers and writers of the text files used by the command line:

    operator    p_j: c_0 c_1 ... c_{d_j}            one line per coefficient
    jumps       xi: D0 D1 ... D{n-1}                one line per node
    moments     m_k                                 one value per line
    signal      breakpoints: xi_0 ... xi_{p+1}
                poly: c_0 c_1 ...   or   ic: v_0 ... v_{n-1}, one line per piece

Values are rational literals ("p/q", "p") or decimals; '#' starts a comment.
===============================================================================
"""
import re
import logging

import pandas as pd

from .concomitant import JumpData
from .corpus import InitialConditions, PiecewiseSpec
from .diffop import DiffOperator
from .errors import ParseError
from .exact import Poly, format_rat, parse_rat
from .momrec import MomentSequence

logger = logging.getLogger(__name__)

COEFFICIENT_KEY = re.compile(r'^p_(\d+)$')


def read_keyed(filepath):
    """
    Function:
        Reads a "key: values" file
    Outputs:
        DataFrame with string columns 'key' and 'value', in file order
    """
    try:
        data = pd.read_csv(filepath, sep=':', header=None, names=['key', 'value'], dtype=str,
                           comment='#', skipinitialspace=True, skip_blank_lines=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise ParseError('Cannot read {}: {}'.format(filepath, error)) from error
    except FileNotFoundError as error:
        raise ParseError('No such file: {}'.format(filepath)) from error
    data['key'] = data['key'].str.strip()
    data['value'] = data['value'].fillna('').str.strip()
    return data


def parse_values(text):
    return [parse_rat(token) for token in str(text).split()]


#%%
# =============================================================================
# OPERATORS
# =============================================================================
def read_operator(filepath):
    data = read_keyed(filepath)
    table = {}
    for key, value in zip(data['key'], data['value']):
        match = COEFFICIENT_KEY.match(key)
        if match is None:
            raise ParseError('Operator lines start with p_j, got {!r}'.format(key))
        j = int(match.group(1))
        if j in table:
            raise ParseError('p_{} given twice'.format(j))
        table[j] = Poly(tuple(parse_values(value)))
    if not table:
        raise ParseError('Operator file {} is empty'.format(filepath))
    n = max(table)
    try:
        return DiffOperator(tuple(table.get(j, Poly()) for j in range(n + 1)))
    except ValueError as error:
        raise ParseError('Invalid operator in {}: {}'.format(filepath, error)) from error


def format_operator(operator):
    lines = []
    for j, p in enumerate(operator.coeffs):
        lines.append('p_{}: {}'.format(j, ' '.join(format_rat(c) for c in p.coefficients)).rstrip())
    return '\n'.join(lines) + '\n'


#%%
# =============================================================================
# JUMP DATA
# =============================================================================
def read_jumps(filepath):
    data = read_keyed(filepath)
    nodes = [parse_rat(key) for key in data['key']]
    jumps = [tuple(parse_values(value)) for value in data['value']]
    try:
        return JumpData(tuple(nodes), tuple(jumps))
    except ValueError as error:
        raise ParseError('Invalid jump data in {}: {}'.format(filepath, error)) from error


def format_value(value):
    if isinstance(value, float) or hasattr(value, 'dtype'):
        return '{:.12g}'.format(float(value))
    return format_rat(value)


def format_jumps(jumps):
    return ''.join('{}: {}\n'.format(format_value(xi), ' '.join(format_value(d) for d in jump))
                   for xi, jump in zip(jumps.nodes, jumps.jumps))


#%%
# =============================================================================
# MOMENTS
# =============================================================================
def read_moments(filepath):
    try:
        data = pd.read_csv(filepath, header=None, dtype=str, comment='#', skip_blank_lines=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise ParseError('Cannot read {}: {}'.format(filepath, error)) from error
    except FileNotFoundError as error:
        raise ParseError('No such file: {}'.format(filepath)) from error
    if data.shape[1] != 1:
        raise ParseError('Moments files hold one value per line')
    return MomentSequence(tuple(parse_rat(value) for value in data[0]))


def format_moments(moments):
    return ''.join(format_value(v) + '\n' for v in moments.values)


#%%
# =============================================================================
# PIECEWISE SIGNALS
# =============================================================================
def read_signal(filepath, operator=None):
    """
    Function:
        Reads a piecewise signal
    Inputs:
        filepath    Signal file
        operator    Optional DiffOperator the pieces are checked against;
                    required for 'ic' pieces
    Outputs:
        PiecewiseSpec
    """
    data = read_keyed(filepath)
    if data.empty or data['key'].iloc[0] != 'breakpoints':
        raise ParseError('Signal files start with a breakpoints line')
    breakpoints = parse_values(data['value'].iloc[0])
    pieces = []
    for key, value in zip(data['key'].iloc[1:], data['value'].iloc[1:]):
        if key == 'poly':
            pieces.append(Poly(tuple(parse_values(value))))
        elif key == 'ic':
            pieces.append(InitialConditions(tuple(parse_values(value))))
        else:
            raise ParseError('Unknown piece kind {!r}, expected poly or ic'.format(key))
    try:
        return PiecewiseSpec(tuple(breakpoints), tuple(pieces), operator)
    except ValueError as error:
        raise ParseError('Invalid signal in {}: {}'.format(filepath, error)) from error
