# -*- coding: utf-8 -*-
"""
PDMoments: moment recurrences, bounds and reconstruction for piecewise
D-finite functions.
"""
from .concomitant import Concomitant, JumpData
from .corpus import Corpus, InitialConditions, PiecewiseSpec
from .diffop import DiffOperator
from .exact import LaurentTail, Poly, RatFun, Rat
from .inputs import Numerical_Inputs
from .momrec import MomentSequence, Moment_Recurrence
from .powersums import PowerSumModel, Power_Sums

__version__ = '1.0.0'
