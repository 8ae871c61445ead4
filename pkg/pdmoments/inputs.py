# -*- coding: utf-8 -*-
"""
===============================================================================
                            NUMERICAL INPUTS FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Reads the tolerances and switches of the floating-point paths from
"Numerical inputs.csv". The exact (rational) paths never consult this file.
===============================================================================
"""
import os
import logging

import pandas as pd

logger = logging.getLogger(__name__)

INPUTS_FILEPATH = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                               'Inputs', 'Numerical inputs.csv')

#   Keys of the inputs file and the attribute each one fills
INPUT_KEYS = {
    'Zero tolerance': 'zero_tolerance',
    'Node gap': 'node_gap',
    'Rank tolerance': 'rank_tolerance',
    'Condition threshold': 'condition_threshold',
    'Residual tolerance': 'residual_tolerance',
    'Singular node tolerance': 'singular_node_tolerance',
    'Series degree': 'series_degree',
    'Series tolerance': 'series_tolerance',
    'Refine nodes': 'refine_nodes',
}


class Numerical_Inputs():
    def __init__(self, filepath=None, **overrides):
        """
        Function:
            Loads the numerical inputs file and applies any overrides
        Inputs:
            filepath        Path of an alternative inputs .csv file (defaults to
                            the packaged "Numerical inputs.csv")
            overrides       Attribute values replacing those read from file,
                            e.g. node_gap=1e-5
        Outputs:
            Object with one attribute per input
        """
        self.filepath = filepath or INPUTS_FILEPATH
        self.input_data = pd.read_csv(self.filepath, header=None, index_col=0)[1]
        missing = [key for key in INPUT_KEYS if key not in self.input_data.index]
        if missing:
            raise KeyError('Missing numerical inputs: ' + ', '.join(missing))
        self.zero_tolerance = float(self.input_data.loc['Zero tolerance'])
        self.node_gap = float(self.input_data.loc['Node gap'])
        self.rank_tolerance = float(self.input_data.loc['Rank tolerance'])
        self.condition_threshold = float(self.input_data.loc['Condition threshold'])
        self.residual_tolerance = float(self.input_data.loc['Residual tolerance'])
        self.singular_node_tolerance = float(self.input_data.loc['Singular node tolerance'])
        self.series_degree = int(float(self.input_data.loc['Series degree']))
        self.series_tolerance = float(self.input_data.loc['Series tolerance'])
        self.refine_nodes = str(self.input_data.loc['Refine nodes']).strip() == 'Y'
        for name, value in overrides.items():
            if name not in INPUT_KEYS.values():
                raise KeyError('Unknown numerical input: ' + name)
            setattr(self, name, value)
        logger.debug('Numerical inputs loaded from %s', self.filepath)

    def as_series(self):
        """
        Function:
            Current values of all inputs, keyed as in the inputs file
        Outputs:
            pandas Series
        """
        return pd.Series({key: getattr(self, name) for key, name in INPUT_KEYS.items()})
