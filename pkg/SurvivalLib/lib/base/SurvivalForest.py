##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import json
from collections import OrderedDict

import numpy as np

from ..exceptions import DataError
from .SurvivalTree import SurvivalTree

FORMAT = 'survivallib.survival-forest'
FORMAT_VERSION = 1


class SurvivalForest(object):
    """Bagged survival trees sharing one time grid.

    sample_ids lists the training samples in the canonical (identifier
    sorted) order that every tree's in_bag vector follows.
    """

    def __init__(self, feature_names, time_grid, trees, options, sample_ids):
        self.feature_names = [str(x) for x in feature_names]
        self.time_grid = np.asarray(time_grid, dtype=float)
        self.trees = list(trees)
        self.options = OrderedDict(options)
        self.sample_ids = [str(x) for x in sample_ids]
        if np.any(np.diff(self.time_grid) <= 0):
            raise ValueError('forest time grid must be strictly increasing')
        for tree in self.trees:
            if len(tree.in_bag) != len(self.sample_ids):
                raise ValueError('tree bootstrap record does not match the training samples')

    def __repr__(self):
        return 'SurvivalForest(trees={}, p={}, grid={})'.format(
            self.n_trees, self.p, len(self.time_grid))

    @property
    def n_trees(self):
        return len(self.trees)

    @property
    def p(self):
        return len(self.feature_names)

    def check_covariates(self, X):
        X = np.asarray(X, dtype=float)
        single = X.ndim == 1
        X = np.atleast_2d(X)
        if X.shape[1] != self.p:
            raise ValueError('expected {} covariates, got {}'.format(self.p, X.shape[1]))
        return X, single

    def hazard_matrix(self, X):
        """Return the mean tree cumulative hazard of every row of X on the grid."""
        X, _ = self.check_covariates(X)
        total = np.zeros((len(X), len(self.time_grid)))
        for tree in self.trees:
            total += tree.leaf_hazards(len(self.time_grid))[tree.apply(X)]
        return total / float(self.n_trees)

    def to_dict(self):
        return OrderedDict([
            ('format', FORMAT),
            ('version', FORMAT_VERSION),
            ('feature_names', self.feature_names),
            ('options', self.options),
            ('time_grid', self.time_grid.tolist()),
            ('sample_ids', self.sample_ids),
            ('trees', [tree.to_dict() for tree in self.trees]),
        ])

    @classmethod
    def from_dict(cls, data):
        if data.get('format') != FORMAT:
            raise DataError('not a survival forest document (format {!r})'.format(data.get('format')))
        if data.get('version') != FORMAT_VERSION:
            raise DataError('unsupported survival forest version {!r}'.format(data.get('version')))
        return cls(data['feature_names'], data['time_grid'],
                   [SurvivalTree.from_dict(x) for x in data['trees']],
                   data['options'], data['sample_ids'])

    def save(self, path):
        with open(path, 'w') as handle:
            json.dump(self.to_dict(), handle, separators=(',', ':'))
            handle.write('\n')

    @classmethod
    def load(cls, path):
        try:
            with open(path) as handle:
                return cls.from_dict(json.load(handle, object_pairs_hook=OrderedDict))
        except (IOError, OSError, ValueError, KeyError) as e:
            raise DataError('unable to load survival forest {}: {}'.format(path, e))
