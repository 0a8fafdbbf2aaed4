##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
from collections import OrderedDict

import numpy as np

LEAF = -1


class SurvivalTree(object):
    """Binary survival tree stored as flat node arrays.

    Node 0 is the root. Internal nodes send x to left when
    x[feature] <= threshold. Leaf k keeps its Nelson-Aalen increments as a
    sparse row over the forest time grid: positions leaf_positions[
    leaf_ptr[k]:leaf_ptr[k + 1]] with values leaf_increments over the same
    slice. in_bag holds bootstrap multiplicities per training sample in
    forest sample order.
    """

    __slots__ = ('feature', 'threshold', 'left', 'right', 'leaf', 'leaf_ptr',
                 'leaf_positions', 'leaf_increments', 'leaf_size', 'leaf_events', 'in_bag')

    def __init__(self, feature, threshold, left, right, leaf, leaf_ptr,
                 leaf_positions, leaf_increments, leaf_size, leaf_events, in_bag):
        self.feature = np.asarray(feature, dtype=np.int64)
        self.threshold = np.asarray(threshold, dtype=float)
        self.left = np.asarray(left, dtype=np.int64)
        self.right = np.asarray(right, dtype=np.int64)
        self.leaf = np.asarray(leaf, dtype=np.int64)
        self.leaf_ptr = np.asarray(leaf_ptr, dtype=np.int64)
        self.leaf_positions = np.asarray(leaf_positions, dtype=np.int64)
        self.leaf_increments = np.asarray(leaf_increments, dtype=float)
        self.leaf_size = np.asarray(leaf_size, dtype=np.int64)
        self.leaf_events = np.asarray(leaf_events, dtype=np.int64)
        self.in_bag = np.asarray(in_bag, dtype=np.int64)
        n_nodes = len(self.feature)
        for name in ('threshold', 'left', 'right', 'leaf'):
            if len(getattr(self, name)) != n_nodes:
                raise ValueError('tree array {} has the wrong length'.format(name))
        if len(self.leaf_ptr) != self.n_leaves + 1 or self.leaf_ptr[-1] != len(self.leaf_positions):
            raise ValueError('leaf pointer array is inconsistent')
        if np.any(self.leaf_increments < 0):
            raise ValueError('leaf hazard increments must be non-negative')

    def __repr__(self):
        return 'SurvivalTree(nodes={}, leaves={})'.format(self.n_nodes, self.n_leaves)

    @property
    def n_nodes(self):
        return len(self.feature)

    @property
    def n_leaves(self):
        return len(self.leaf_size)

    @property
    def depth(self):
        depths = np.zeros(self.n_nodes, dtype=np.int64)
        for node in range(self.n_nodes):
            if self.feature[node] != LEAF:
                depths[self.left[node]] = depths[node] + 1
                depths[self.right[node]] = depths[node] + 1
        return int(depths.max()) if self.n_nodes else 0

    def apply(self, X):
        """Return the leaf index reached by every row of X."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        node = np.zeros(len(X), dtype=np.int64)
        active = self.feature[node] != LEAF
        while active.any():
            rows = np.nonzero(active)[0]
            current = node[rows]
            go_left = X[rows, self.feature[current]] <= self.threshold[current]
            node[rows] = np.where(go_left, self.left[current], self.right[current])
            active = self.feature[node] != LEAF
        return self.leaf[node]

    def leaf_hazards(self, grid_size):
        """Return the dense (n_leaves, grid_size) cumulative hazard matrix."""
        increments = np.zeros((self.n_leaves, grid_size))
        rows = np.repeat(np.arange(self.n_leaves), np.diff(self.leaf_ptr))
        increments[rows, self.leaf_positions] = self.leaf_increments
        return np.cumsum(increments, axis=1)

    def to_dict(self):
        return OrderedDict([
            ('feature', self.feature.tolist()),
            ('threshold', self.threshold.tolist()),
            ('left', self.left.tolist()),
            ('right', self.right.tolist()),
            ('leaf', self.leaf.tolist()),
            ('leaf_ptr', self.leaf_ptr.tolist()),
            ('leaf_positions', self.leaf_positions.tolist()),
            ('leaf_increments', self.leaf_increments.tolist()),
            ('leaf_size', self.leaf_size.tolist()),
            ('leaf_events', self.leaf_events.tolist()),
            ('in_bag', self.in_bag.tolist()),
        ])

    @classmethod
    def from_dict(cls, data):
        return cls(**dict((name, data[name]) for name in cls.__slots__))
