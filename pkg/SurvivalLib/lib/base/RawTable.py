##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import pandas as pd


class RawTable(object):
    """Rectangular table of optional cells keyed by a sample identifier.

    Cells are strings, numbers or None (missing). The underlying frame is
    private; every transformation returns a new RawTable.
    """

    __slots__ = ('_frame', 'key_column')

    def __init__(self, frame, key_column):
        if not isinstance(frame, pd.DataFrame):
            frame = pd.DataFrame(frame)
        if key_column not in frame.columns:
            raise ValueError('key column {} not among table columns'.format(key_column))
        if frame.columns.duplicated().any():
            raise ValueError('duplicate column names: {}'.format(
                sorted(set(frame.columns[frame.columns.duplicated()]))))
        frame = frame.astype(object).where(frame.notna(), None).reset_index(drop=True)
        object.__setattr__(self, '_frame', frame)
        object.__setattr__(self, 'key_column', key_column)

    def __setattr__(self, name, value):
        raise AttributeError('RawTable is immutable')

    @classmethod
    def from_rows(cls, column_names, rows, key_column):
        return cls(pd.DataFrame(list(rows), columns=list(column_names)), key_column)

    def __len__(self):
        return len(self._frame)

    def __repr__(self):
        return 'RawTable(rows={}, columns={}, key={})'.format(
            len(self._frame), len(self._frame.columns), self.key_column)

    @property
    def n(self):
        return len(self._frame)

    @property
    def column_names(self):
        return [str(x) for x in self._frame.columns]

    @property
    def rows(self):
        return [tuple(r) for r in self._frame.itertuples(index=False, name=None)]

    @property
    def keys(self):
        return [str(x) for x in self._frame[self.key_column]]

    @property
    def frame(self):
        """Return a copy of the underlying frame."""
        return self._frame.copy()

    def column(self, name):
        if name not in self._frame.columns:
            raise KeyError(name)
        return list(self._frame[name])

    def has_column(self, name):
        return name in self._frame.columns

    def missing_count(self, name=None):
        if name is None:
            return int(self._frame.isna().sum().sum())
        return int(self._frame[name].isna().sum())

    def with_frame(self, frame, key_column=None):
        return RawTable(frame, key_column or self.key_column)
