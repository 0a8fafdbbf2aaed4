##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
from collections import OrderedDict

from ..base.types import OpenUnitFloat, PositiveFloat
from .RsfOptions import seed_value
from .Spec import Spec

DEFAULT_MISSING_VALUES = ['', 'NA', '[Not Available]']


def string_list(value):
    if isinstance(value, str):
        value = [x.strip() for x in value.split(',') if x.strip()]
    if not isinstance(value, (list, tuple)):
        raise ValueError('expected a list of names, got {!r}'.format(value))
    names = [str(x) for x in value]
    if len(set(names)) != len(names):
        raise ValueError('duplicate names in {!r}'.format(names))
    return names


def string_map(value):
    if not isinstance(value, dict):
        raise ValueError('expected a mapping, got {!r}'.format(value))
    return OrderedDict((str(k), str(v)) for k, v in value.items())


def label_maps(value):
    """column -> {category: integer}"""
    if not isinstance(value, dict):
        raise ValueError('expected a mapping of column to category map, got {!r}'.format(value))
    maps = OrderedDict()
    for column, mapping in value.items():
        if not isinstance(mapping, dict) or not mapping:
            raise ValueError('label map for {} must be a non-empty mapping'.format(column))
        codes = OrderedDict()
        for category, code in mapping.items():
            if isinstance(code, bool) or int(code) != code:
                raise ValueError('label map for {} has non-integer code {!r}'.format(column, code))
            codes[str(category)] = int(code)
        maps[str(column)] = codes
    return maps


def one_hot_specs(value):
    """column -> {'reference': category, 'categories': [...] or None}

    A bare string value is shorthand for the reference category.
    """
    if not isinstance(value, dict):
        raise ValueError('expected a mapping of column to reference category, got {!r}'.format(value))
    specs = OrderedDict()
    for column, entry in value.items():
        if isinstance(entry, dict):
            reference = entry.get('reference')
            categories = entry.get('categories')
            unknown = set(entry) - set(['reference', 'categories'])
            if unknown:
                raise ValueError('one_hot {}: unrecognized keys {}'.format(column, sorted(unknown)))
        else:
            reference, categories = entry, None
        if reference is None:
            raise ValueError('one_hot {} needs a reference category'.format(column))
        reference = str(reference)
        if categories is not None:
            categories = [str(x) for x in categories]
            if reference not in categories:
                raise ValueError('one_hot {}: reference {} not among categories {}'.format(
                    column, reference, categories))
        specs[str(column)] = OrderedDict([('reference', reference), ('categories', categories)])
    return specs


class PreprocessSpec(Spec):
    """Clinical table preprocessing protocol

        :param time_column: Follow-up time column, in days
        :type time_column: str
        :param event_column: Event indicator column (1 death, 0 censored)
        :type event_column: str
        :param numeric_features: Numeric columns kept and median-imputed
        :type numeric_features: list(str)
        :param label_encode: column -> category -> integer code
        :type label_encode: dict
        :param one_hot: column -> reference category (or reference/categories)
        :type one_hot: dict
        :param rename: source column -> name used by the run
        :type rename: dict
        :param outlier_column: Column trimmed by the IQR fences
        :type outlier_column: str
        :param iqr_multiplier: Fence width in IQRs
        :type iqr_multiplier: float
        :param split_ratio: Training share of each event stratum
        :type split_ratio: float
        :param seed: Split seed
        :type seed: int
        :param missing_values: Cell strings read as missing
        :type missing_values: list(str)
        :param impute_full_table: Fit medians on every row instead of the training rows
        :type impute_full_table: bool
        :param flag_missing: Columns whose missingness may carry meaning
        :type flag_missing: list(str)
    """

    name = 'preprocess'
    PARAMS = OrderedDict([
        ('time_column', {'type': str, 'default': 'OS.time'}),
        ('event_column', {'type': str, 'default': 'OS'}),
        ('numeric_features', {'type': string_list,
                              'default': ['PFI.time', 'days_to_new_tumor_event', 'age_at_diagnosis']}),
        ('label_encode', {'type': label_maps,
                          'default': OrderedDict([('gender', OrderedDict([('FEMALE', 0), ('MALE', 1)]))])}),
        ('one_hot', {'type': one_hot_specs,
                     'default': OrderedDict([('residual_tumor', OrderedDict([
                         ('reference', 'R0'), ('categories', ['R0', 'R1', 'R2', 'RX'])]))])}),
        ('rename', {'type': string_map, 'default': OrderedDict()}),
        ('outlier_column', {'type': str, 'default': 'OS.time'}),
        ('iqr_multiplier', {'type': PositiveFloat, 'default': 1.5}),
        ('split_ratio', {'type': OpenUnitFloat, 'default': 0.8}),
        ('seed', {'type': seed_value, 'default': 0}),
        ('missing_values', {'type': list, 'default': list(DEFAULT_MISSING_VALUES)}),
        ('impute_full_table', {'type': bool, 'default': False}),
        ('flag_missing', {'type': string_list, 'default': ['days_to_new_tumor_event']}),
    ])

    def validate(self):
        self.missing_values = [str(x) for x in self.missing_values]
        labels = set([self.time_column, self.event_column])
        overlap = labels.intersection(self.source_columns(include_labels=False))
        if overlap:
            raise ValueError('label columns cannot also be features: {}'.format(sorted(overlap)))

    def source_columns(self, include_labels=True):
        """Return columns the pipeline reads, labels first."""
        columns = []
        if include_labels:
            columns.extend([self.time_column, self.event_column])
        for column in list(self.numeric_features) + list(self.label_encode) + list(self.one_hot):
            if column not in columns:
                columns.append(column)
        return columns

    @staticmethod
    def encoded_name(column):
        return '{}_encoded'.format(column)

    @staticmethod
    def indicator_name(column, category):
        return '{}_{}'.format(column, category)
