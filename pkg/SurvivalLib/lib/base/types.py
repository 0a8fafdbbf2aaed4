##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import math

from ..helpers.SurvivalLibLog import DEFAULTLOG as LOG


class Choice(str):
    """String restricted to a fixed vocabulary"""
    LOG = LOG
    label = 'choice'
    _valid = ()
    _aliases = {}

    def __new__(cls, value):
        return str.__new__(cls, cls.validate(value))

    @classmethod
    def validate(cls, value):
        if value is None:
            raise ValueError('{} cannot be None'.format(cls.label))
        if not isinstance(value, str):
            raise ValueError('Invalid type ({}) given for {}'.format(type(value).__name__, cls.label))
        normal = value.strip().lower()
        if normal in cls._aliases:
            cls.LOG.warning('Normalizing {} "{}" to "{}"'.format(cls.label, value, cls._aliases[normal]))
            normal = cls._aliases[normal]
        if normal not in cls._valid:
            raise ValueError('Invalid value ({}) given for {}, must be one of: {}'.format(
                value, cls.label, ', '.join(cls._valid)))
        return normal


class TieMethod(Choice):
    """Partial likelihood approximation for tied event times"""
    label = 'tie_method'
    _valid = ('efron', 'breslow')


class CiMethod(Choice):
    """Transform used for Kaplan-Meier confidence bounds"""
    label = 'ci_method'
    _valid = ('log-log', 'linear')
    _aliases = {'loglog': 'log-log', 'log_log': 'log-log', 'plain': 'linear'}


class TableFormat(Choice):
    """On-disk layout of an input table"""
    label = 'format'
    _valid = ('tsv', 'json')
    _aliases = {'tab': 'tsv', 'txt': 'tsv', 'json-records': 'json'}


class OpenUnitFloat(float):
    """Real strictly between 0 and 1"""
    label = 'value'

    def __new__(cls, value):
        return float.__new__(cls, cls.validate(value))

    @classmethod
    def validate(cls, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ValueError('Invalid {} ({!r}), expected a number'.format(cls.label, value))
        if not 0.0 < value < 1.0:
            raise ValueError('Invalid {} ({}), must lie strictly between 0 and 1'.format(cls.label, value))
        return value


class PositiveFloat(float):
    """Finite real greater than 0"""
    label = 'value'

    def __new__(cls, value):
        return float.__new__(cls, cls.validate(value))

    @classmethod
    def validate(cls, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ValueError('Invalid {} ({!r}), expected a number'.format(cls.label, value))
        if not (value > 0 and math.isfinite(value)):
            raise ValueError('Invalid {} ({}), must be positive'.format(cls.label, value))
        return value


class PositiveInt(int):
    """Integer of at least 1"""
    label = 'value'

    def __new__(cls, value):
        return int.__new__(cls, cls.validate(value))

    @classmethod
    def validate(cls, value):
        if isinstance(value, bool):
            raise ValueError('Invalid {} ({!r}), expected an integer'.format(cls.label, value))
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise ValueError('Invalid {} ({!r}), expected an integer'.format(cls.label, value))
        if number != value and not isinstance(value, str):
            raise ValueError('Invalid {} ({!r}), expected an integer'.format(cls.label, value))
        if number < 1:
            raise ValueError('Invalid {} ({}), must be at least 1'.format(cls.label, number))
        return number
