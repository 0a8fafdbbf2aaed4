##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import copy
import logging
from collections import OrderedDict

from ..helpers.SurvivalLibLog import DEFAULTLOG


class Spec(object):
    """Abstract base class for option specifications.

    Subclasses declare their parameters in PARAMS, an ordered mapping of
    parameter name to a dict with keys:

        type      callable used to validate/convert a non-null value
        default   value used when the parameter is not given
        nullable  whether None is an accepted value (default False)

    Parameters not declared in PARAMS are rejected.
    """

    PARAMS = OrderedDict()
    LOG = DEFAULTLOG
    source_location = None
    speclog = None

    def __init__(self, _source_location=None, log=None, **kwargs):
        if log:
            self.LOG = log

        class LogAdapter(logging.LoggerAdapter):
            def process(self, msg, kwargs):
                return '{} {}'.format(self.extra['context'], msg), kwargs

        self.source_location = _source_location
        self.speclog = LogAdapter(self.LOG, {'context': self})

        for key in kwargs:
            if key not in self.PARAMS:
                raise ValueError(
                    "Unrecognized parameter '{}' found while processing {}".format(
                        key, self.__class__.__name__))

        for name, attributes in self.PARAMS.items():
            value = kwargs.get(name, copy.deepcopy(attributes.get('default')))
            setattr(self, name, self.convert(name, value))

        self.validate()

    def __str__(self):
        parts = []
        if self.source_location:
            parts.append(self.source_location)
        parts.append(getattr(self, 'name', None) or self.__class__.__name__)
        return "{}({})".format(self.__class__.__name__, ' - '.join(parts))

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    @classmethod
    def convert(cls, name, value):
        """Return value converted by the declared type of parameter name."""
        attributes = cls.PARAMS[name]
        if value is None:
            if attributes.get('nullable') or attributes.get('default') is None:
                return None
            raise ValueError('{} parameter {} cannot be None'.format(cls.__name__, name))
        converter = attributes.get('type')
        if converter is None:
            return value
        try:
            return converter(value)
        except ValueError as e:
            raise ValueError('{} parameter {}: {}'.format(cls.__name__, name, e))

    def validate(self):
        """Check constraints spanning several parameters."""

    def replace(self, **changes):
        """Return a copy with the given parameters replaced."""
        params = self.to_dict(plain=False)
        params.update(changes)
        return self.__class__(_source_location=self.source_location, **params)

    def to_dict(self, plain=True):
        """Return effective parameter values in declaration order."""
        data = OrderedDict()
        for name in self.PARAMS:
            value = getattr(self, name)
            data[name] = self.plain_value(value) if plain else value
        return data

    @classmethod
    def plain_value(cls, value):
        if isinstance(value, Spec):
            return value.to_dict()
        if isinstance(value, bool) or value is None:
            return value
        if isinstance(value, str):
            return str(value)
        if isinstance(value, int):
            return int(value)
        if isinstance(value, float):
            return float(value)
        if isinstance(value, dict):
            return OrderedDict((str(k), cls.plain_value(v)) for k, v in value.items())
        if isinstance(value, (list, tuple)):
            return [cls.plain_value(v) for v in value]
        return value

    @classmethod
    def from_dict(cls, data, source=None):
        """Build an instance from a (possibly empty) mapping."""
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ValueError('{} expects a mapping, got {}'.format(cls.__name__, type(data).__name__))
        return cls(_source_location=source, **dict(data))
