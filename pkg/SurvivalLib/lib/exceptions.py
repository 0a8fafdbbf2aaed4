##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Exceptions raised by SurvivalLib.

DataError covers anything wrong with the inputs; NumericError covers
fitting failures on otherwise valid inputs. The command driver maps the two
families onto distinct exit codes.
"""


class SurvivalLibError(Exception):
    """Base class for library errors."""


class DataError(SurvivalLibError):
    """Input data does not satisfy a contract."""


class IngestError(DataError):
    """A table could not be loaded, merged or preprocessed."""

    def __init__(self, message, line=None, column=None):
        super(IngestError, self).__init__(message)
        self.line = line
        self.column = column


class MissingArtifactError(DataError):
    """A file produced by an earlier command is absent."""


class NumericError(SurvivalLibError):
    """A numerical procedure failed."""


class ConvergenceError(NumericError):
    """Iterative fitting stopped before convergence."""

    def __init__(self, message, last_iterate=None, iterations=None):
        super(ConvergenceError, self).__init__(message)
        self.last_iterate = last_iterate
        self.iterations = iterations


class SingularMatrixError(NumericError):
    """Information matrix could not be factorised."""

    def __init__(self, message, features=None):
        super(SingularMatrixError, self).__init__(message)
        self.features = list(features or [])
