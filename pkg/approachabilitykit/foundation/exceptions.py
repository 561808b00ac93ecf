# -*- coding: utf-8 -*-
"""
Errors raised by the 'approachabilitykit' python library.
"""


class ApproachabilityKitError(Exception):
    """
    Base class of every error the library raises on purpose.
    """


class DimensionError(ApproachabilityKitError):
    pass


class InvalidParameterError(ApproachabilityKitError):
    pass


class ConvergenceError(ApproachabilityKitError):
    """
    An iterative solver ran out of iterations. The best iterate found so
    far is kept on the error so callers can decide what to do with it.
    """

    def __init__(self, message, best_iterate=None, best_value=None):
        super(ConvergenceError, self).__init__(message)
        self.best_iterate = best_iterate
        self.best_value = best_value


class InfeasibleConstraintError(ApproachabilityKitError):
    pass


class OracleError(ApproachabilityKitError):
    pass


class AdversaryError(ApproachabilityKitError):
    pass


class AuditError(ApproachabilityKitError):
    pass


class CertificateError(ApproachabilityKitError):
    pass


class InequalityViolationError(ApproachabilityKitError):

    def __init__(self, message, slack=None, round_index=None):
        super(InequalityViolationError, self).__init__(message)
        self.slack = slack
        self.round_index = round_index


class UnknownExampleError(ApproachabilityKitError):
    pass


class ConfigError(ApproachabilityKitError):
    """
    A configuration value is missing, unknown or malformed. ``section``
    and ``key`` name the offending entry.
    """

    def __init__(self, message, section=None, key=None):
        super(ConfigError, self).__init__(message)
        self.section = section
        self.key = key


class RateFitError(ApproachabilityKitError):
    pass


class RecordFormatError(ApproachabilityKitError):
    pass
