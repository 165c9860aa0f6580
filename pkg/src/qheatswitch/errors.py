"""Exception hierarchy. Each class maps to one CLI exit code."""


class QHeatError(Exception):
    exit_code = 1


class ValidationError(QHeatError, ValueError):
    exit_code = 2


class ConfigParseError(ValidationError):
    pass


class DomainError(QHeatError, ValueError):
    exit_code = 3


class NumericalIntegrityError(QHeatError, ArithmeticError):
    exit_code = 4


class DegeneracyError(NumericalIntegrityError):
    pass


class NoRootError(NumericalIntegrityError):
    pass


class OutputError(QHeatError, OSError):
    exit_code = 5


class ModelValidityWarning(UserWarning):
    """Parameters outside the regime where the two-level model is trustworthy."""
