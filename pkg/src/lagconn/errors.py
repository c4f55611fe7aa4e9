"""Exception hierarchy shared by all lagconn modules."""

from __future__ import annotations


class LagconnError(Exception):
    """Base class for every error raised by this package."""


# --- expression layer ---------------------------------------------------


class ExprSyntaxError(LagconnError):
    def __init__(self, message: str, position: int, expected: str):
        super().__init__(f"{message} at position {position} (expected {expected})")
        self.position = position
        self.expected = expected


class UnknownIdentifierError(LagconnError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown identifier {name!r} at position {position}")
        self.name = name
        self.position = position


class PoleAtPointError(LagconnError):
    """Denominator vanishes at the evaluation point."""


class OutOfDomainError(LagconnError):
    """Point lies outside the chart's open box."""


class MonomialCeilingError(LagconnError):
    """A polynomial exceeded the configured monomial-count ceiling."""


# --- field / form layer -------------------------------------------------


class DegreeMismatchError(LagconnError):
    pass


class ChartNotFiberedError(LagconnError):
    pass


class NotVerticalError(LagconnError):
    pass


class RankDeficientError(LagconnError):
    pass


# --- connection layer ---------------------------------------------------


class ScopeMismatchError(LagconnError):
    pass


class OutOfScopeError(LagconnError):
    pass


class DegeneratePairingError(LagconnError):
    pass


class PoleAtSampleError(LagconnError):
    pass


class WeightsNotPartitionError(LagconnError):
    pass


class RankMismatchError(LagconnError):
    pass


class PreconditionViolatedError(LagconnError):
    pass


# --- structure layer ----------------------------------------------------


class DegenerateAtPointError(LagconnError):
    pass


class NotInRangeError(LagconnError):
    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class DimensionTooLargeError(LagconnError):
    pass


# --- geodesic layer -----------------------------------------------------


class LeftDomainError(LagconnError):
    pass


class PoleOnPathError(LagconnError):
    pass


class NotFlatOrTorsionfulError(LagconnError):
    pass


class NotSolvableInClosedFormError(LagconnError):
    pass


# --- structure-map layer ------------------------------------------------


class NotHorizontalError(LagconnError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLeafConstantError(LagconnError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class BasicnessFailedError(LagconnError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# --- scenario layer -----------------------------------------------------


class SchemaError(LagconnError):
    def __init__(self, path: str, field: str, message: str):
        super().__init__(f"{path}: field {field!r}: {message}")
        self.path = path
        self.field = field


class ExprError(LagconnError):
    """Wraps a parse failure with the scenario location it came from."""

    def __init__(self, path: str, field: str, source: str, cause: Exception):
        super().__init__(f"{path}: field {field!r}: cannot parse {source!r}: {cause}")
        self.path = path
        self.field = field
        self.source = source
