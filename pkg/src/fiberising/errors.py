"""Exception hierarchy.

Numeric failures derive from :class:`NumericError`; configuration problems
from :class:`ConfigError`. The CLI maps each family to its own exit code.
"""


class FiberIsingError(Exception):
    """Base class for all package errors."""


class NumericError(FiberIsingError):
    pass


class NotSquare(NumericError, ValueError):
    pass


class NotHermitian(NumericError, ValueError):
    pass


class BadDimension(NumericError, ValueError):
    pass


class BadPair(NumericError, ValueError):
    pass


class NonConvergence(NumericError):
    pass


class DegenerateSteadyState(NumericError):
    pass


class SingularSystem(NumericError):
    pass


class NotConverged(NumericError):
    pass


class UnstableFixedPoint(NotConverged):
    """The mean-field drift has a growing mode; relaxation cannot reach the fixed point."""


class DegenerateCoupling(NumericError):
    pass


class StepTooLarge(NumericError, ValueError):
    pass


class ConfigError(FiberIsingError):
    pass


class ParseError(ConfigError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)


class ValidationError(ConfigError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SinkError(FiberIsingError):
    pass
