class DrsdError(Exception):
    pass


class NonPrimitivePolynomial(DrsdError, ValueError):
    pass


class DivisionByZero(DrsdError, ZeroDivisionError):
    pass


class UnsupportedParameters(DrsdError, ValueError):
    pass


class LengthMismatch(DrsdError, ValueError):
    pass


class DimensionMismatch(DrsdError, ValueError):
    pass


class NoErasures(DrsdError, ValueError):
    pass


class ConfigMismatch(DrsdError, ValueError):
    pass


class BracketError(DrsdError, RuntimeError):
    pass


class DomainError(DrsdError, ValueError):
    pass


class NonMonotoneWarning(UserWarning):
    pass
