"""Exception hierarchy shared by all modules."""


class CodesError(Exception):
    """Base class for every error raised by this package."""


class BadParameters(CodesError, ValueError):
    pass


class NotIrreducible(BadParameters):
    pass


class NotPrimitive(BadParameters):
    pass


class UnsupportedCharacteristic(BadParameters):
    pass


class TooLarge(CodesError):
    pass


class DivisionByZero(CodesError, ZeroDivisionError):
    pass


class ZeroArgument(BadParameters):
    pass


class ProjectionFailure(CodesError, ArithmeticError):
    """A coefficient that should lie in the prime field did not."""


class CosetsOverlap(BadParameters):
    pass


class SubfieldViolation(BadParameters):
    pass


class NonIntegerResult(CodesError, ArithmeticError):
    """An exact character sum came out non-rational or non-divisible."""


class NonIntegerCorrelation(NonIntegerResult):
    pass


class ConditionViolated(BadParameters):
    pass


class NotANonsquare(BadParameters):
    pass


class BadGcd(BadParameters):
    pass


class BadCosetSize(BadParameters):
    pass


class BadCongruence(BadParameters):
    pass


class BadDecimation(BadParameters):
    pass


class ExtensionConstructionFailure(CodesError):
    pass
