"""Exception hierarchy.

``ValidationError`` covers bad input (CLI exit code 1); ``NumericError``
covers failures of the numerics themselves (exit code 2).
"""


class SpinPairError(Exception):
    pass


class ValidationError(SpinPairError, ValueError):
    pass


class InvalidAxis(ValidationError):
    pass


class InvalidTemperature(ValidationError):
    pass


class NotHermitian(ValidationError):
    pass


class NumericError(SpinPairError, ArithmeticError):
    pass


class NumericOverflow(NumericError, OverflowError):
    """An exponent left the range that ``exp`` can represent safely."""


class NoConvergence(NumericError):
    pass


class NegativeEigenvalue(NumericError):
    pass


class NegativeRadicand(NumericError):
    pass


class NoEntanglement(NumericError):
    """Concurrence vanishes over the whole temperature scan."""


class NoVanishing(NumericError):
    """Concurrence is still positive at the top of the temperature scan."""
