"""Exception types shared across the toolkit."""


class BergeDualError(ValueError):
    """Base class; every domain error is also a ValueError."""


class NotInvertible(BergeDualError, ArithmeticError):
    pass


class ModulusMismatch(BergeDualError, ArithmeticError):
    pass


class DegenerateModulus(BergeDualError):
    """Raised when |b^2 - ab - a^2| <= 1, where the normalization is vacuous."""


class DegenerateCable(BergeDualError):
    """Type VIII pair with s = 1: no m satisfies (m-1)s < r < ms."""


class NonPositiveWord(BergeDualError):
    pass


class DisconnectedClosure(BergeDualError):
    pass


class InvalidParameters(BergeDualError):
    pass
