"""Exception types shared across the package."""


class PcmonoError(Exception):
    """Base class for all errors raised by pcmono."""


class ZeroInput(PcmonoError, ValueError):
    pass


class ZeroPolynomial(PcmonoError, ValueError):
    pass


class DegreeTooSmall(PcmonoError, ValueError):
    pass


class NotMonic(PcmonoError, ValueError):
    pass


class BadModulus(PcmonoError, ValueError):
    pass


class CompositeModulus(BadModulus):
    pass


class ModulusMismatch(PcmonoError, ValueError):
    pass


class NonMonicQuotient(PcmonoError, ValueError):
    pass


class NotPeriodic(PcmonoError, ValueError):
    """gcd(m, f(0)) != 1, so the recurrence is not purely periodic mod m."""


class NotIrreducible(PcmonoError, ValueError):
    pass


class NotAMultiple(PcmonoError, ValueError):
    pass


class FactorizationIncomplete(PcmonoError, RuntimeError):
    pass


class CapExceeded(PcmonoError, RuntimeError):
    """Brute-force iteration hit its step cap before the state repeated."""

    def __init__(self, modulus, cap):
        super().__init__(f"no period found modulo {modulus} within {cap} steps")
        self.modulus = modulus
        self.cap = cap


class NonExactDivision(PcmonoError, ArithmeticError):
    """Internal consistency failure; indicates a bug, never a user error."""


class PreconditionNotEstablished(PcmonoError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnknownFamily(PcmonoError, KeyError):
    pass


class MissingParam(PcmonoError, KeyError):
    pass


class ParseError(PcmonoError, ValueError):
    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (at offset {offset})")
        self.offset = offset
