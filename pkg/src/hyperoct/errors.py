"""Exception hierarchy shared by every module of the package."""


class HyperoctError(ValueError):
    """Base class for all errors raised by hyperoct."""


# group arithmetic
class RankMismatch(HyperoctError):
    pass


class NotAPermutation(HyperoctError):
    pass


class ZeroEntry(HyperoctError):
    pass


# codec
class DigitOutOfRange(HyperoctError):
    pass


class TooManyDigits(HyperoctError):
    pass


class SignedInput(HyperoctError):
    pass


class ValueOutOfRange(HyperoctError):
    pass


class BlockTooLarge(HyperoctError):
    pass


# protocols and base generation
class DegenerateBase(HyperoctError):
    pass


class SpecInfeasible(HyperoctError):
    pass


class NotPrime(HyperoctError):
    pass


# discrete-log solvers
class NotFound(HyperoctError):
    """No exponent exists (or none below the search bound)."""


class FactorizationMissing(HyperoctError):
    pass


class ModuliNotCoprime(HyperoctError):
    pass


class FormatError(HyperoctError):
    """Malformed text or binary artifact."""
