"""Exception hierarchy shared by all modules."""


class AltBaseError(Exception):
    """Base class for every error raised by the toolkit."""


# numberfield
class NotSquarefree(AltBaseError):
    pass


class NoRootInInterval(AltBaseError):
    pass


class MultipleRootsInInterval(AltBaseError):
    pass


class RootNotGreaterThanOne(AltBaseError):
    pass


class DivisionByZero(AltBaseError, ZeroDivisionError):
    pass


class FieldMismatch(AltBaseError):
    pass


class RootEnclosureFailure(AltBaseError):
    pass


class Reducible(AltBaseError):
    """The defining polynomial has a rational root, so it is not irreducible."""


class IrreducibilityWarning(UserWarning):
    """Raised as a warning when irreducibility of a minimal polynomial was assumed."""


# expansion
class InputOutOfRange(AltBaseError):
    pass


class QuasiGreedyNotPeriodic(AltBaseError):
    pass


class InvalidBase(AltBaseError):
    pass


# spectrum
class ElementCapExceeded(AltBaseError):
    pass


class TooFewElements(AltBaseError):
    pass


class NotPisot(AltBaseError):
    pass


# automata
class ZeroNotInAlphabet(AltBaseError):
    pass


# polysystem
class FirstDigitZero(AltBaseError):
    pass


class LeadingCoefficientUnexpected(AltBaseError):
    pass


class DeltaNotRoot(AltBaseError):
    pass


class RankNotPminus1(AltBaseError):
    pass


class VerificationFailed(AltBaseError):
    pass


# normalization
class ValueOutOfRange(AltBaseError):
    pass


class CapExceeded(AltBaseError):
    def __init__(self, message, prefix=None):
        super().__init__(message)
        self.prefix = prefix
