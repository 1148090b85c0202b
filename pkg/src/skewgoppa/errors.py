"""Exception hierarchy shared by every module of the package."""


class SkewGoppaError(Exception):
    """Base class for all errors raised by skewgoppa."""


class ParameterError(SkewGoppaError, ValueError):
    """Invalid or inadmissible parameters."""


class RingMismatchError(SkewGoppaError, TypeError):
    """Operands live in different rings or fields."""


class NotInvariantError(SkewGoppaError, ValueError):
    """A modulus that must be invariant (Rg = gR) is not."""


class NotCoprimeError(SkewGoppaError, ValueError):
    """An element is not a unit modulo the requested modulus."""


class PointSetError(SkewGoppaError, ValueError):
    """Positional points are repeated, zero, or P-dependent."""


class UndecodableError(SkewGoppaError):
    """The received word has no explanation by an error of weight <= t."""


class InvalidCryptogram(SkewGoppaError):
    """Decapsulation could not decode the cryptogram."""


class KeygenError(SkewGoppaError):
    """Key generation exhausted its retry budget."""


class FormatError(SkewGoppaError, ValueError):
    """A serialized object is malformed or has the wrong version."""
