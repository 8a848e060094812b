import abc
from typing import Any, Generic, Optional, TypeVar

T = TypeVar("T")


class Arithmetic(abc.ABC, Generic[T]):
    """Arithmetic defines the ring operations that witness constructions are written against.

    Finite rings implement it over element indices and `pysrone.intmat.MatrixRing` implements it over integer
    matrices, so one construction certifies both.
    """

    @property
    @abc.abstractmethod
    def zero(self) -> T:
        pass

    @property
    @abc.abstractmethod
    def one(self) -> T:
        pass

    @abc.abstractmethod
    def add(self, a: T, b: T) -> T:
        pass

    @abc.abstractmethod
    def neg(self, a: T) -> T:
        pass

    @abc.abstractmethod
    def mul(self, a: T, b: T) -> T:
        pass

    @abc.abstractmethod
    def is_unit(self, a: T) -> bool:
        pass

    @abc.abstractmethod
    def inverse(self, a: T) -> T:
        """Returns the two-sided inverse of `a`.

        Raises:
            NotAUnitError: `a` has no two-sided inverse.
        """

    @abc.abstractmethod
    def literal(self, a: T) -> Any:
        """Returns the JSON-friendly literal used in reports and certificates."""

    def sub(self, a: T, b: T) -> T:
        return self.add(a, self.neg(b))

    def eq(self, a: T, b: T) -> bool:
        return bool(a == b)

    def mul3(self, a: T, b: T, c: T) -> T:
        return self.mul(self.mul(a, b), c)


class SroneError(Exception):
    """Base class of every error raised by pysrone."""


class RingSpecError(SroneError):
    """The ring-spec text does not match the grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class RingAxiomError(SroneError):
    """A constructed ring violates the ring axioms."""


class NotIdempotentError(SroneError):
    """The element is required to be idempotent but is not."""


class ZeroRingError(SroneError):
    """The ideal contains 1, so the quotient would be the zero ring."""


class LiteralError(SroneError, ValueError):
    """The element literal is malformed or out of range for the ring."""

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message if offset is None else f"{message} at offset {offset}")
        self.offset = offset
        self.message = message


class NotComaximalError(SroneError):
    """The comaximality precondition aR + tR = R does not hold."""


class OracleError(SroneError):
    """A witness oracle could not produce a witness."""


class MembershipError(SroneError):
    """An element is outside the Peirce component or corner it is required to lie in."""


class NotAUnitError(SroneError):
    """The element is required to be a unit but is not."""


class CertificateError(SroneError):
    """A certificate or inverse failed post-hoc verification."""


class PreconditionError(SroneError):
    """The operation precondition does not hold."""


class UndecidableRingError(SroneError):
    """Stable range one is not decidable over the given base ring."""


class UnknownTheoremError(SroneError):
    """The theorem id is not registered in the suite."""


class BudgetExceededError(SroneError):
    """The instance budget of a check ran out."""


class ConfigError(SroneError):
    """The configuration (environment or flags) is invalid."""
