import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Generic, TypeVar

from pysrone.base import Arithmetic, CertificateError, PreconditionError
from pysrone.ring import FiniteRing

logger = logging.getLogger(__name__)

T = TypeVar("T")


class Side(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"


class VariantKind(str, enum.Enum):
    """Restricts the witness b to a subset of the ring."""

    FULL = "full"
    UNIT = "unit"
    IDEMPOTENT = "idempotent"
    REGULAR = "regular"
    SQUARE = "square"


class WitnessMode(str, enum.Enum):
    """PAIR certifies a + tb (or a + bt) against t, FORM3 certifies a + b - axb (or a + b - bxa) against x."""

    PAIR = "pair"
    FORM3 = "form3"


@dataclass(frozen=True)
class WitnessCertificate(Generic[T]):
    """A verified witness that `a` satisfies one instance of the stable range one condition.

    Attributes:
        mode: Whether `operand` is the comaximal partner t or the multiplier x.
        side: Right certificates multiply the witness on the right of t (or between a and x on the right).
        variant: The witness set `b` was drawn from.
        a: The certified element.
        operand: t for PAIR certificates, x for FORM3 certificates.
        b: The witness.
        unit: The unit produced by the witness.
        unit_inverse: The two-sided inverse of `unit`.
        path: The construction that produced the certificate.
    """

    mode: WitnessMode
    side: Side
    variant: VariantKind
    a: T
    operand: T
    b: T
    unit: T
    unit_inverse: T
    path: str = field(default="search", compare=False)

    def expected_unit(self, arith: Arithmetic[T]) -> T:
        a, o, b = self.a, self.operand, self.b
        if self.mode == WitnessMode.PAIR:
            return arith.add(a, arith.mul(o, b) if self.side == Side.RIGHT else arith.mul(b, o))
        if self.side == Side.RIGHT:
            return arith.sub(arith.add(a, b), arith.mul3(a, o, b))
        return arith.sub(arith.add(a, b), arith.mul3(b, o, a))

    def verify(self, arith: Arithmetic[T]) -> bool:
        """True iff the unit matches its formula, the inverse is two-sided and b lies in the variant's set."""
        one = arith.one
        return (
            arith.eq(self.expected_unit(arith), self.unit)
            and arith.eq(arith.mul(self.unit, self.unit_inverse), one)
            and arith.eq(arith.mul(self.unit_inverse, self.unit), one)
            and in_variant(arith, self.variant, self.b)
        )

    def to_payload(self, arith: Arithmetic[T]) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "side": self.side.value,
            "variant": self.variant.value,
            "a": arith.literal(self.a),
            "t" if self.mode == WitnessMode.PAIR else "x": arith.literal(self.operand),
            "b": arith.literal(self.b),
            "u": arith.literal(self.unit),
            "u_inv": arith.literal(self.unit_inverse),
            "path": self.path,
        }


def in_variant(arith: Arithmetic[T], variant: VariantKind, b: T) -> bool:
    """Membership of b in the witness set of `variant`.

    Raises:
        PreconditionError: Regular and square membership are only decidable in finite rings.
    """
    if variant == VariantKind.FULL:
        return True
    if variant == VariantKind.UNIT:
        return arith.is_unit(b)
    if variant == VariantKind.IDEMPOTENT:
        return arith.eq(arith.mul(b, b), b)
    if not isinstance(arith, FiniteRing):
        raise PreconditionError(f"{variant.value} witnesses need a finite ring")
    if variant == VariantKind.SQUARE:
        return int(b) in arith.squares  # type: ignore[call-overload]
    if variant == VariantKind.REGULAR:
        return bool((arith.vmul(arith.vmul(b, arith.elements()), b) == b).any())
    assert False, "unrecognised variant"


class CertificateLedger:
    """Verifies every certificate and inverse the package hands out, counting the outcomes."""

    def __init__(self) -> None:
        self.accepted = 0
        self.rejected = 0

    def record(self, cert: WitnessCertificate[T], arith: Arithmetic[T]) -> WitnessCertificate[T]:
        """Verifies `cert` and returns it.

        Raises:
            CertificateError: The certificate does not verify in `arith`.
        """
        if not cert.verify(arith):
            raise self.reject(f"certificate failed verification: {cert.to_payload(arith)}")
        self.accepted += 1
        return cert

    def record_inverse(self, arith: Arithmetic[T], a: T, inverse: T, one: Any = None) -> None:
        """Checks a * inverse = inverse * a = one, where `one` defaults to the identity of `arith`.

        Raises:
            CertificateError: The claimed inverse is wrong.
        """
        identity = arith.one if one is None else one
        if not (arith.eq(arith.mul(a, inverse), identity) and arith.eq(arith.mul(inverse, a), identity)):
            raise self.reject(f"{arith.literal(inverse)} is not an inverse of {arith.literal(a)}")
        self.accepted += 1

    def reject(self, message: str) -> CertificateError:
        """Counts a rejection and returns the error for the caller to raise."""
        self.rejected += 1
        logger.error("rejected certificate: %s", message)
        return CertificateError(message)

    def reset(self) -> None:
        self.accepted = 0
        self.rejected = 0


CERTIFICATES = CertificateLedger()

