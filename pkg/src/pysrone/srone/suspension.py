"""Stable range one across Peirce corners: suspension, its converse, and the Schur reduction of 2x2 blocks."""

import logging
from dataclasses import dataclass
from typing import Callable, Generic, Optional, Tuple, TypeVar

from pysrone.base import Arithmetic, MembershipError, NotIdempotentError, OracleError, UndecidableRingError
from pysrone.ring import FiniteRing

from .base import CERTIFICATES, Side, VariantKind, WitnessCertificate, WitnessMode
from .decide import has_sr1, sr1_witness
from .witness import Form3Source, transport_witness

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class CornerWitness(Generic[T]):
    """A right FORM3 witness inside the corner eRe, written with elements of the whole ring.

    `unit` = a + r - axr is a unit of eRe, with inverse `unit_inverse` relative to the identity e.
    """

    e: T
    a: T
    x: T
    r: T
    unit: T
    unit_inverse: T

    def verify(self, arith: Arithmetic[T]) -> bool:
        e = self.e
        members = (self.a, self.x, self.r, self.unit, self.unit_inverse)
        in_corner = all(arith.eq(arith.mul3(e, z, e), z) for z in members)
        expected = arith.sub(arith.add(self.a, self.r), arith.mul3(self.a, self.x, self.r))
        return (
            in_corner
            and arith.eq(expected, self.unit)
            and arith.eq(arith.mul(self.unit, self.unit_inverse), e)
            and arith.eq(arith.mul(self.unit_inverse, self.unit), e)
        )


CornerOracle = Callable[[T, T], CornerWitness[T]]
"""Produces a corner witness for (a, x), both in eRe."""


def _complement(arith: Arithmetic[T], e: T) -> T:
    if not arith.eq(arith.mul(e, e), e):
        raise NotIdempotentError(f"{arith.literal(e)} is not idempotent")
    return arith.sub(arith.one, e)


def _require(arith: Arithmetic[T], left: T, z: T, right: T, name: str) -> None:
    if not arith.eq(arith.mul3(left, z, right), z):
        raise MembershipError(f"{arith.literal(z)} is not in {name}")


def corner_oracle(ring: FiniteRing, e: int) -> CornerOracle[int]:
    """The search-based corner oracle of a finite ring: the least witness of the corner ring eRe.

    Raises:
        NotIdempotentError: `e` is not idempotent.
    """
    corner = ring.corner(e)
    members, lookup = corner.structure.members, corner.structure.lookup  # type: ignore[attr-defined]

    def oracle(a: int, x: int) -> CornerWitness[int]:
        local_a, local_x = int(lookup[a]), int(lookup[x])
        if local_a < 0 or local_x < 0:
            raise MembershipError(f"corner oracle needs a, x in eRe for e={ring.render(e)}")
        cert = sr1_witness(corner, local_a, local_x)
        if cert is None:
            raise OracleError(f"no corner witness for a={ring.render(a)} in {corner.id}")
        return CornerWitness(e, a, x, int(members[cert.b]), int(members[cert.unit]), int(members[cert.unit_inverse]))

    return oracle


def suspend_witness(arith: Arithmetic[T], e: T, a: T, p: T, s: T, corner: CornerOracle[T]) -> WitnessCertificate[T]:
    """Certifies a + p + f against s from a corner witness of a against ese, where f = 1 - e.

    With r the corner witness, a + p + f + (1 - (a + p + f)s)r splits as k + p' + f where k = a + r - a(ese)r is a
    unit of eRe and p' = p - psr - fsr lies in fRe. Such a lower triangular Peirce matrix has inverse
    k^-1 - p'k^-1 + f.

    Args:
        arith: The ring arithmetic.
        e: An idempotent.
        a: An element of eRe.
        p: An element of fRe.
        s: Any element.
        corner: Supplies the corner witness.

    Returns:
        WitnessCertificate: A right FORM3 certificate for a + p + f against s.

    Raises:
        NotIdempotentError: `e` is not idempotent.
        MembershipError: a is outside eRe or p outside fRe.
        CertificateError: The corner witness does not verify.
    """
    f = _complement(arith, e)
    _require(arith, e, a, e, "eRe")
    _require(arith, f, p, e, "fRe")

    witness = corner(a, arith.mul3(e, s, e))
    if not witness.verify(arith):
        raise CERTIFICATES.reject(f"corner witness failed verification for a={arith.literal(a)}")
    r, k, k_inv = witness.r, witness.unit, witness.unit_inverse

    alpha = arith.add(arith.add(a, p), f)
    lower = arith.sub(arith.sub(p, arith.mul3(p, s, r)), arith.mul3(f, s, r))
    unit = arith.add(arith.add(k, lower), f)
    inverse = arith.add(arith.sub(k_inv, arith.mul(lower, k_inv)), f)
    cert = WitnessCertificate(
        WitnessMode.FORM3, Side.RIGHT, VariantKind.FULL, alpha, s, r, unit, inverse, path="suspension"
    )
    return CERTIFICATES.record(cert, arith)


def extract_corner_unit(arith: Arithmetic[T], e: T, alpha: T) -> Tuple[T, T]:
    """Reads a unit of eRe off a unit alpha whose Peirce matrix is upper triangular with f in the corner.

    Given f alpha e = 0 and f alpha f = f, both e alpha e and e alpha^-1 e lie in eRe and are mutually inverse there.

    Returns:
        The pair (k, k^-1) with k = e alpha e.

    Raises:
        MembershipError: alpha does not have the required Peirce shape.
        NotAUnitError: alpha is not a unit.
        CertificateError: The extracted pair is not mutually inverse in eRe.
    """
    f = _complement(arith, e)
    if not arith.eq(arith.mul3(f, alpha, e), arith.zero) or not arith.eq(arith.mul3(f, alpha, f), f):
        raise MembershipError(f"{arith.literal(alpha)} is not of the shape [[k, q], [0, f]]")
    k = arith.mul3(e, alpha, e)
    k_inv = arith.mul3(e, arith.inverse(alpha), e)
    CERTIFICATES.record_inverse(arith, k, k_inv, one=e)
    return k, k_inv


def desuspend_witness(arith: Arithmetic[T], e: T, a: T, p: T, s: T, source: Form3Source[T]) -> CornerWitness[T]:
    """The converse of `suspend_witness`: a corner witness of a against s, from witnesses of a + p + f.

    The source is asked for a + p + f against (1 - p)(s + f). Right multiplication by the unit 1 - p turns that into a
    witness t for a + f against s + f, and the unit a + f + (e - as)t has Peirce shape [[k, q], [0, f]] with
    k = a + (e - as)ete.

    Raises:
        MembershipError: a or s is outside eRe, or p is outside fRe.
        OracleError: The source has no witness.
    """
    f = _complement(arith, e)
    _require(arith, e, a, e, "eRe")
    _require(arith, e, s, e, "eRe")
    _require(arith, f, p, e, "fRe")

    one_minus_p = arith.sub(arith.one, p)
    suspended = arith.add(arith.add(a, p), f)
    found = source(suspended, arith.mul(one_minus_p, arith.add(s, f)))
    if found is None:
        raise OracleError(f"no witness for the suspension of {arith.literal(a)}")
    cert = transport_witness(arith, found, arith.one, one_minus_p)

    k, k_inv = extract_corner_unit(arith, e, cert.unit)
    witness = CornerWitness(e, a, s, arith.mul3(e, cert.b, e), k, k_inv)
    if not witness.verify(arith):
        raise CERTIFICATES.reject(f"desuspended witness failed verification for a={arith.literal(a)}")
    return witness


@dataclass(frozen=True)
class SchurReduction(Generic[T]):
    """[[1, a], [b, c]] over M(2, S) reduces to the datum c - ba of S.

    `verdict` is the stable range one verdict of the datum in S, and so of the block matrix in M(2, S).
    """

    datum: T
    verdict: Optional[bool]


def schur_reduce(ring: Arithmetic[T], a: T, b: T, c: T) -> SchurReduction[T]:
    """Reduces [[1, a], [b, c]] to c - ba and decides it.

    Args:
        ring: A finite ring, or `pysrone.intmat.MatrixRing`.
        a: The upper right block.
        b: The lower left block.
        c: The lower right block.

    Raises:
        UndecidableRingError: `ring` is neither a finite ring nor an integer matrix ring.
    """
    # Imported here: intmat builds on srone.
    from pysrone.intmat import MatrixRing, sr1_int

    datum = ring.sub(c, ring.mul(b, a))
    if isinstance(ring, FiniteRing):
        verdict = has_sr1(ring, datum)  # type: ignore[arg-type]
    elif isinstance(ring, MatrixRing):
        verdict = sr1_int(datum).sr1  # type: ignore[arg-type]
    else:
        raise UndecidableRingError(f"stable range one is not decidable over {type(ring).__name__}")
    logger.debug("schur reduction datum=%s verdict=%s", ring.literal(datum), verdict)
    return SchurReduction(datum, verdict)
