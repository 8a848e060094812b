"""2x2 block matrices over a ring, the Banachiewicz inversion and Peirce-matrix inverses."""

import logging
from dataclasses import dataclass
from typing import Any, Generic, Optional, Tuple, TypeVar

from pysrone.base import Arithmetic, MembershipError, NotAUnitError, UndecidableRingError
from pysrone.ring import FiniteRing, construct_ring
from pysrone.srone import CERTIFICATES

from .checks import ElementClass, in_class

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class Block2(Generic[T]):
    """The block matrix [[u, q], [p, r]]."""

    u: T
    q: T
    p: T
    r: T


class BlockArithmetic(Arithmetic[Block2[T]]):
    """M(2, S) written blockwise, for any base arithmetic S."""

    def __init__(self, base: Arithmetic[T]):
        self.base = base

    @property
    def zero(self) -> Block2[T]:
        zero = self.base.zero
        return Block2(zero, zero, zero, zero)

    @property
    def one(self) -> Block2[T]:
        zero, one = self.base.zero, self.base.one
        return Block2(one, zero, zero, one)

    def add(self, a: Block2[T], b: Block2[T]) -> Block2[T]:
        s = self.base
        return Block2(s.add(a.u, b.u), s.add(a.q, b.q), s.add(a.p, b.p), s.add(a.r, b.r))

    def neg(self, a: Block2[T]) -> Block2[T]:
        s = self.base
        return Block2(s.neg(a.u), s.neg(a.q), s.neg(a.p), s.neg(a.r))

    def mul(self, a: Block2[T], b: Block2[T]) -> Block2[T]:
        s = self.base
        return Block2(
            s.add(s.mul(a.u, b.u), s.mul(a.q, b.p)),
            s.add(s.mul(a.u, b.q), s.mul(a.q, b.r)),
            s.add(s.mul(a.p, b.u), s.mul(a.r, b.p)),
            s.add(s.mul(a.p, b.q), s.mul(a.r, b.r)),
        )

    def eq(self, a: Block2[T], b: Block2[T]) -> bool:
        s = self.base
        return s.eq(a.u, b.u) and s.eq(a.q, b.q) and s.eq(a.p, b.p) and s.eq(a.r, b.r)

    def is_unit(self, a: Block2[T]) -> bool:
        try:
            self.inverse(a)
        except NotAUnitError:
            return False
        return True

    def inverse(self, a: Block2[T]) -> Block2[T]:
        """Inverts through the Schur complement of u, or through the matrix ring M(2, S) when u is not a unit.

        Raises:
            NotAUnitError: The block matrix is not invertible.
            UndecidableRingError: u is not a unit and S is not a finite ring.
        """
        if self.base.is_unit(a.u):
            inverse = _schur_inverse(self.base, a)
            if inverse is None:
                raise NotAUnitError(f"{self.literal(a)} is not invertible")
            return inverse
        if not isinstance(self.base, FiniteRing):
            raise UndecidableRingError("block inversion with a non-unit corner needs a finite base ring")
        matrices = matrix_ring(self.base)
        inverse_index = matrices.inverse(matrices.encode(self.matrix_literal(a)))  # type: ignore[arg-type]
        return self._from_literal(matrices.decode(inverse_index))  # type: ignore[return-value]

    def literal(self, a: Block2[T]) -> Any:
        s = self.base
        return [[s.literal(a.u), s.literal(a.q)], [s.literal(a.p), s.literal(a.r)]]

    def matrix_literal(self, a: Block2[int]) -> Any:
        """The element literal of the assembled matrix in M(2, S), for a finite base S."""
        base = self.base
        assert isinstance(base, FiniteRing)
        return [[base.decode(a.u), base.decode(a.q)], [base.decode(a.p), base.decode(a.r)]]

    def _from_literal(self, rows: Any) -> Block2[int]:
        base = self.base
        assert isinstance(base, FiniteRing)
        (u, q), (p, r) = rows
        return Block2(base.encode(u), base.encode(q), base.encode(p), base.encode(r))


def matrix_ring(base: FiniteRing) -> FiniteRing:
    """M(2, S) for a finite ring S, built from its ring-spec."""
    return construct_ring(f"M(2,{base.id})")


def _schur_inverse(s: Arithmetic[T], a: Block2[T]) -> Optional[Block2[T]]:
    # [[u^-1 + u^-1 q c^-1 p u^-1, -u^-1 q c^-1], [-c^-1 p u^-1, c^-1]] for the Schur complement c = r - p u^-1 q.
    u_inv = s.inverse(a.u)
    complement = s.sub(a.r, s.mul3(a.p, u_inv, a.q))
    if not s.is_unit(complement):
        return None
    c_inv = s.inverse(complement)
    upper = s.mul3(u_inv, a.q, c_inv)
    lower = s.mul3(c_inv, a.p, u_inv)
    return Block2(s.add(u_inv, s.mul(upper, s.mul(a.p, u_inv))), s.neg(upper), s.neg(lower), c_inv)


@dataclass(frozen=True)
class BanachiewiczVerdict(Generic[T]):
    """Class membership of [[u, q], [p, r]] as decided by its Schur complement r - pu^-1q.

    `inverse` holds the verified inverse blocks for the unit class when the matrix is invertible.
    """

    complement: T
    member: bool
    inverse: Optional[Block2[T]]


def banachiewicz(s: FiniteRing, block: Block2[int], cls: ElementClass = ElementClass.UNIT) -> BanachiewiczVerdict[int]:
    """Decides the class of a block matrix with invertible upper left corner from its Schur complement.

    Args:
        s: The base ring.
        block: The block datum; `block.u` must be a unit of `s`.
        cls: One of unit, reg or ureg.

    Returns:
        BanachiewiczVerdict: The complement, its class membership and, for units, the inverse blocks.

    Raises:
        NotAUnitError: `block.u` is not a unit.
        CertificateError: The assembled inverse fails the multiplication check.
    """
    u_inv = s.inverse(block.u)
    complement = s.sub(block.r, s.mul3(block.p, u_inv, block.q))
    member = in_class(s, complement, cls)

    inverse = None
    if cls == ElementClass.UNIT and member:
        inverse = _schur_inverse(s, block)
        assert inverse is not None
        CERTIFICATES.record_inverse(BlockArithmetic(s), block, inverse)
    return BanachiewiczVerdict(complement, member, inverse)


def block_inverse_check(s: FiniteRing, block: Block2[int], cls: ElementClass = ElementClass.UNIT) -> Tuple[bool, bool]:
    """Returns the Schur-complement verdict and the direct membership of the assembled matrix in M(2, S)."""
    matrices = matrix_ring(s)
    direct = in_class(matrices, matrices.encode(BlockArithmetic(s).matrix_literal(block)), cls)
    return banachiewicz(s, block, cls).member, direct


def peirce_inverse(arith: Arithmetic[T], e: T, x: T, p: T, y: T) -> T:
    """Inverts x + p + y for x a unit of eRe, p in fRe and y a unit of fRf, where f = 1 - e.

    The corner inverses are read off x + f and e + y, which are units of the whole ring. The inverse is x' + p' + y'
    with p' = -y'px'.

    Raises:
        MembershipError: One of x, p, y is outside its Peirce component.
        NotAUnitError: x or y is not a unit of its corner.
        CertificateError: The assembled inverse fails the multiplication check.
    """
    f = arith.sub(arith.one, e)
    for left, z, right, name in ((e, x, e, "eRe"), (f, p, e, "fRe"), (f, y, f, "fRf")):
        if not arith.eq(arith.mul3(left, z, right), z):
            raise MembershipError(f"{arith.literal(z)} is not in {name}")

    x_inv = arith.mul3(e, arith.inverse(arith.add(x, f)), e)
    y_inv = arith.mul3(f, arith.inverse(arith.add(e, y)), f)
    p_inv = arith.neg(arith.mul3(y_inv, p, x_inv))
    inverse = arith.add(arith.add(x_inv, p_inv), y_inv)
    CERTIFICATES.record_inverse(arith, arith.add(arith.add(x, p), y), inverse)
    return inverse
