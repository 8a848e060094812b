from dataclasses import dataclass
from typing import Tuple

from pysrone.base import MembershipError, NotIdempotentError

from .descriptor import FiniteRing


@dataclass(frozen=True)
class PeirceSplit:
    """The Peirce decomposition R = eRe + eRf + fRe + fRf for complementary idempotents e and f = 1-e."""

    ring: FiniteRing
    e: int
    f: int

    def components(self, r: int) -> Tuple[int, int, int, int]:
        """Returns (ere, erf, fre, frf); their sum is r."""
        mul3 = self.ring.mul3
        e, f = self.e, self.f
        return mul3(e, r, e), mul3(e, r, f), mul3(f, r, e), mul3(f, r, f)

    def in_ere(self, r: int) -> bool:
        return self.ring.mul3(self.e, r, self.e) == r

    def in_erf(self, r: int) -> bool:
        return self.ring.mul3(self.e, r, self.f) == r

    def in_fre(self, r: int) -> bool:
        return self.ring.mul3(self.f, r, self.e) == r

    def in_frf(self, r: int) -> bool:
        return self.ring.mul3(self.f, r, self.f) == r

    def require(self, component: str, r: int) -> None:
        """Raises MembershipError unless r lies in the named component ("eRe", "eRf", "fRe" or "fRf")."""
        test = {"eRe": self.in_ere, "eRf": self.in_erf, "fRe": self.in_fre, "fRf": self.in_frf}[component]
        if not test(r):
            raise MembershipError(f"{self.ring.render(r)} is not in {component} for e={self.ring.render(self.e)}")

    @property
    def corner(self) -> FiniteRing:
        """eRe as a ring with identity e."""
        return self.ring.corner(self.e)

    @property
    def complement_corner(self) -> FiniteRing:
        """fRf as a ring with identity f."""
        return self.ring.corner(self.f)


def peirce_split(ring: FiniteRing, e: int) -> PeirceSplit:
    """Splits `ring` along the idempotent `e`.

    Raises:
        NotIdempotentError: `e` is not idempotent.
    """
    if not ring.is_idempotent(e):
        raise NotIdempotentError(f"{ring.render(e)} is not idempotent in {ring.id}")
    return PeirceSplit(ring, e, ring.sub(ring.one, e))
