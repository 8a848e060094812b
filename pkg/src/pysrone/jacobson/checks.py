import enum
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from pysrone.classify import classification_table
from pysrone.ring import FiniteRing
from pysrone.srone import CERTIFICATES

logger = logging.getLogger(__name__)


class ElementClass(str, enum.Enum):
    UNIT = "unit"
    REG = "reg"
    UREG = "ureg"
    SREG = "sreg"


def in_class(ring: FiniteRing, a: int, cls: ElementClass) -> bool:
    """Membership of `a` in U(R), reg(R), ureg(R) or sreg(R)."""
    if cls == ElementClass.UNIT:
        return ring.is_unit(a)
    table = classification_table(ring)
    if cls == ElementClass.REG:
        return bool(table.regular[a])
    if cls == ElementClass.UREG:
        return bool(table.unit_regular[a])
    if cls == ElementClass.SREG:
        return bool(table.strongly_regular[a])
    assert False, "unrecognised element class"


def sjl_check(ring: FiniteRing, a: int, b: int, x: int, cls: ElementClass = ElementClass.UNIT) -> Tuple[bool, bool]:
    """Returns the memberships of a + b - axb and a + b - bxa in `cls`.

    The two agree for units, regular and unit-regular elements. Strongly regular elements are the exception.
    """
    ab = ring.add(a, b)
    return (
        in_class(ring, ring.sub(ab, ring.mul3(a, x, b)), cls),
        in_class(ring, ring.sub(ab, ring.mul3(b, x, a)), cls),
    )


def naive_ternary_check(ring: FiniteRing, a: int, b: int, x: int) -> Tuple[bool, bool]:
    """Returns whether 1 - axb and 1 - bxa are units. Unlike `sjl_check`, these can differ."""
    return (
        ring.is_unit(ring.sub(ring.one, ring.mul3(a, x, b))),
        ring.is_unit(ring.sub(ring.one, ring.mul3(b, x, a))),
    )


@dataclass(frozen=True)
class Prop36Result:
    """The four binary specializations for (a, x) and, when all hold, the class decompositions.

    Attributes:
        memberships: Membership in the class of 1 - ax + axa, 1 - xa + axa, 1 - ax + a^2x and 1 - xa + xa^2.
        decompositions: Pairs (p, q) in the class with p + q equal to ax - xa, axa - xa^2 and axa - a^2x, in that
            order. None unless every membership holds.
    """

    memberships: Tuple[bool, bool, bool, bool]
    decompositions: Optional[Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]]

    @property
    def agree(self) -> bool:
        return len(set(self.memberships)) == 1


def prop36_check(ring: FiniteRing, a: int, x: int, cls: ElementClass = ElementClass.UNIT) -> Prop36Result:
    one = ring.one
    ax, xa = ring.mul(a, x), ring.mul(x, a)
    axa = ring.mul(ax, a)
    first = ring.add(ring.sub(one, ax), axa)
    second = ring.add(ring.sub(one, xa), axa)
    third = ring.add(ring.sub(one, ax), ring.mul(a, ax))
    fourth = ring.add(ring.sub(one, xa), ring.mul(xa, a))
    values = (first, second, third, fourth)
    memberships = (
        in_class(ring, first, cls),
        in_class(ring, second, cls),
        in_class(ring, third, cls),
        in_class(ring, fourth, cls),
    )

    decompositions = None
    if all(memberships):
        # (2) - (1), (2) - (4) and (1) - (3).
        pairs = ((1, 0), (1, 3), (0, 2))
        decompositions = tuple((values[i], ring.neg(values[j])) for i, j in pairs)
        for (p, q), target in zip(decompositions, _prop36_targets(ring, a, x)):
            if ring.add(p, q) != target:
                raise CERTIFICATES.reject(
                    f"{ring.render(p)} + {ring.render(q)} does not sum to {ring.render(target)} in {ring.id}"
                )
    logger.debug("prop36 ring=%s a=%s x=%s memberships=%s", ring.id, ring.render(a), ring.render(x), memberships)
    return Prop36Result(memberships, decompositions)  # type: ignore[arg-type]


def _prop36_targets(ring: FiniteRing, a: int, x: int) -> Tuple[int, int, int]:
    ax, xa = ring.mul(a, x), ring.mul(x, a)
    axa = ring.mul(ax, a)
    return ring.sub(ax, xa), ring.sub(axa, ring.mul(xa, a)), ring.sub(axa, ring.mul(a, ax))
