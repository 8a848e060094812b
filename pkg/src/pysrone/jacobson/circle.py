from dataclasses import dataclass
from typing import Generic, TypeVar

import numpy as np

from pysrone.base import Arithmetic, PreconditionError
from pysrone.ring import FiniteRing

T = TypeVar("T")


@dataclass(frozen=True)
class CircleContext(Generic[T]):
    """The circle operation a o b = a + b - axb for a fixed x. It is associative with identity 0."""

    ring: Arithmetic[T]
    x: T

    def circle(self, a: T, b: T) -> T:
        ring = self.ring
        return ring.sub(ring.add(a, b), ring.mul3(a, self.x, b))


def circle(ctx: CircleContext[T], a: T, b: T) -> T:
    return ctx.circle(a, b)


def _table(ctx: CircleContext[int]) -> np.ndarray:
    ring = ctx.ring
    if not isinstance(ring, FiniteRing) or not ring.tabulated:
        raise PreconditionError("circle tables need a tabulated finite ring")
    el = ring.elements()
    ax = ring.vmul(el, ctx.x)
    return np.asarray(ring.vsub(ring.vadd(el[:, None], el[None, :]), ring.vmul(ax[:, None], el[None, :])))


def circle_is_associative(ctx: CircleContext[int]) -> bool:
    """Exhaustive check of (a o b) o c = a o (b o c)."""
    table = _table(ctx)
    for a in range(len(table)):
        if not np.array_equal(table[table[a]], table[a][table]):
            return False
    return True


def circle_is_commutative(ctx: CircleContext[int]) -> bool:
    table = _table(ctx)
    return bool(np.array_equal(table, table.T))


def circle_commutativity_criterion(ctx: CircleContext[int]) -> bool:
    """True iff x is central and annihilates every additive commutator ab - ba."""
    ring = ctx.ring
    assert isinstance(ring, FiniteRing)
    el = ring.elements()
    commutators = ring.vsub(ring.vmul(el[:, None], el[None, :]), ring.vmul(el[None, :], el[:, None]))
    return ring.is_central(ctx.x) and bool((ring.vmul(ctx.x, commutators) == 0).all())
