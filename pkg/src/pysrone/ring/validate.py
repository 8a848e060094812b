import logging
from typing import List

import numpy as np

from pysrone.base import RingAxiomError

from .descriptor import FiniteRing

logger = logging.getLogger(__name__)


def additive_generators(ring: FiniteRing) -> List[int]:
    """Greedily picks elements until their additive span is the whole carrier."""
    span = np.zeros(1, dtype=np.int64)
    covered = np.zeros(ring.order, dtype=bool)
    covered[0] = True
    generators: List[int] = []

    for x in range(ring.order):
        if covered[x]:
            continue
        generators.append(x)
        span = np.union1d(span, [x])
        while True:
            grown = np.union1d(span, ring.vadd(span[:, None], span[None, :]).ravel())
            if len(grown) == len(span):
                break
            span = grown
        covered[span] = True
    return generators


def check_axioms(ring: FiniteRing) -> None:
    """Verifies the ring axioms and, when present, the involution axioms.

    Rings up to `FiniteRing.TABLE_THRESHOLD` are checked completely. Addition associativity and both distributive laws
    are checked with the middle (resp. first summand) ranging over an additive generating set, and multiplicative
    associativity with the last factor ranging over it; bi-additivity extends each of these to every triple. Larger
    rings are checked on `FiniteRing.SAMPLED_TRIPLES` uniformly sampled triples.

    Raises:
        RingAxiomError: An axiom fails. The message names the axiom and a violating tuple.
    """
    if ring.tabulated:
        _check_tables(ring)
    else:
        _check_sampled(ring)
    if ring.involution is not None:
        _check_involution(ring)
    logger.debug("axioms hold ring=%s", ring.id)


def _fail(ring: FiniteRing, axiom: str, mask: np.ndarray) -> None:
    if mask.all():
        return
    witness = tuple(int(i) for i in np.argwhere(~mask)[0])
    raise RingAxiomError(f"{axiom} fails in {ring.id} at {witness}")


def _check_tables(ring: FiniteRing) -> None:
    add, mul, neg = ring.add_table, ring.mul_table, ring.neg_table
    el = ring.elements()
    n = ring.order

    for name, table in (("addition", add), ("multiplication", mul)):
        _fail(ring, f"closure of {name}", (table >= 0) & (table < n))
    _fail(ring, "additive commutativity", add == add.T)
    _fail(ring, "additive identity", add[0] == el)
    _fail(ring, "additive inverse", add[el, neg] == 0)
    _fail(ring, "multiplicative identity", (mul[ring.one] == el) & (mul[:, ring.one] == el))

    generators = additive_generators(ring)
    for g in generators:
        # (x+g)+y = x+(g+y)
        _fail(ring, "additive associativity", add[add[:, g], :] == add[:, add[g, :]])
        # x(g+y) = xg+xy
        _fail(ring, "left distributivity", mul[:, add[g, :]] == add[mul[:, g][:, None], mul])
        # (g+y)x = gx+yx
        _fail(ring, "right distributivity", mul[add[g, :], :] == add[mul[g, :][None, :], mul])
    for g in generators:
        # (xy)g = x(yg)
        _fail(ring, "multiplicative associativity", mul[mul, g] == mul[:, mul[:, g]])


def _check_sampled(ring: FiniteRing) -> None:
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, ring.order, size=(3, ring.SAMPLED_TRIPLES))
    add, mul = ring.vadd, ring.vmul

    _fail(ring, "additive commutativity", add(a, b) == add(b, a))
    _fail(ring, "additive identity", add(a, 0) == a)
    _fail(ring, "additive inverse", add(a, ring.vneg(a)) == 0)
    _fail(ring, "multiplicative identity", (mul(a, ring.one) == a) & (mul(ring.one, a) == a))
    _fail(ring, "additive associativity", add(add(a, b), c) == add(a, add(b, c)))
    _fail(ring, "left distributivity", mul(a, add(b, c)) == add(mul(a, b), mul(a, c)))
    _fail(ring, "right distributivity", mul(add(a, b), c) == add(mul(a, c), mul(b, c)))
    _fail(ring, "multiplicative associativity", mul(mul(a, b), c) == mul(a, mul(b, c)))


def _check_involution(ring: FiniteRing) -> None:
    star = np.asarray(ring.involution)
    el = ring.elements()
    if ring.tabulated:
        add, mul = ring.add_table, ring.mul_table
        _fail(ring, "involutivity", star[star] == el)
        _fail(ring, "additivity of the involution", star[add] == add[star][:, star])
        _fail(ring, "anti-multiplicativity of the involution", star[mul] == mul[star][:, star].T)
    else:
        rng = np.random.default_rng(1)
        a, b = rng.integers(0, ring.order, size=(2, ring.SAMPLED_TRIPLES))
        _fail(ring, "involutivity", star[star[a]] == a)
        _fail(ring, "additivity of the involution", star[ring.vadd(a, b)] == ring.vadd(star[a], star[b]))
        _fail(ring, "anti-multiplicativity of the involution", star[ring.vmul(a, b)] == ring.vmul(star[b], star[a]))
    if int(star[ring.one]) != ring.one:
        raise RingAxiomError(f"the involution does not fix 1 in {ring.id}")
