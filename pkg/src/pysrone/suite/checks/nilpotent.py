"""Nilpotent elements, orthogonal idempotents and matrices with a single nonzero row."""

import numpy as np

from pysrone.classify import right_ideal_mask

from ..base import Arity, CheckContext, theorem
from .support import entries, is_matrix2, matrix, matrix_structure, peirce_members, proper_idempotents, sr, table


@theorem("T5.1")
def radical_members(ctx: CheckContext) -> None:
    ring = ctx.ring
    classes = table(ring)
    el, radical = ring.elements(), classes.radical
    ctx.count(ring.order)
    ctx.expect_all(~classes.strongly_nilpotent | radical, data={"case": "strongly nilpotent"}, a=el)
    ctx.expect_all(
        ~(classes.central & classes.quasi_nilpotent) | radical, data={"case": "central quasi-nilpotent"}, a=el
    )

    idempotents = np.asarray(ring.idempotent_set, dtype=np.int64)
    rm = right_ideal_mask(ring)
    commutes = (ring.mul_table[:, idempotents] == ring.mul_table[idempotents].T).all(axis=1)
    suitable = np.array([classes.suitable[rm[a]].all() for a in range(ring.order)], dtype=bool)
    ctx.expect_all(~(classes.nilpotent & suitable & commutes) | radical, data={"case": "nilpotent"}, a=el)

    if ring.is_commutative:
        ctx.expect_all(classes.strongly_nilpotent == classes.nilpotent, a=el)


@theorem("R5-spi")
def strongly_pi_regular(ctx: CheckContext) -> None:
    """A strongly pi-regular element whose powers are all regular is unit-regular."""
    ring = ctx.ring
    classes = table(ring)
    el = ring.elements()
    powers_regular = classes.regular.copy()
    power = el.copy()
    for _ in range(ring.order):
        power = ring.vmul(power, el)
        powers_regular &= classes.regular[power]
    ctx.count(ring.order * ring.order)
    ctx.expect_all(~(classes.strongly_pi_regular & powers_regular) | classes.unit_regular, a=el)


@theorem("T5.2", Arity.DOUBLE)
def regular_nilpotents(ctx: CheckContext) -> None:
    """Regular nilpotents of an exchange ring are unit-regular, and a square-zero a = axa factors as (e + a)(1 - e)
    with e = ax, both factors idempotent, and 1 + (1 - e)xe is a unit inner inverse of a."""
    ring = ctx.ring
    classes = table(ring)
    el, mask = ring.elements(), sr(ring)
    if classes.suitable.all():
        ctx.count(ring.order)
        ctx.expect_all(~(classes.regular & classes.nilpotent) | classes.unit_regular, a=el)

    for a in np.flatnonzero(classes.regular & (ring.vmul(el, el) == ring.zero)):
        a = int(a)
        inner = np.flatnonzero(ring.vmul(ring.vmul(a, el), a) == a)
        for x in inner:
            x = int(x)
            ctx.count()
            e = ring.mul(a, x)
            f = ring.sub(ring.one, e)
            first = ring.add(e, a)
            unit = ring.add(ring.one, ring.mul3(f, x, e))
            ctx.expect(
                ring.is_idempotent(first)
                and ring.is_idempotent(f)
                and ring.mul(first, f) == a
                and ring.is_unit(unit)
                and ring.mul3(a, unit, a) == a,
                a=a,
                x=x,
            )
        power = a
        while power != ring.zero:
            ctx.expect(mask[power], a=a, power=power)
            power = ring.mul(power, a)


@theorem("E5.3", applies=is_matrix2, requirement="needs M(2,S)")
def square_zero_matrices(ctx: CheckContext) -> None:
    """A = [[s, 1], [0, -s]] with s^2 = 0 has the unit inner inverse [[1, 0], [1, 1]], and A[[1, t], [0, 1]] stays
    unit-regular with a vanishing cube."""
    ring = ctx.ring
    structure = matrix_structure(ring)
    assert structure is not None
    base = structure.base
    zero, one = base.zero, base.one
    ureg, mask = table(ring).unit_regular, sr(ring)
    inner = matrix(ring, ((one, zero), (one, one)))
    ctx.expect(ring.is_unit(inner), v=inner)

    for s in range(base.order):
        if base.mul(s, s) != zero:
            continue
        a = matrix(ring, ((s, one), (zero, base.neg(s))))
        ctx.count()
        ctx.expect(ring.mul3(a, inner, a) == a and ureg[a] and mask[a], a=a)
        for t in range(base.order):
            ctx.count()
            b = ring.mul(a, matrix(ring, ((one, t), (zero, one))))
            square = ring.mul(b, b)
            ctx.expect(
                ureg[b] and mask[b] and mask[square] and ring.mul(square, b) == ring.zero, a=a, b=b, square=square
            )


@theorem("T5.5", Arity.TRIPLE)
def orthogonal_corners(ctx: CheckContext) -> None:
    """For ef = fe = 0: every erf and erfse has stable range one, and f + erf is idempotent."""
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    pairs = [
        (e, f)
        for e in proper_idempotents(ring)
        for f in proper_idempotents(ring)
        if e != f and ring.mul(e, f) == ring.zero and ring.mul(f, e) == ring.zero
    ]
    if not pairs:
        ctx.skip("no pair of nonzero orthogonal idempotents")

    for e, f in pairs:
        off = peirce_members(ring, e, f)
        ctx.count(len(off))
        ctx.expect_all(mask[off], e=e, f=f, erf=off)
        lifted = ring.vadd(f, off)
        ctx.expect_all(ring.vmul(lifted, lifted) == lifted, e=e, f=f, erf=off)

        wrapped = ring.vmul(ring.vmul(off[:, None], el[None, :]), e)
        ctx.count(wrapped.size)
        ctx.expect_all(mask[wrapped], e=e, f=f, erf=off[:, None], s=el[None, :])


@theorem("C5.6", Arity.TRIPLE)
def annihilating_pairs(ctx: CheckContext) -> None:
    """pq = qp = 0 with p + q a unit makes every prq of stable range one."""
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    for p in range(ring.order):
        partners = np.flatnonzero(
            (ring.mul_table[p] == ring.zero) & (ring.mul_table[:, p] == ring.zero) & ring.unit_mask[ring.add_table[p]]
        )
        values = ring.vmul(ring.vmul(p, el)[:, None], partners[None, :])
        ctx.count(values.size)
        ctx.expect_all(mask[values], p=p, r=el[:, None], q=partners[None, :])


@theorem("T5.7", Arity.TRIPLE)
def isomorphic_idempotents(ctx: CheckContext) -> None:
    """If e is isomorphic to an idempotent g of fRf, then a + b + h squares to 1 and every r in eRe has
    stable range one."""
    ring = ctx.ring
    mask = sr(ring)
    found = 0
    for e in proper_idempotents(ring):
        f = ring.sub(ring.one, e)
        corner = peirce_members(ring, e, e)
        for g in peirce_members(ring, f, f):
            g = int(g)
            if g == ring.zero or not ring.is_idempotent(g):
                continue
            forward, backward = peirce_members(ring, e, g), peirce_members(ring, g, e)
            ctx.count(len(forward) * len(backward))
            hits = np.argwhere(
                (ring.vmul(forward[:, None], backward[None, :]) == e)
                & (ring.vmul(backward[None, :], forward[:, None]) == g)
            )
            if len(hits) == 0:
                continue
            found += 1
            a, b = int(forward[hits[0][0]]), int(backward[hits[0][1]])
            h = ring.sub(f, g)
            w = ring.add(ring.add(a, b), h)
            ctx.expect(ring.mul(w, w) == ring.one, e=e, g=g, a=a, b=b)

            moved = ring.vmul(corner, w)
            ctx.count(len(corner))
            ctx.expect_all(moved == ring.vmul(corner, a), e=e, g=g, r=corner)
            ctx.expect_all(ring.vmul(ring.vmul(e, moved), f) == moved, e=e, g=g, r=corner)
            ctx.expect_all(mask[corner], e=e, g=g, r=corner)
    if found == 0:
        ctx.skip("no idempotent is isomorphic to one in its complementary corner")


@theorem("T5.8", applies=is_matrix2, requirement="needs M(n,S) with n >= 2")
def single_row_matrices(ctx: CheckContext) -> None:
    ring = ctx.ring
    e11, e12, e21, e22 = entries(ring)
    first, second = (e11 != 0) | (e12 != 0), (e21 != 0) | (e22 != 0)
    single = (first & ~second & ((e11 == 0) | (e12 == 0))) | (second & ~first & ((e21 == 0) | (e22 == 0)))
    ctx.count(ring.order)
    ctx.expect_all(~single | sr(ring), a=ring.elements())
