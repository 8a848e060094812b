"""Regular and unit-regular elements: where stable range one, unit-regularity and products of unit-regular
elements meet."""

import numpy as np

from pysrone.classify import classification_table, right_ideal_mask, ring_predicates

from ..base import Arity, CheckContext, theorem
from .support import (
    is_matrix2,
    is_matrix2_over_commutative,
    matrix,
    matrix_structure,
    radical_quotient,
    sr,
    table,
    unit_regular_products,
)


@theorem("T4.1", Arity.DOUBLE)
def regular_elements(ctx: CheckContext) -> None:
    """For regular a: sr(a) = 1, a unit-regular, a a product of unit-regular elements and a + rad unit-regular in
    R/rad(R) are all equivalent."""
    ring = ctx.ring
    classes = table(ring)
    quotient, projection = radical_quotient(ring)
    reduced = classification_table(quotient).unit_regular[projection]
    mask, ureg, products = sr(ring), classes.unit_regular, unit_regular_products(ring)
    ctx.count(ring.order)
    ctx.expect_all(
        ~classes.regular | ((mask == ureg) & (ureg == products) & (ureg == reduced)),
        a=ring.elements(),
        sr=mask,
        unit_regular=ureg,
        product=products,
        reduced=reduced,
    )


@theorem("E4.2A", applies=is_matrix2, requirement="needs M(2,S)")
def completable_rows(ctx: CheckContext) -> None:
    ring = ctx.ring
    units = np.flatnonzero(ring.unit_mask)
    rows = ring.vmul(ring.encode("E11"), units)
    ctx.count(len(units))
    ctx.expect_all(table(ring).unit_regular[rows] & sr(ring)[rows], v=units, a=rows)


@theorem("E4.2B", applies=is_matrix2, requirement="needs M(2,S)")
def unipotent_products(ctx: CheckContext) -> None:
    """For U = [[1, 0], [s, 1]] and E = [[1, t], [0, 0]], both UE and EU are unit-regular."""
    ring = ctx.ring
    structure = matrix_structure(ring)
    assert structure is not None
    zero, one = structure.base.zero, structure.base.one
    ureg = table(ring).unit_regular
    for s in range(structure.base.order):
        for t in range(structure.base.order):
            u = matrix(ring, ((one, zero), (s, one)))
            e = matrix(ring, ((one, t), (zero, zero)))
            ctx.count()
            ctx.expect(ureg[ring.mul(u, e)] and ureg[ring.mul(e, u)], u=u, e=e)


@theorem("T4.3", Arity.DOUBLE)
def unit_regular_conditions(ctx: CheckContext) -> None:
    """Ten characterizations of unit-regularity through inner and reflexive inverses agree on every element."""
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    classes = table(ring)
    ureg = classes.unit_regular
    units, ureg_elements, sr_elements = np.flatnonzero(ring.unit_mask), np.flatnonzero(ureg), np.flatnonzero(mask)

    for a in range(ring.order):
        ctx.count(ring.order)
        inner = np.flatnonzero(ring.vmul(ring.vmul(a, el), a) == a)
        reflexive = inner[ring.vmul(ring.vmul(inner, a), inner) == inner]
        regular = bool(classes.regular[a])
        # ay for every inner inverse y, then the y-rows of ayz against each candidate z
        ay = ring.vmul(a, inner)
        conditions = [
            bool(ureg[a]),
            regular and bool(ureg[reflexive].all()),
            regular and bool(mask[reflexive].all()),
            bool(mask[reflexive].any()),
            bool(mask[inner].any()),
            bool(ureg[reflexive].any()),
            bool(ureg[inner].any()),
            bool((ring.vmul(ay[:, None], units[None, :]) == a).any()),
            bool((ring.vmul(ay[:, None], ureg_elements[None, :]) == a).any()),
            bool((ring.vmul(ay[:, None], sr_elements[None, :]) == a).any()),
        ]
        ctx.expect(len(set(conditions)) == 1, data={"conditions": conditions}, a=a)


@theorem("T4.5", Arity.DOUBLE)
def unit_regular_products_check(ctx: CheckContext) -> None:
    ring = ctx.ring
    classes = table(ring)
    ureg_mask = classes.unit_regular
    ureg = np.flatnonzero(ureg_mask)
    products = ring.vmul(ureg[:, None], ureg[None, :])
    ctx.count(products.size)
    ctx.expect_all(sr(ring)[products], a1=ureg[:, None], a2=ureg[None, :])
    ctx.expect_all(~classes.regular[products] | ureg_mask[products], a1=ureg[:, None], a2=ureg[None, :])

    power = ureg.copy()
    for _ in range(ring.order):
        ctx.count(len(ureg))
        ctx.expect_all(~classes.regular[power] | ureg_mask[power], a=ureg, power=power)
        power = ring.vmul(power, ureg)

    if ring_predicates(ring).reg_closed:
        ctx.expect_all(ureg_mask[products], a1=ureg[:, None], a2=ureg[None, :])


@theorem("C4.7")
def internally_cancellable(ctx: CheckContext) -> None:
    """R is IC iff every regular element has stable range one iff every regular element is a product of unit-regular
    elements."""
    ring = ctx.ring
    classes = table(ring)
    regular = classes.regular
    ic = bool(np.array_equal(regular, classes.unit_regular))
    all_sr = bool(sr(ring)[regular].all())
    all_products = bool(unit_regular_products(ring)[regular].all())
    ctx.count(ring.order)
    facts = {"ic": ic, "regular_sr": all_sr, "regular_products": all_products}
    ctx.expect(ic == all_sr == all_products == ring_predicates(ring).ic, data=facts)


@theorem("C4.9", applies=is_matrix2_over_commutative, requirement="needs M(2,S) over a commutative S")
def commutative_matrices_ic(ctx: CheckContext) -> None:
    ring = ctx.ring
    classes = table(ring)
    ctx.count(ring.order)
    ctx.expect_all(~classes.regular | classes.unit_regular, a=ring.elements())


@theorem("T4.11", Arity.DOUBLE)
def idempotent_multiples(ctx: CheckContext) -> None:
    """When all of aR is suitable, sr(a) = 1 iff fa regular implies fa unit-regular for every idempotent f."""
    ring = ctx.ring
    classes = table(ring)
    mask, rm = sr(ring), right_ideal_mask(ring)
    idempotents = np.asarray(ring.idempotent_set, dtype=np.int64)
    for a in range(ring.order):
        if not classes.suitable[rm[a]].all():
            continue
        ctx.count(len(idempotents))
        multiples = ring.vmul(idempotents, a)
        criterion = bool((~classes.regular[multiples] | classes.unit_regular[multiples]).all())
        ctx.expect(mask[a] == criterion, data={"criterion": criterion}, a=a)
