"""Left-right symmetry: the one-sided variants, the class transfers between a + b - axb and a + b - bxa, the circle
operation and involutions."""

import numpy as np

from pysrone.jacobson import (
    Block2,
    CircleContext,
    ElementClass,
    block_inverse_check,
    circle_commutativity_criterion,
    circle_is_associative,
    circle_is_commutative,
    naive_ternary_check,
    prop36_check,
    sjl_check,
)
from pysrone.ring import FiniteRing
from pysrone.srone import Side, VariantKind, sr1_mask, witness_set

from ..base import Arity, CheckBody, CheckContext, theorem
from ..counterexamples import find_counterexamples
from .support import (
    entries,
    is_matrix2,
    is_matrix2_over_modular,
    is_small_base,
    matrix,
    matrix_structure,
    sr,
    table,
    ternary_forms,
)

SCALAR_SAMPLES = 16
CIRCLE_FULL_ORDER = 27
CIRCLE_SAMPLES = 4


def _class_mask(ring: FiniteRing, cls: ElementClass) -> np.ndarray:
    if cls == ElementClass.UNIT:
        return ring.unit_mask
    if cls == ElementClass.REG:
        return table(ring).regular
    if cls == ElementClass.UREG:
        return table(ring).unit_regular
    return table(ring).strongly_regular


def _sides_agree(variant: VariantKind) -> CheckBody:
    def body(ctx: CheckContext) -> None:
        ring = ctx.ring
        right = sr1_mask(ring, Side.RIGHT, variant)
        left = sr1_mask(ring, Side.LEFT, variant)
        ctx.count(ring.order * ring.order * max(len(witness_set(ring, variant)), 1))
        ctx.expect_all(right == left, a=ring.elements(), right=right, left=left)

    return body


for _variant in VariantKind:
    theorem(f"T3.1-{_variant.value}", Arity.TRIPLE)(_sides_agree(_variant))


def _ternary_transfer(cls: ElementClass) -> CheckBody:
    def body(ctx: CheckContext) -> None:
        ring = ctx.ring
        member, el = _class_mask(ring, cls), ring.elements()
        for a in range(ring.order):
            right, left = ternary_forms(ring, a)
            ctx.count(right.size)
            ctx.expect_all(member[right] == member[left], a=a, x=el[:, None], b=el[None, :])

        rng = ctx.rng()
        for _ in range(SCALAR_SAMPLES):
            a, b, x = (rng.randrange(ring.order) for _ in range(3))
            right, left = sjl_check(ring, a, b, x, cls)
            ctx.expect(right == left, a=a, b=b, x=x)

    return body


for _cls in (ElementClass.UNIT, ElementClass.REG, ElementClass.UREG):
    theorem(f"L3.2-{_cls.value}", Arity.TRIPLE)(_ternary_transfer(_cls))


@theorem(
    "L3.2-sreg-counterexample",
    Arity.TRIPLE,
    applies=lambda ring: ring.id == "M(2,Z/4)",
    requirement="searched in M(2,Z/4) only",
)
def sreg_asymmetry(ctx: CheckContext) -> None:
    found = find_counterexamples("sreg-asymmetry", ctx.config.budget)
    ctx.count(found.instances)
    ctx.expect(found.found, data=found.to_payload())
    a, b, x = found.elements["a"], found.elements["b"], found.elements["x"]
    right, left = sjl_check(ctx.ring, a, b, x, ElementClass.SREG)
    ctx.expect(right != left, a=a, b=b, x=x)
    ctx.exhibit(found.witness or {})


def _block_transfer(ctx: CheckContext) -> None:
    ring = ctx.ring
    units = np.flatnonzero(ring.unit_mask)
    for cls in (ElementClass.UNIT, ElementClass.REG, ElementClass.UREG):
        for u in units:
            for q in range(ring.order):
                for p in range(ring.order):
                    for r in range(ring.order):
                        ctx.count()
                        verdict, direct = block_inverse_check(ring, Block2(int(u), q, p, r), cls)
                        ctx.expect(verdict == direct, data={"class": cls.value}, u=int(u), q=q, p=p, r=r)


theorem("B3.3", Arity.TRIPLE, applies=is_small_base, requirement="needs |S|^4 <= 256")(_block_transfer)


@theorem("E3.4", applies=is_matrix2, requirement="needs M(2,S)")
def naive_ternary(ctx: CheckContext) -> None:
    """1 - axb and 1 - bxa differ for a = E11, x = E12 + E21, b = E11 + E12, while a + b - axb and a + b - bxa agree."""
    ring = ctx.ring
    structure = matrix_structure(ring)
    assert structure is not None
    zero, one = structure.base.zero, structure.base.one
    a = matrix(ring, ((one, zero), (zero, zero)))
    x = matrix(ring, ((zero, one), (one, zero)))
    b = matrix(ring, ((one, one), (zero, zero)))
    ctx.count()
    naive = naive_ternary_check(ring, a, b, x)
    ctx.expect(naive == (True, False), data={"naive": list(naive)}, a=a, b=b, x=x)
    right, left = sjl_check(ring, a, b, x)
    ctx.expect(right == left, a=a, b=b, x=x)
    ctx.exhibit({"a": ring.literal(a), "b": ring.literal(b), "x": ring.literal(x), "naive": list(naive)})


@theorem("R3.5-circle", Arity.TRIPLE)
def circle_operation(ctx: CheckContext) -> None:
    """a o b = a + b - axb is associative for every x, and commutative iff x is central and kills commutators."""
    ring = ctx.ring
    el = ring.elements()
    for x in el:
        circle = CircleContext(ring, int(x))
        ctx.count(ring.order**2)
        ctx.expect(circle_is_commutative(circle) == circle_commutativity_criterion(circle), x=int(x))

    multipliers = el if ring.order <= CIRCLE_FULL_ORDER else ctx.sample(el, CIRCLE_SAMPLES)
    for x in multipliers:
        ctx.count(ring.order**3)
        ctx.expect(circle_is_associative(CircleContext(ring, int(x))), x=int(x))


def _binary_specializations(cls: ElementClass) -> CheckBody:
    def body(ctx: CheckContext) -> None:
        ring = ctx.ring
        member, el = _class_mask(ring, cls), ring.elements()
        one_minus_ax = ring.vsub(ring.one, ring.mul_table)
        one_minus_xa = ring.vsub(ring.one, ring.mul_table.T)
        for a in range(ring.order):
            ax, xa = ring.mul_table[a], ring.mul_table[:, a]
            axa = ring.vmul(ax, a)
            values = np.stack(
                [
                    ring.vadd(one_minus_ax[a], axa),
                    ring.vadd(one_minus_xa[a], axa),
                    ring.vadd(one_minus_ax[a], ring.vmul(a, ax)),
                    ring.vadd(one_minus_xa[a], ring.vmul(xa, a)),
                ]
            )
            memberships = member[values]
            ctx.count(ring.order)
            ctx.expect_all((memberships == memberships[0]).all(axis=0), a=a, x=el)

        rng = ctx.rng()
        for _ in range(SCALAR_SAMPLES):
            a, x = rng.randrange(ring.order), rng.randrange(ring.order)
            ctx.expect(prop36_check(ring, a, x, cls).agree, a=a, x=x)

    return body


for _cls in (ElementClass.UNIT, ElementClass.REG, ElementClass.UREG):
    theorem(f"P3.6-{_cls.value}", Arity.DOUBLE)(_binary_specializations(_cls))


@theorem("T3.7", Arity.TRIPLE, applies=is_matrix2_over_modular, requirement="needs M(2,Z/n)")
def determinant_identity(ctx: CheckContext) -> None:
    """det(a + b - axb) = det(a + b - bxa), while the traces may differ."""
    ring = ctx.ring
    structure = matrix_structure(ring)
    assert structure is not None
    n = structure.base.order
    e11, e12, e21, e22 = entries(ring)
    det = (e11 * e22 - e12 * e21) % n
    trace = (e11 + e22) % n
    el = ring.elements()

    mismatch = None
    for a in range(ring.order):
        right, left = ternary_forms(ring, a)
        ctx.count(right.size)
        ctx.expect_all(det[right] == det[left], a=a, x=el[:, None], b=el[None, :])
        if mismatch is None:
            hits = np.argwhere(trace[right] != trace[left])
            if len(hits):
                x, b = (int(i) for i in hits[0])
                mismatch = {"a": ring.literal(a), "b": ring.literal(b), "x": ring.literal(x)}
    if mismatch is not None:
        ctx.exhibit({"trace_mismatch": mismatch})


@theorem("T3.9", applies=lambda ring: ring.involution is not None, requirement="needs an involution")
def involution(ctx: CheckContext) -> None:
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    ctx.count(ring.order)
    ctx.expect_all(mask == mask[ring.star(el)], a=el)
