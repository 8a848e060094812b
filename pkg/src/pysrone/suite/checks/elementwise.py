"""Element-wise characterizations of stable range one, its behavior under units, quotients and the radical, and
product closure."""

from typing import Dict, List, Tuple

import numpy as np

from pysrone.classify import right_ideal_mask
from pysrone.ring import FiniteRing, construct_ring, quotient_map
from pysrone.ring.structures import ideal_closure
from pysrone.srone import product_witness, search_oracle, sr1_conditions, sr1_mask

from ..base import Arity, CheckContext, theorem
from .support import comaximal_partners, sr, table

PRODUCT_PAIRS = 16
PARTNERS_PER_PAIR = 3


@theorem("T2.2", Arity.DOUBLE)
def conditions_coincide(ctx: CheckContext) -> None:
    ring = ctx.ring
    for a in range(ring.order):
        ctx.count(ring.order)
        numbered = sr1_conditions(ring, a).numbered()
        values = [numbered[k] for k in (1, 2, 3, 4, 5)]
        ctx.expect(len(set(values)) == 1, data={"conditions": {str(k): numbered[k] for k in numbered}}, a=a)


@theorem("C2.3", Arity.DOUBLE)
def suitable_conditions_coincide(ctx: CheckContext) -> None:
    ring = ctx.ring
    suitable, rm = table(ring).suitable, right_ideal_mask(ring)
    for a in range(ring.order):
        if not suitable[rm[a]].all():
            continue
        ctx.count(ring.order)
        numbered = sr1_conditions(ring, a).numbered()
        ctx.expect(
            numbered[1] == numbered[6] == numbered[7],
            data={"conditions": {str(k): numbered[k] for k in (1, 6, 7)}},
            a=a,
        )


@theorem("T2.4A", Arity.TRIPLE)
def shifted_partners(ctx: CheckContext) -> None:
    """sr(a) = 1 iff every t comaximal with a has some y with sr(a + ty) = 1."""
    ring = ctx.ring
    mask = sr(ring)
    for a in range(ring.order):
        partners = comaximal_partners(ring, a)
        ctx.count(len(partners) * ring.order)
        shifted = mask[ring.vadd(a, ring.vmul(partners[:, None], ring.elements()[None, :]))].any(axis=1)
        ctx.expect(mask[a] == bool(shifted.all()), data={"sr": bool(mask[a])}, a=a)


@theorem("T2.4B", Arity.TRIPLE)
def unit_translations(ctx: CheckContext) -> None:
    ring = ctx.ring
    mask = sr(ring)
    units = np.flatnonzero(ring.unit_mask)
    for a in np.flatnonzero(mask):
        uav = ring.vmul(ring.vmul(units, a)[:, None], units[None, :])
        ctx.count(uav.size)
        ctx.expect_all(mask[uav], a=a, u=units[:, None], v=units[None, :])


@theorem("T2.4C", Arity.DOUBLE)
def one_sided_inverses(ctx: CheckContext) -> None:
    ring = ctx.ring
    mask = sr(ring)
    hits = ring.mul_table == ring.one
    one_sided = hits.any(axis=1) | hits.any(axis=0)
    ctx.count(ring.order * ring.order)
    ctx.expect_all(~one_sided | ~mask | ring.unit_mask, a=ring.elements())


def _radical_members(ring: FiniteRing) -> List[int]:
    return [int(b) for b in np.flatnonzero(table(ring).radical) if b != ring.zero]


def _candidate_ideals(ring: FiniteRing) -> List[Tuple[Tuple[int, ...], bool]]:
    # (generators, inside the radical), one entry per distinct ideal.
    radical = _radical_members(ring)
    central = table(ring).central
    candidates = [(tuple(radical), True)] if radical else []
    candidates += [((b,), True) for b in radical]
    candidates += [((e,), False) for e in ring.idempotent_set if central[e] and e not in (ring.zero, ring.one)]

    distinct: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], bool]] = {}
    for generators, inside in candidates:
        key = tuple(int(i) for i in ideal_closure(ring, generators))
        if key not in distinct:
            distinct[key] = (generators, inside)
    return list(distinct.values())


@theorem("T2.4D", Arity.DOUBLE)
def quotients(ctx: CheckContext) -> None:
    """Quotient maps preserve stable range one, and reflect it together with units when the ideal is radical."""
    ring = ctx.ring
    candidates = _candidate_ideals(ring)
    if not candidates:
        ctx.skip("no proper nonzero radical or central-idempotent ideal")

    mask, el = sr(ring), ring.elements()
    for generators, inside in candidates:
        quotient, projection = quotient_map(ring, [ring.decode(g) for g in generators])
        image = sr1_mask(quotient)[projection]
        ideal = {"ideal": [ring.literal(g) for g in generators], "quotient": quotient.id}
        ctx.count(ring.order)
        ctx.expect_all(~mask | image, data=ideal, a=el)
        if inside:
            ctx.expect_all(mask == image, data=ideal, a=el)
            ctx.expect_all(ring.unit_mask == quotient.unit_mask[projection], data=ideal, a=el)


@theorem("T2.6", Arity.DOUBLE)
def radical_translations(ctx: CheckContext) -> None:
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    radical = table(ring).radical
    for b in np.flatnonzero(radical):
        ctx.count(ring.order)
        ctx.expect_all(mask == mask[ring.vadd(el, b)], a=el, b=b)

    units = np.flatnonzero(ring.unit_mask)
    keeps_units = ring.unit_mask[ring.vadd(el[:, None], units[None, :])].all(axis=1)
    ctx.count(ring.order * len(units))
    ctx.expect_all(radical == (mask & keeps_units), b=el, in_radical=radical)


@theorem("T2.7", Arity.TRIPLE)
def unit_hypothesis(ctx: CheckContext) -> None:
    """If every x has a unit u with x - u^-1 a unit and sr(a - u) = 1, then sr(a) = 1."""
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    units = np.flatnonzero(ring.unit_mask)
    shifted_units = ring.unit_mask[ring.vsub(el[:, None], ring.inverse_array[units][None, :])]

    instantiated = 0
    for a in range(ring.order):
        ctx.count(ring.order * len(units))
        good = mask[ring.vsub(a, units)]
        if (shifted_units & good[None, :]).any(axis=1).all():
            instantiated += 1
            ctx.expect(mask[a], a=a)
    if instantiated == 0:
        ctx.skip("no element satisfies the hypothesis")


@theorem("T2.8", Arity.DOUBLE)
def products(ctx: CheckContext) -> None:
    ring = ctx.ring
    mask = sr(ring)
    good = np.flatnonzero(mask)
    ctx.count(len(good) ** 2)
    ctx.expect_all(mask[ring.vmul(good[:, None], good[None, :])], a1=good[:, None], a2=good[None, :])

    # Certify some products directly from witnesses of their factors.
    rng = ctx.rng()
    oracle = search_oracle(ring)
    for _ in range(PRODUCT_PAIRS):
        a1, a2 = int(rng.choice(good)), int(rng.choice(good))
        partners = comaximal_partners(ring, ring.mul(a1, a2))
        for t in ctx.sample(partners, PARTNERS_PER_PAIR):
            ctx.count()
            cert = product_witness(ring, [a1, a2], int(t), [oracle, oracle])
            ctx.expect(cert.verify(ring) and cert.a == ring.mul(a1, a2), a1=a1, a2=a2, t=int(t))


@theorem("C2.10", Arity.TRIPLE)
def cancellation(ctx: CheckContext) -> None:
    """xay = 1 with sr(a) = 1 and sr(x) = 1 or sr(y) = 1 forces a to be a unit."""
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    unit = ring.unit_mask
    for x in range(ring.order):
        ctx.count(ring.order * ring.order)
        hits = ring.mul_table[ring.mul_table[x]] == ring.one
        side = mask[x] | mask
        holds = ~hits | ~mask[:, None] | ~side[None, :] | unit[:, None]
        ctx.expect_all(holds, x=x, a=el[:, None], y=el[None, :])


@theorem("E2.5F", Arity.DOUBLE, applies=lambda ring: ring.id in ("Z/4", "Z/6"), requirement="needs Z/4 or Z/6")
def clean_rows(ctx: CheckContext) -> None:
    """aR + bR = R with sr(a) = 1 makes [[a, b], [0, 0]] clean in M(2, R)."""
    ring = ctx.ring
    matrices = construct_ring(f"M(2,{ring.id})")
    clean = table(matrices).clean
    zero = ring.decode(ring.zero)
    for a in np.flatnonzero(sr(ring)):
        for b in comaximal_partners(ring, int(a)):
            ctx.count()
            row = matrices.encode([[ring.decode(int(a)), ring.decode(int(b))], [zero, zero]])
            ctx.expect(clean[row], a=int(a), b=int(b))
