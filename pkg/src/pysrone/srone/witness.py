"""Constructive witness synthesis.

Every construction here is written against `pysrone.base.Arithmetic`, so it certifies elements of finite rings and
integer matrices alike. Finite rings additionally get search-based oracles.
"""

import dataclasses
import logging
from typing import Callable, Optional, Sequence, Tuple, TypeVar

import numpy as np

from pysrone.base import Arithmetic, NotAUnitError, NotComaximalError, OracleError
from pysrone.ring import FiniteRing

from .base import CERTIFICATES, Side, VariantKind, WitnessCertificate, WitnessMode, in_variant
from .decide import sr1_witness, witness_set

logger = logging.getLogger(__name__)

T = TypeVar("T")

PairOracle = Callable[[Arithmetic[T], T, T, T, T], WitnessCertificate[T]]
"""Produces a PAIR certificate for (a, t) given x, y with ax + ty = 1."""

Form3Source = Callable[[T, T], Optional[WitnessCertificate[T]]]
"""Produces a FORM3 certificate for (a, x), or None."""


def comaximal_pair(ring: FiniteRing, a: int, t: int, side: Side = Side.RIGHT) -> Tuple[int, int]:
    """Returns the least (x, y) with ax + ty = 1 (xa + yt = 1 on the left).

    Raises:
        NotComaximalError: aR + tR (Ra + Rt) is a proper one-sided ideal.
    """
    el = ring.elements()
    if side == Side.RIGHT:
        left, right = ring.vmul(a, el), ring.vmul(t, el)
    else:
        left, right = ring.vmul(el, a), ring.vmul(el, t)
    hits = np.argwhere(ring.vadd(left[:, None], right[None, :]) == ring.one)
    if len(hits) == 0:
        ideal = "aR + tR" if side == Side.RIGHT else "Ra + Rt"
        raise NotComaximalError(f"{ideal} != R for a={ring.render(a)} t={ring.render(t)} in {ring.id}")
    x, y = hits[0]
    return int(x), int(y)


def unit_oracle(arith: Arithmetic[T], a: T, t: T, x: T, y: T) -> WitnessCertificate[T]:
    """b = 0 certifies a unit against any t.

    Raises:
        OracleError: `a` is not a unit.
    """
    try:
        inverse = arith.inverse(a)
    except NotAUnitError as e:
        raise OracleError(f"unit oracle applied to {arith.literal(a)}") from e
    cert = WitnessCertificate(WitnessMode.PAIR, Side.RIGHT, VariantKind.FULL, a, t, arith.zero, a, inverse, path="unit")
    return CERTIFICATES.record(cert, arith)


def idempotent_oracle(arith: Arithmetic[T], e: T, t: T, x: T, y: T) -> WitnessCertificate[T]:
    """Closed form for an idempotent e with ex + ty = 1: b = yf, unit 1 - exf, inverse 1 + exf, where f = 1 - e.

    Raises:
        OracleError: `e` is not idempotent.
    """
    if not arith.eq(arith.mul(e, e), e):
        raise OracleError(f"idempotent oracle applied to {arith.literal(e)}")
    f = arith.sub(arith.one, e)
    exf = arith.mul3(e, x, f)
    cert = WitnessCertificate(
        WitnessMode.PAIR,
        Side.RIGHT,
        VariantKind.FULL,
        e,
        t,
        arith.mul(y, f),
        arith.sub(arith.one, exf),
        arith.add(arith.one, exf),
        path="idempotent",
    )
    return CERTIFICATES.record(cert, arith)


def lift_form3(arith: Arithmetic[T], cert: WitnessCertificate[T], t: T, y: T) -> WitnessCertificate[T]:
    """Turns a right FORM3 certificate for (a, x) into a PAIR certificate for (a, t), given ax + ty = 1.

    With b = y b' the unit is unchanged: a + t y b' = a + (1 - ax) b'.
    """
    lifted = WitnessCertificate(
        WitnessMode.PAIR,
        Side.RIGHT,
        VariantKind.FULL,
        cert.a,
        t,
        arith.mul(y, cert.b),
        cert.unit,
        cert.unit_inverse,
        path=f"form3-chain/{cert.path}",
    )
    return CERTIFICATES.record(lifted, arith)


def form3_oracle(source: Form3Source[T]) -> PairOracle[T]:
    """Builds a pair oracle from any source of FORM3 certificates."""

    def oracle(arith: Arithmetic[T], a: T, t: T, x: T, y: T) -> WitnessCertificate[T]:
        cert = source(a, x)
        if cert is None:
            raise OracleError(f"no witness for a={arith.literal(a)} x={arith.literal(x)}")
        return lift_form3(arith, cert, t, y)

    return oracle


def search_oracle(ring: FiniteRing) -> PairOracle[int]:
    """The default pair oracle of a finite ring: exhaustive FORM3 search, lifted to the pair."""
    return form3_oracle(lambda a, x: sr1_witness(ring, a, x))


def pair_witness(
    ring: FiniteRing, a: int, t: int, side: Side = Side.RIGHT, variant: VariantKind = VariantKind.FULL
) -> Optional[WitnessCertificate[int]]:
    """Finds b with a + tb a unit (a + bt on the left), given aR + tR = R (Ra + Rt = R).

    The closed forms for units and idempotents are tried first, then the FORM3 chain, then a direct scan over the
    variant's witness set. The certificate's `path` records which one succeeded.

    Returns:
        The verified certificate, or None when no witness exists in the variant's set.

    Raises:
        NotComaximalError: The comaximality precondition fails.
    """
    if side == Side.LEFT:
        cert = pair_witness(ring.opposite(), a, t, Side.RIGHT, variant)
        if cert is None:
            return None
        return CERTIFICATES.record(dataclasses.replace(cert, side=Side.LEFT), ring)

    x, y = comaximal_pair(ring, a, t)
    if ring.is_unit(a) and variant != VariantKind.UNIT:
        cert = unit_oracle(ring, a, t, x, y)
    elif ring.is_idempotent(a) and variant == VariantKind.FULL:
        cert = idempotent_oracle(ring, a, t, x, y)
    elif variant == VariantKind.FULL:
        try:
            cert = search_oracle(ring)(ring, a, t, x, y)
        except OracleError:
            return _scan_pair(ring, a, t, variant)
    else:
        return _scan_pair(ring, a, t, variant)
    return CERTIFICATES.record(dataclasses.replace(cert, variant=variant), ring)


def _scan_pair(ring: FiniteRing, a: int, t: int, variant: VariantKind) -> Optional[WitnessCertificate[int]]:
    candidates = witness_set(ring, variant)
    units = ring.vadd(a, ring.vmul(t, candidates))
    hits = np.flatnonzero(ring.unit_mask[units])
    if len(hits) == 0:
        return None
    j = int(hits[0])
    unit = int(units[j])
    cert = WitnessCertificate(
        WitnessMode.PAIR, Side.RIGHT, variant, a, t, int(candidates[j]), unit, ring.inverse(unit), path="scan"
    )
    return CERTIFICATES.record(cert, ring)


def product_witness(
    arith: Arithmetic[T],
    factors: Sequence[T],
    t: T,
    oracles: Sequence[PairOracle[T]],
    x: Optional[T] = None,
    y: Optional[T] = None,
) -> WitnessCertificate[T]:
    """Certifies the product a1 a2 ... an against t from one pair oracle per factor, without global search.

    Writing a = a1 a' with a' = a2 ... an and ax + ty = 1, the first oracle is asked for (a1, t) with the Bezout pair
    (a'x, y), giving b1 and the unit u = a1 + t b1. Then a'(xu) + (u^-1 t)((y - b1 a' x) u) = 1, so the rest of the
    product is certified against u^-1 t recursively, giving b' and v. The witness for the product is b1 a' + b' with
    unit uv.

    Args:
        arith: The ring arithmetic.
        factors: The factors a1, ..., an, at least one.
        t: The comaximal partner of the product.
        oracles: One pair oracle per factor.
        x: Together with y, a Bezout pair (a1 ... an) x + t y = 1. Searched for in finite rings when omitted.
        y: See x.

    Returns:
        WitnessCertificate: A verified PAIR certificate for the product against t.

    Raises:
        NotComaximalError: No Bezout pair exists, or the given one is wrong.
        OracleError: An oracle failed.
    """
    if len(factors) == 0 or len(factors) != len(oracles):
        raise ValueError("product_witness needs one oracle per factor and at least one factor")
    product = factors[0]
    for factor in factors[1:]:
        product = arith.mul(product, factor)

    if x is None or y is None:
        if not isinstance(arith, FiniteRing):
            raise NotComaximalError("a Bezout pair is required outside finite rings")
        x, y = comaximal_pair(arith, product, t)  # type: ignore[arg-type,assignment]
    assert x is not None and y is not None
    if not arith.eq(arith.add(arith.mul(product, x), arith.mul(t, y)), arith.one):
        raise NotComaximalError(f"ax + ty != 1 for a={arith.literal(product)} t={arith.literal(t)}")

    cert = _product(arith, list(factors), t, x, y, list(oracles))
    logger.debug("product witness factors=%d path=%s", len(factors), cert.path)
    return CERTIFICATES.record(cert, arith)


def _product(
    arith: Arithmetic[T], factors: Sequence[T], t: T, x: T, y: T, oracles: Sequence[PairOracle[T]]
) -> WitnessCertificate[T]:
    if len(factors) == 1:
        return oracles[0](arith, factors[0], t, x, y)

    head, rest = factors[0], factors[1:]
    tail = rest[0]
    for factor in rest[1:]:
        tail = arith.mul(tail, factor)

    first = oracles[0](arith, head, t, arith.mul(tail, x), y)
    u, u_inv = first.unit, first.unit_inverse
    t_next = arith.mul(u_inv, t)
    x_next = arith.mul(x, u)
    y_next = arith.mul(arith.sub(y, arith.mul3(first.b, tail, x)), u)
    second = _product(arith, rest, t_next, x_next, y_next, oracles[1:])

    return WitnessCertificate(
        WitnessMode.PAIR,
        Side.RIGHT,
        VariantKind.FULL,
        arith.mul(head, tail),
        t,
        arith.add(arith.mul(first.b, tail), second.b),
        arith.mul(u, second.unit),
        arith.mul(second.unit_inverse, u_inv),
        path="product",
    )


def transport_witness(arith: Arithmetic[T], cert: WitnessCertificate[T], u: T, v: T) -> WitnessCertificate[T]:
    """Carries a certificate for a over to uav, for units u and v.

    PAIR certificates move to the partner ut (right) or tv (left). FORM3 certificates move to the multiplier
    v^-1 x u^-1. Witness sets closed under the substitution keep their variant; otherwise the result is FULL.

    Raises:
        NotAUnitError: u or v is not a unit.
    """
    u_inv, v_inv = arith.inverse(u), arith.inverse(v)
    a = arith.mul3(u, cert.a, v)
    unit = arith.mul3(u, cert.unit, v)
    unit_inverse = arith.mul3(v_inv, cert.unit_inverse, u_inv)

    if cert.mode == WitnessMode.PAIR and cert.side == Side.RIGHT:
        operand, b = arith.mul(u, cert.operand), arith.mul(cert.b, v)
    elif cert.mode == WitnessMode.PAIR:
        operand, b = arith.mul(cert.operand, v), arith.mul(u, cert.b)
    else:
        operand, b = arith.mul3(v_inv, cert.operand, u_inv), arith.mul3(u, cert.b, v)

    variant = cert.variant
    if variant in (VariantKind.IDEMPOTENT, VariantKind.SQUARE) and not in_variant(arith, variant, b):
        variant = VariantKind.FULL
    moved = WitnessCertificate(cert.mode, cert.side, variant, a, operand, b, unit, unit_inverse, path="transport")
    return CERTIFICATES.record(moved, arith)

