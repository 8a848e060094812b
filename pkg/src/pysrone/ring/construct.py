import logging
from functools import lru_cache
from typing import Sequence, Tuple, Union

import numpy as np

from pysrone.base import PreconditionError, ZeroRingError
from pysrone.codec import Literal, render_literal

from .descriptor import FiniteRing
from .spec import (
    CornerSpec,
    MatrixSpec,
    ModularSpec,
    OppositeSpec,
    ProductSpec,
    QuotientSpec,
    RingSpec,
    TransposeSpec,
    TriangularSpec,
    parse_ring_spec,
)
from .structures import (
    MatrixStructure,
    ModularStructure,
    ProductStructure,
    SubsetStructure,
    ideal_closure,
    quotient_structure,
)
from .validate import check_axioms

logger = logging.getLogger(__name__)


def construct_ring(spec: Union[str, RingSpec]) -> FiniteRing:
    """Builds and validates the ring described by a ring-spec.

    Rings are cached by their canonical spec, so repeated construction (for example by suite workers) is cheap.

    Args:
        spec: A ring-spec string such as `"M(2,Z/4)"`, or an already parsed spec.

    Returns:
        FiniteRing: The validated ring. Its `id` is canonical: literals are re-rendered after encoding.

    Raises:
        RingSpecError: The spec does not parse.
        LiteralError: A corner or quotient literal does not encode in its base ring.
        NotIdempotentError: A corner element is not idempotent.
        ZeroRingError: A quotient ideal contains 1.
        PreconditionError: `tr(...)` applied to something other than a matrix ring over a commutative ring.
        RingAxiomError: The constructed tables violate the ring axioms.
    """
    return _construct_cached(str(parse_ring_spec(spec) if isinstance(spec, str) else spec))


def quotient_map(ring: FiniteRing, generators: Sequence[Literal]) -> Tuple[FiniteRing, np.ndarray]:
    """Builds R/J for the two-sided ideal J generated by `generators`.

    Returns:
        The quotient ring and the projection array mapping each element of R to its coset in R/J.
    """
    quotient = construct_ring(f"quot({ring.id}," + ",".join(render_literal(g) for g in generators) + ")")
    return quotient, quotient_projection(quotient)


def quotient_projection(quotient: FiniteRing) -> np.ndarray:
    assert isinstance(quotient.structure, SubsetStructure) and quotient.kind == "quotient", "not a quotient ring"
    return quotient.structure.lookup


def quotient_ideal(quotient: FiniteRing) -> np.ndarray:
    """The ideal J of R/J, as sorted indices of R."""
    return np.flatnonzero(quotient_projection(quotient) == 0)


@lru_cache(maxsize=128)
def _construct_cached(canonical: str) -> FiniteRing:
    ring = _build(parse_ring_spec(canonical))
    check_axioms(ring)
    logger.info("built ring id=%s order=%d kind=%s", ring.id, ring.order, ring.kind)
    return ring


def _build(spec: RingSpec) -> FiniteRing:
    if isinstance(spec, ModularSpec):
        return FiniteRing(str(spec), ModularStructure(spec.n))
    if isinstance(spec, (MatrixSpec, TriangularSpec)):
        base = construct_ring(spec.base)
        triangular = isinstance(spec, TriangularSpec)
        kind = "T" if triangular else "M"
        return FiniteRing(f"{kind}({spec.k},{base.id})", MatrixStructure(spec.k, base, triangular))
    if isinstance(spec, ProductSpec):
        factors = [construct_ring(f) for f in spec.factors]
        ring_id = " x ".join(f"({f.id})" if f.kind == "product" else f.id for f in factors)
        return FiniteRing(ring_id, ProductStructure(factors))
    if isinstance(spec, OppositeSpec):
        return construct_ring(spec.base).opposite()
    if isinstance(spec, TransposeSpec):
        return _with_transpose(construct_ring(spec.base))
    if isinstance(spec, CornerSpec):
        parent = construct_ring(spec.base)
        return parent.corner(parent.encode(spec.idempotent))
    if isinstance(spec, QuotientSpec):
        parent = construct_ring(spec.base)
        return _quotient(parent, [parent.encode(g) for g in spec.generators])

    assert False, "unrecognised ring spec"


def _with_transpose(ring: FiniteRing) -> FiniteRing:
    structure = ring.structure
    if not isinstance(structure, MatrixStructure) or structure.kind != "matrix":
        raise PreconditionError(f"the transpose involution needs a full matrix ring, got {ring.id}")
    if not structure.base.is_commutative:
        raise PreconditionError(f"the transpose is not an involution over the noncommutative {structure.base.id}")
    involution = np.asarray(structure.vtranspose(ring.elements()), dtype=np.int64)
    return FiniteRing(f"tr({ring.id})", structure, involution)


def _quotient(parent: FiniteRing, generators: Sequence[int]) -> FiniteRing:
    ideal = ideal_closure(parent, generators)
    ring_id = f"quot({parent.id}," + ",".join(parent.render(g) for g in generators) + ")"
    if parent.one in set(int(i) for i in ideal):
        raise ZeroRingError(f"the ideal of {ring_id} contains 1")
    logger.debug("ideal closure ring=%s size=%d", ring_id, len(ideal))
    return FiniteRing(ring_id, quotient_structure(parent, ideal, ring_id))
