"""Shared tables for the theorem checks: masks, matrix shapes, Peirce components and quotients."""

from typing import Optional, Tuple

import numpy as np

from pysrone.classify import ClassificationTable, classification_table, one_minus, right_ideal_mask
from pysrone.ring import FiniteRing, quotient_map
from pysrone.ring.structures import MatrixStructure
from pysrone.srone import sr1_mask


def sr(ring: FiniteRing) -> np.ndarray:
    return sr1_mask(ring)


def table(ring: FiniteRing) -> ClassificationTable:
    return classification_table(ring)


def matrix_structure(ring: FiniteRing) -> Optional[MatrixStructure]:
    """The 2x2 full matrix structure of `ring`, if it has one."""
    structure = ring.structure
    if isinstance(structure, MatrixStructure) and structure.kind == "matrix" and structure.k == 2:
        return structure
    return None


def is_matrix2(ring: FiniteRing) -> bool:
    return matrix_structure(ring) is not None


def is_matrix2_over_modular(ring: FiniteRing) -> bool:
    structure = matrix_structure(ring)
    return structure is not None and structure.base.kind == "modular"


def is_matrix2_over_commutative(ring: FiniteRing) -> bool:
    structure = matrix_structure(ring)
    return structure is not None and structure.base.is_commutative


def is_small_base(ring: FiniteRing) -> bool:
    """M(2, ring) stays within 256 elements."""
    return ring.order**4 <= 256


def matrix(ring: FiniteRing, entries: Tuple[Tuple[int, int], Tuple[int, int]]) -> int:
    """The 2x2 matrix of `ring` with the given base-ring entry indices."""
    structure = matrix_structure(ring)
    assert structure is not None, f"{ring.id} is not a 2x2 matrix ring"
    (a, b), (c, d) = entries
    return structure.pack({(0, 0): a, (0, 1): b, (1, 0): c, (1, 1): d})


def entries(ring: FiniteRing) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The base indices (e11, e12, e21, e22) of every element of a 2x2 matrix ring."""
    structure = ring.structure
    assert isinstance(structure, MatrixStructure) and structure.k == 2
    unpacked = structure.unpack(ring.elements())
    zero = np.zeros(ring.order, dtype=np.int64)
    return tuple(unpacked.get(pos, zero) for pos in ((0, 0), (0, 1), (1, 0), (1, 1)))  # type: ignore[return-value]


def proper_idempotents(ring: FiniteRing) -> Tuple[int, ...]:
    return tuple(e for e in ring.idempotent_set if e not in (ring.zero, ring.one))


def peirce_members(ring: FiniteRing, left: int, right: int) -> np.ndarray:
    """The elements z with left z right = z, that is the Peirce component left R right."""
    el = ring.elements()
    return np.flatnonzero(ring.vmul(ring.vmul(left, el), right) == el)


def unit_regular_products(ring: FiniteRing) -> np.ndarray:
    """The mask of finite products of unit-regular elements."""

    def build() -> np.ndarray:
        ureg = np.flatnonzero(table(ring).unit_regular)
        reached = table(ring).unit_regular.copy()
        while True:
            grown = reached.copy()
            grown[ring.vmul(np.flatnonzero(reached)[:, None], ureg[None, :])] = True
            if np.array_equal(grown, reached):
                return reached
            reached = grown

    return ring.memo("suite:unit_regular_products", build)


def radical_quotient(ring: FiniteRing) -> Tuple[FiniteRing, np.ndarray]:
    """R/rad(R) with its projection. A ring with zero radical is its own quotient."""
    members = [int(b) for b in np.flatnonzero(table(ring).radical) if b != ring.zero]
    if not members:
        return ring, ring.elements()
    return quotient_map(ring, [ring.decode(b) for b in members])


def comaximal_partners(ring: FiniteRing, a: int) -> np.ndarray:
    """Every t with aR + tR = R."""
    rm = right_ideal_mask(ring)
    reach = rm[a][one_minus(ring)]
    return np.flatnonzero((rm & reach[None, :]).any(axis=1))


def ternary_forms(ring: FiniteRing, a: int) -> Tuple[np.ndarray, np.ndarray]:
    """The tables [x, b] -> a + b - axb and [x, b] -> a + b - bxa."""
    el = ring.elements()
    base = ring.vadd(a, el)[None, :]
    right = ring.vsub(base, ring.vmul(ring.vmul(a, el)[:, None], el[None, :]))
    left = ring.vsub(base, ring.vmul(el[None, :], ring.vmul(el, a)[:, None]))
    return right, left
