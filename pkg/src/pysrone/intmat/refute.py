"""Refutes unit and idempotent stable range one for diag(m, 0) against diag(beta, 1) in M(2, Z).

For a unimodular U = [[a, b], [c, d]], det(A + BU) = md + beta(ad - bc) = md +- beta. For a nontrivial idempotent
P = [[p, q], [r, s]] (trace 1, determinant 0), det(A + BP) = m(1 - p). Neither can be +-1 once m >= 2 and
beta is not congruent to +-1 modulo m.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Optional, Set, Tuple

from pysrone.base import PreconditionError

from .matrix import IntMatrix, det_exact, random_unimodular

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VariantRefutation:
    """The outcome of `variant_refute`.

    Attributes:
        modulus: m of A = diag(m, 0).
        beta: beta of B = diag(beta, 1).
        unit_witness: A unimodular U in the box with A + BU unimodular, if any.
        idempotent_witness: A nontrivial idempotent P in the box with A + BP unimodular, if any.
        units_checked: Unimodular matrices in the box that were tried.
        idempotents_checked: Nontrivial idempotents in the box that were tried.
        unit_residues: The residues det(A + BU) mod m over the box and the random samples.
        idempotent_residues: The residues det(A + BP) mod m over the box and the random samples.
        trivial_dets: det(A + B0) and det(A + BI).
    """

    modulus: int
    beta: int
    unit_witness: Optional[IntMatrix]
    idempotent_witness: Optional[IntMatrix]
    units_checked: int
    idempotents_checked: int
    unit_residues: FrozenSet[int]
    idempotent_residues: FrozenSet[int]
    trivial_dets: Tuple[int, int]

    @property
    def refuted(self) -> bool:
        m, beta = self.modulus, self.beta
        return (
            self.unit_witness is None
            and self.idempotent_witness is None
            and self.unit_residues <= {beta % m, -beta % m}
            and self.idempotent_residues <= {0}
            and all(abs(det) != 1 for det in self.trivial_dets)
        )

    def to_payload(self) -> Dict[str, Any]:
        return {
            "modulus": self.modulus,
            "beta": self.beta,
            "unit_witness": None if self.unit_witness is None else self.unit_witness.to_json(),
            "idempotent_witness": None if self.idempotent_witness is None else self.idempotent_witness.to_json(),
            "units_checked": self.units_checked,
            "idempotents_checked": self.idempotents_checked,
            "unit_residues": sorted(self.unit_residues),
            "idempotent_residues": sorted(self.idempotent_residues),
            "trivial_dets": [str(det) for det in self.trivial_dets],
            "refuted": self.refuted,
        }


def _shape(a: IntMatrix, b: IntMatrix) -> Tuple[int, int]:
    if a.n != 2 or b.n != 2 or not a.is_diagonal() or not b.is_diagonal():
        raise PreconditionError("variant_refute needs A = diag(m, 0) and B = diag(beta, 1)")
    m, zero = a.diagonal()
    beta, one = b.diagonal()
    if zero != 0 or one != 1 or m < 2:
        raise PreconditionError(f"variant_refute needs A = diag(m, 0) with m >= 2 and B = diag(beta, 1), got {m}")
    return m, beta


def variant_refute(
    a: Optional[IntMatrix] = None,
    b: Optional[IntMatrix] = None,
    box: int = 10,
    samples: int = 10**4,
    seed: int = 0,
) -> VariantRefutation:
    """Searches the box [-box, box] for unit and nontrivial idempotent witnesses of A against B, then checks the
    determinant congruences on random unimodular matrices and random conjugates of E11.

    Defaults to A = diag(7, 0) and B = diag(2, 1).

    Raises:
        PreconditionError: A or B is not of the supported shape.
    """
    a = IntMatrix.diag(7, 0) if a is None else a
    b = IntMatrix.diag(2, 1) if b is None else b
    m, beta = _shape(a, b)
    span = range(-box, box + 1)

    unit_witness: Optional[IntMatrix] = None
    unit_residues: Set[int] = set()
    units_checked = 0
    for p, q, r, s in itertools.product(span, repeat=4):
        if abs(p * s - q * r) != 1:
            continue
        units_checked += 1
        u = IntMatrix.from_rows([[p, q], [r, s]])
        det = det_exact(a + b @ u)
        unit_residues.add(det % m)
        if abs(det) == 1 and unit_witness is None:
            unit_witness = u

    idempotent_witness: Optional[IntMatrix] = None
    idempotent_residues: Set[int] = set()
    idempotents_checked = 0
    for p, q, r in itertools.product(span, repeat=3):
        if q * r != p * (1 - p):
            continue
        idempotents_checked += 1
        idem = IntMatrix.from_rows([[p, q], [r, 1 - p]])
        det = det_exact(a + b @ idem)
        idempotent_residues.add(det % m)
        if abs(det) == 1 and idempotent_witness is None:
            idempotent_witness = idem

    rng = random.Random(seed)
    e = IntMatrix.unit(2, 1, 1)
    for _ in range(samples):
        u = random_unimodular(rng, 2)
        unit_residues.add(det_exact(a + b @ u) % m)
        u_inv = IntMatrix.from_rows([[u[1, 1], -u[0, 1]], [-u[1, 0], u[0, 0]]]).scale(det_exact(u))
        idempotent_residues.add(det_exact(a + b @ u @ e @ u_inv) % m)

    report = VariantRefutation(
        m,
        beta,
        unit_witness,
        idempotent_witness,
        units_checked,
        idempotents_checked,
        frozenset(unit_residues),
        frozenset(idempotent_residues),
        (det_exact(a), det_exact(a + b)),
    )
    logger.info(
        "variant refutation m=%d units=%d idempotents=%d refuted=%s",
        m,
        units_checked,
        idempotents_checked,
        report.refuted,
    )
    return report
