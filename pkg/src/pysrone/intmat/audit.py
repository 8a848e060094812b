"""Decides which orientation of the 2x2 block matrix [[1, a], [b, c]] over M(2, Z) has stable range one.

With a = E12, b = E11 and c = 2E21, the block matrix M = [[1, a], [b, c]] reduces to c - ba and its block transpose
[[1, b], [a, c]] to c - ab. One of the two has stable range one and the other does not, and the determinant of the
assembled 4x4 integer matrix must agree with the Schur reduction for each. The audit computes both criteria and
reports the orientation that carries stable range one, flagging a labeling that attributes it to M.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from pysrone.srone import schur_reduce

from .decide import sr1_int
from .matrix import IntMatrix, MatrixRing, det_exact

logger = logging.getLogger(__name__)

BLOCKS = {
    "a": IntMatrix.unit(2, 1, 2),
    "b": IntMatrix.unit(2, 1, 1),
    "c": IntMatrix.unit(2, 2, 1).scale(2),
}


@dataclass(frozen=True)
class OrientationRow:
    """One orientation of the block matrix, decided by its 4x4 determinant and by its Schur datum."""

    label: str
    matrix: IntMatrix
    det: int
    sr1: bool
    schur_datum: IntMatrix
    schur_det: int
    schur_sr1: bool

    @property
    def agree(self) -> bool:
        return self.sr1 == self.schur_sr1

    def to_payload(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "matrix": self.matrix.to_json(),
            "det": str(self.det),
            "sr": "yes" if self.sr1 else "no",
            "schur_datum": self.schur_datum.to_json(),
            "schur_det": str(self.schur_det),
            "schur_sr": "yes" if self.schur_sr1 else "no",
            "agree": self.agree,
        }


@dataclass(frozen=True)
class OrientationAudit:
    """The orientation verdicts side by side.

    Attributes:
        rows: The block matrix M, its block transpose and its full 4x4 transpose.
        sr1_orientation: The label of the block orientation with stable range one.
        labels_swapped: True when M itself does not have stable range one, so attributing it to M is wrong.
    """

    rows: Tuple[OrientationRow, ...]
    sr1_orientation: str
    labels_swapped: bool

    def to_payload(self) -> Dict[str, Any]:
        return {
            "rows": [row.to_payload() for row in self.rows],
            "sr1_orientation": self.sr1_orientation,
            "labels_swapped": self.labels_swapped,
        }


def _row(label: str, one: IntMatrix, upper: IntMatrix, lower: IntMatrix, corner: IntMatrix) -> OrientationRow:
    assert one == IntMatrix.identity(one.n), "the audit expects an identity pivot block"
    matrix = IntMatrix.block([[one, upper], [lower, corner]])
    reduction = schur_reduce(MatrixRing(upper.n), upper, lower, corner)
    verdict = sr1_int(matrix)
    return OrientationRow(
        label,
        matrix,
        verdict.det,
        verdict.sr1,
        reduction.datum,
        det_exact(reduction.datum),
        bool(reduction.verdict),
    )


def audit_6_12() -> OrientationAudit:
    a, b, c = BLOCKS["a"], BLOCKS["b"], BLOCKS["c"]
    one = IntMatrix.identity(2)
    rows = (
        _row("M", one, a, b, c),
        _row("block-transpose", one, b, a, c),
        _row("transpose", one, b.transpose(), a.transpose(), c.transpose()),
    )
    for row in rows:
        logger.info("audit %s det=%d schur_det=%d agree=%s", row.label, row.det, row.schur_det, row.agree)

    block_rows = [row for row in rows[:2] if row.sr1 and row.schur_sr1]
    orientation = block_rows[0].label if len(block_rows) == 1 else "undetermined"
    return OrientationAudit(rows, orientation, labels_swapped=not rows[0].sr1)
