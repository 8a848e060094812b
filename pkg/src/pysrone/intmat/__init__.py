"""Stable range one in M(n, Z): exact determinants, Smith normal form, the determinant decision with refutations,
constructive witnesses, structural rules and named examples."""

from .audit import OrientationAudit, OrientationRow, audit_6_12
from .decide import IntVerdict, RefutationCertificate, diagonal_criterion, sr1_int
from .matrix import IntMatrix, MatrixRing, det_exact, elementary, random_matrix, random_unimodular
from .refute import VariantRefutation, variant_refute
from .rules import (
    BezoutFactorization,
    StructuralRule,
    bezout_matrix,
    complete_row,
    remark_permuted_triangular,
    structural_rules,
)
from .snf import SnfResult, snf
from .witness import int_witness, int_witness_certificate

__all__ = [
    "BezoutFactorization",
    "IntMatrix",
    "IntVerdict",
    "MatrixRing",
    "OrientationAudit",
    "OrientationRow",
    "RefutationCertificate",
    "SnfResult",
    "StructuralRule",
    "VariantRefutation",
    "audit_6_12",
    "bezout_matrix",
    "complete_row",
    "det_exact",
    "diagonal_criterion",
    "elementary",
    "int_witness",
    "int_witness_certificate",
    "random_matrix",
    "random_unimodular",
    "remark_permuted_triangular",
    "snf",
    "sr1_int",
    "structural_rules",
    "variant_refute",
]
