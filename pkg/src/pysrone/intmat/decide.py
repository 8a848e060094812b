import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional

from pysrone.srone import CERTIFICATES

from .matrix import IntMatrix, det_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefutationCertificate:
    """Why a matrix with |det| = d >= 2 cannot have stable range one.

    A witness for d I_n against d^n I_n would give a unimodular d I_n + m B with m = 1 + d^(n+1), forcing
    d^n = det(d I_n) to be congruent to +1 or -1 modulo m.
    """

    d: int
    n: int
    modulus: int
    residue: int

    @classmethod
    def build(cls, d: int, n: int) -> "RefutationCertificate":
        modulus = 1 + d ** (n + 1)
        return cls(d, n, modulus, pow(d, n, modulus))

    def verify(self) -> bool:
        return (
            self.d >= 2
            and self.modulus == 1 + self.d ** (self.n + 1)
            and self.residue == pow(self.d, self.n, self.modulus)
            and self.residue not in (1, self.modulus - 1)
        )

    def to_payload(self) -> Dict[str, Any]:
        return {"d": str(self.d), "n": self.n, "modulus": str(self.modulus), "residue": str(self.residue)}


@dataclass(frozen=True)
class IntVerdict:
    """The stable range one decision for an integer matrix: yes iff det is 0 or +-1, otherwise a refutation."""

    det: int
    refutation: Optional[RefutationCertificate]

    @property
    def sr1(self) -> bool:
        return self.refutation is None

    def __bool__(self) -> bool:
        return self.sr1

    def to_payload(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"sr": "yes" if self.sr1 else "no", "det": str(self.det)}
        if self.refutation is not None:
            payload["refutation"] = self.refutation.to_payload()
        return payload


def sr1_int(a: IntMatrix) -> IntVerdict:
    """Decides stable range one of `a` in M(n, Z) from its determinant.

    Raises:
        CertificateError: The refutation certificate fails its own check.
    """
    det = det_exact(a)
    if det in (0, 1, -1):
        return IntVerdict(det, None)
    refutation = RefutationCertificate.build(abs(det), a.n)
    if not refutation.verify():
        raise CERTIFICATES.reject(f"refutation certificate failed for det={det}")
    logger.debug("sr1_int n=%d det=%d modulus=%d", a.n, det, refutation.modulus)
    return IntVerdict(det, refutation)


def diagonal_criterion(entries: Iterable[int]) -> bool:
    """diag(a1, ..., an) has stable range one iff some ai is 0 or every ai is +-1."""
    values = list(entries)
    return 0 in values or all(abs(v) == 1 for v in values)
