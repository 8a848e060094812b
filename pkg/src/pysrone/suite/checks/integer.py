"""Checks on integer matrices. They run once, under the ring id "M(n,Z)", on random draws seeded by the run's seed."""

import math
import random

from pysrone.intmat import (
    IntMatrix,
    MatrixRing,
    audit_6_12,
    bezout_matrix,
    complete_row,
    det_exact,
    diagonal_criterion,
    int_witness_certificate,
    random_matrix,
    random_unimodular,
    remark_permuted_triangular,
    sr1_int,
    structural_rules,
    variant_refute,
)
from pysrone.intmat.rules import StructuralRule
from pysrone.srone import schur_reduce

from ..base import Cell, CheckContext, theorem

ENTRY_BOUND = 9
SIZES = (2, 3)
WITNESS_SAMPLES = 200
SPARSE_ZERO_RATE = 0.7


def _random_square(rng: random.Random) -> IntMatrix:
    return random_matrix(rng, rng.choice(SIZES), ENTRY_BOUND)


def _sparse(rng: random.Random, n: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [
            [0 if rng.random() < SPARSE_ZERO_RATE else rng.randint(-ENTRY_BOUND, ENTRY_BOUND) for _ in range(n)]
            for _ in range(n)
        ]
    )


def _singular(rng: random.Random, n: int) -> IntMatrix:
    """U diag(d1, ..., d_{n-1}, 0) V for random unimodular U and V."""
    diagonal = [rng.randint(-ENTRY_BOUND, ENTRY_BOUND) for _ in range(n - 1)] + [0]
    return random_unimodular(rng, n) @ IntMatrix.diag(*diagonal) @ random_unimodular(rng, n)


@theorem("T3.7-int", cell=Cell.INT)
def integer_determinant_identity(ctx: CheckContext) -> None:
    """det(A + B - AXB) = det(A + B - BXA) on random integer triples."""
    rng = ctx.rng()
    for _ in range(ctx.config.random_samples):
        n = rng.choice(SIZES)
        a, b, x = (random_matrix(rng, n, ENTRY_BOUND) for _ in range(3))
        ctx.count()
        ctx.expect(det_exact(a + b - a @ x @ b) == det_exact(a + b - b @ x @ a), a=a, b=b, x=x)


@theorem("C3.10-int", cell=Cell.INT)
def integer_transpose(ctx: CheckContext) -> None:
    rng = ctx.rng()
    for _ in range(ctx.config.random_samples):
        a = _random_square(rng)
        ctx.count()
        ctx.expect(sr1_int(a).sr1 == sr1_int(a.transpose()).sr1, a=a)


@theorem("E2.5B", cell=Cell.INT)
def integers(ctx: CheckContext) -> None:
    """An integer has stable range one iff it is 0 or +-1, and every other verdict carries a valid refutation."""
    for value in range(-20, 21):
        ctx.count()
        verdict = sr1_int(IntMatrix.from_rows([[value]]))
        ctx.expect(verdict.sr1 == (value in (0, 1, -1)), data={"value": value})
        if verdict.refutation is not None:
            refutation = verdict.refutation.to_payload()
            ctx.expect(verdict.refutation.verify(), data={"value": value, "refutation": refutation})


@theorem("E2.9", cell=Cell.INT)
def commuting_sum(ctx: CheckContext) -> None:
    """diag(2, 0) and diag(0, 2) have stable range one and annihilate each other, but their sum 2I does not."""
    a, b = IntMatrix.diag(2, 0), IntMatrix.diag(0, 2)
    zero = IntMatrix.zeros(2)
    ctx.count(3)
    ctx.expect(sr1_int(a).sr1 and sr1_int(b).sr1, a=a, b=b)
    ctx.expect(a @ b == zero and b @ a == zero, a=a, b=b)
    ctx.expect(not sr1_int(a + b).sr1, sum=a + b)
    ctx.exhibit({"a": a.to_json(), "b": b.to_json(), "sum": sr1_int(a + b).to_payload()})


@theorem("E3.12", cell=Cell.INT)
def variant_refutation(ctx: CheckContext) -> None:
    """diag(7, 0) has no unit or idempotent witness against diag(2, 1)."""
    report = variant_refute(samples=ctx.config.random_samples, seed=ctx.config.seed)
    ctx.count(report.units_checked + report.idempotents_checked + ctx.config.random_samples)
    ctx.expect(report.refuted, data=report.to_payload())
    ctx.exhibit(report.to_payload())


@theorem("E5.10", cell=Cell.INT)
def nonregular_entry(ctx: CheckContext) -> None:
    """2E11 has stable range one in M(2, Z) but is not regular: (ABA)[1, 1] = 4b11 is never 2."""
    a = IntMatrix.unit(2, 1, 1).scale(2)
    ctx.count()
    ctx.expect(sr1_int(a).sr1 and structural_rules(a) == StructuralRule.SINGLE_ENTRY, a=a)
    ctx.expect(not sr1_int(IntMatrix.from_rows([[2]])).sr1, data={"value": 2})

    rng = ctx.rng()
    for _ in range(ctx.config.random_samples):
        b = random_matrix(rng, 2, ENTRY_BOUND)
        corner = (a @ b @ a)[0, 0]
        ctx.count()
        ctx.expect(corner == 4 * b[0, 0] and corner != 2, a=a, b=b)


@theorem("E5.11", cell=Cell.INT)
def bezout_rows(ctx: CheckContext) -> None:
    """[[p, q], [0, 0]] = (aE11)U with a = gcd(p, q) and U unimodular, and it has stable range one."""
    rng = ctx.rng()
    e11 = IntMatrix.unit(2, 1, 1)
    for _ in range(ctx.config.random_samples):
        p, q = rng.randint(-99, 99), rng.randint(-99, 99)
        if p == 0 and q == 0:
            continue
        ctx.count()
        form = bezout_matrix(p, q)
        ctx.expect(
            form.a == math.gcd(p, q)
            and form.s * form.x - form.t * form.y == 1
            and e11.scale(form.a) @ form.U == form.C
            and form.verdict.sr1,
            data={"p": p, "q": q},
            U=form.U,
        )


@theorem("E4.2A-int", cell=Cell.INT)
def integer_completable_rows(ctx: CheckContext) -> None:
    """A row completes to a unimodular V iff its gcd is 1, and then E11 V has stable range one."""
    rng = ctx.rng()
    for _ in range(ctx.config.random_samples):
        n = rng.choice(SIZES)
        row = [rng.randint(-ENTRY_BOUND, ENTRY_BOUND) for _ in range(n)]
        ctx.count()
        completion = complete_row(row)
        if math.gcd(*row) != 1:
            ctx.expect(completion is None, data={"row": row})
            continue
        ctx.expect(completion is not None, data={"row": row})
        assert completion is not None
        ctx.expect(
            completion.to_lists()[0] == row
            and abs(det_exact(completion)) == 1
            and sr1_int(IntMatrix.unit(n, 1, 1) @ completion).sr1,
            data={"row": row},
            V=completion,
        )


@theorem("E6.11", cell=Cell.INT)
def block_orientations(ctx: CheckContext) -> None:
    """For a = E12, b = E11 and c = 2E21 over M(2, Z), c - ab = 2E21 has stable range one and c - ba does not."""
    ring = MatrixRing(2)
    a, b, c = IntMatrix.unit(2, 1, 2), IntMatrix.unit(2, 1, 1), IntMatrix.unit(2, 2, 1).scale(2)
    with_ab = schur_reduce(ring, b, a, c)
    with_ba = schur_reduce(ring, a, b, c)
    ctx.count(2)
    ctx.expect(with_ab.datum == c and det_exact(with_ab.datum) == 0 and with_ab.verdict, datum=with_ab.datum)
    ctx.expect(
        with_ba.datum == c - IntMatrix.unit(2, 1, 2) and det_exact(with_ba.datum) == 2 and not with_ba.verdict,
        datum=with_ba.datum,
    )
    ctx.exhibit({"c-ab": with_ab.datum.to_json(), "c-ba": with_ba.datum.to_json()})


@theorem("E6.13-audit", cell=Cell.INT)
def orientation_audit(ctx: CheckContext) -> None:
    """The determinant and Schur verdicts agree on every orientation of the 4x4 block matrix."""
    audit = audit_6_12()
    ctx.count(len(audit.rows))
    for row in audit.rows:
        ctx.expect(row.agree, data=row.to_payload())
    ctx.expect(audit.sr1_orientation != "undetermined", data=audit.to_payload())
    ctx.exhibit(audit.to_payload())


@theorem("T7.2", cell=Cell.INT)
def determinant_rule(ctx: CheckContext) -> None:
    """Stable range one in M(n, Z) holds iff det is 0 or +-1, each no comes with a valid refutation, and diagonal
    matrices follow the entry criterion."""
    rng = ctx.rng()
    for _ in range(ctx.config.random_samples):
        a = _random_square(rng)
        ctx.count()
        verdict = sr1_int(a)
        ctx.expect(verdict.sr1 == (verdict.det in (0, 1, -1)) and verdict.det == det_exact(a), a=a)
        if verdict.refutation is not None:
            ctx.expect(verdict.refutation.verify(), data=verdict.refutation.to_payload(), a=a)

        diagonal = [rng.randint(-3, 3) for _ in range(rng.choice(SIZES))]
        d = IntMatrix.diag(*diagonal)
        ctx.count()
        ctx.expect(sr1_int(d).sr1 == diagonal_criterion(diagonal), a=d)


@theorem("T7.2-witness", cell=Cell.INT)
def constructive_witnesses(ctx: CheckContext) -> None:
    """Singular matrices get certified witnesses B with A + (I - AX)B unimodular for random X."""
    rng = ctx.rng()
    for _ in range(min(ctx.config.random_samples, WITNESS_SAMPLES)):
        n = rng.choice(SIZES)
        a, x = _singular(rng, n), random_matrix(rng, n, ENTRY_BOUND)
        ctx.count()
        cert = int_witness_certificate(a, x)
        unit = a + (IntMatrix.identity(n) - a @ x) @ cert.b
        ctx.expect(cert.verify(MatrixRing(n)) and abs(det_exact(unit)) == 1, a=a, x=x, b=cert.b)


@theorem("C7.5", cell=Cell.INT)
def product_orders(ctx: CheckContext) -> None:
    """AB has stable range one iff BA does."""
    rng = ctx.rng()
    for _ in range(ctx.config.random_samples):
        n = rng.choice(SIZES)
        a, b = random_matrix(rng, n, 2), random_matrix(rng, n, 2)
        ctx.count()
        ctx.expect(sr1_int(a @ b).sr1 == sr1_int(b @ a).sr1, a=a, b=b)


@theorem("R-rules", cell=Cell.INT)
def structural_rule_agreement(ctx: CheckContext) -> None:
    """Every structural rule that fires agrees with the determinant decision, as do permuted triangular matrices."""
    rng = ctx.rng()
    fired = 0
    for _ in range(ctx.config.random_samples):
        a = _sparse(rng, rng.choice((2, 3, 4)))
        ctx.count()
        rule = structural_rules(a)
        if rule is None:
            continue
        fired += 1
        ctx.expect(sr1_int(a).sr1, data={"rule": rule.value}, a=a)
    ctx.expect(fired > 0, data={"fired": fired})

    for seed in range(ctx.config.seed, ctx.config.seed + 100):
        a = remark_permuted_triangular(rng.choice((2, 3, 4)), seed)
        ctx.count()
        ctx.expect(sr1_int(a).sr1, data={"seed": seed}, a=a)
