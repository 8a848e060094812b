"""Command handlers. Each takes the parsed arguments and returns the payload to print and the exit code."""

import argparse
import json
import logging
from typing import Any, Dict, List, Optional, Tuple

from pysrone.base import LiteralError
from pysrone.classify import classify, ring_predicates
from pysrone.config import SuiteConfig
from pysrone.intmat import (
    IntMatrix,
    MatrixRing,
    audit_6_12,
    bezout_matrix,
    complete_row,
    int_witness_certificate,
    snf,
    sr1_int,
    structural_rules,
    variant_refute,
)
from pysrone.jacobson import ElementClass, prop36_check, sjl_check
from pysrone.ring import FiniteRing, construct_ring, parse_literal
from pysrone.srone import Side, VariantKind, has_sr1, pair_witness, sr1_witness
from pysrone.suite import (
    VerificationSuite,
    default_registry,
    find_counterexamples,
    registry_from_specs,
    suite_failed,
)

logger = logging.getLogger(__name__)

Result = Tuple[Any, int]


def parse_element(ring: FiniteRing, text: str) -> int:
    """Reads an element flag: `#i` is the element with index i, anything else an element literal.

    Raises:
        LiteralError: The index is out of range or the literal does not belong to `ring`.
    """
    text = text.strip()
    if text.startswith("#"):
        try:
            index = int(text[1:])
        except ValueError:
            raise LiteralError(f"malformed element index {text!r}") from None
        ring.decode(index)
        return index
    return ring.encode(parse_literal(text))


def read_matrix(path: str) -> IntMatrix:
    try:
        with open(path) as f:
            payload = json.load(f)
    except (OSError, ValueError) as err:
        raise LiteralError(f"cannot read matrix file {path}: {err}") from None
    return IntMatrix.from_json(payload)


def ring_command(args: argparse.Namespace) -> Result:
    ring = construct_ring(args.spec)
    payload: Dict[str, Any] = {
        "id": ring.id,
        "order": ring.order,
        "kind": ring.kind,
        "commutative": ring.is_commutative,
        "involution": ring.involution is not None,
        "units": len(ring.units()),
        "idempotents": [ring.literal(e) for e in ring.idempotent_set],
    }
    if args.list:
        payload["elements"] = [ring.literal(a) for a in range(ring.order)]
    return payload, 0


def classify_command(args: argparse.Namespace) -> Result:
    ring = construct_ring(args.spec)
    if args.element is None:
        return {"ring": ring.id, **ring_predicates(ring).to_payload()}, 0
    a = parse_element(ring, args.element)
    return {"ring": ring.id, "element": ring.literal(a), **classify(ring, a).to_payload()}, 0


def check_sr_command(args: argparse.Namespace) -> Result:
    ring = construct_ring(args.spec)
    a = parse_element(ring, args.element)
    side, variant = Side(args.side), VariantKind(args.variant)
    payload: Dict[str, Any] = {"sr": has_sr1(ring, a, side, variant), "side": side.value}
    if variant != VariantKind.FULL:
        payload["variant"] = variant.value
    return payload, 0


def check_sjl_command(args: argparse.Namespace) -> Result:
    ring = construct_ring(args.spec)
    a, b, x = (parse_element(ring, text) for text in (args.a, args.b, args.x))
    cls = ElementClass(args.cls)
    right, left = sjl_check(ring, a, b, x, cls)
    return {"class": cls.value, "a+b-axb": right, "a+b-bxa": left, "agree": right == left}, 0


def check_prop36_command(args: argparse.Namespace) -> Result:
    ring = construct_ring(args.spec)
    a, x = parse_element(ring, args.a), parse_element(ring, args.x)
    cls = ElementClass(args.cls)
    result = prop36_check(ring, a, x, cls)
    decompositions: Optional[List[List[Any]]] = None
    if result.decompositions is not None:
        decompositions = [[ring.literal(p), ring.literal(q)] for p, q in result.decompositions]
    payload = {
        "class": cls.value,
        "memberships": list(result.memberships),
        "agree": result.agree,
        "decompositions": decompositions,
    }
    return payload, 0


def witness_command(args: argparse.Namespace) -> Result:
    ring = construct_ring(args.spec)
    a = parse_element(ring, args.element)
    side, variant = Side(args.side), VariantKind(args.variant)
    if args.x is not None:
        cert = sr1_witness(ring, a, parse_element(ring, args.x), side, variant)
    else:
        cert = pair_witness(ring, a, parse_element(ring, args.t), side, variant)
    if cert is None:
        return {"witness": None}, 0
    return {"witness": cert.to_payload(ring), "verified": cert.verify(ring)}, 0


def intmat_command(args: argparse.Namespace) -> Result:
    action = args.action
    if action == "check":
        return sr1_int(read_matrix(args.matrix)).to_payload(), 0
    if action == "witness":
        a, x = read_matrix(args.matrix), read_matrix(args.x)
        cert = int_witness_certificate(a, x)
        return {"b": cert.b.to_json(), "unit": cert.unit.to_json(), "verified": cert.verify(MatrixRing(a.n))}, 0
    if action == "snf":
        form = snf(read_matrix(args.matrix))
        payload: Dict[str, Any] = {
            "U": form.U.to_json(),
            "D": form.D.to_json(),
            "V": form.V.to_json(),
            "invariants": [str(d) for d in form.invariants],
        }
        return payload, 0
    if action == "rules":
        a = read_matrix(args.matrix)
        rule = structural_rules(a)
        return {"rule": None if rule is None else rule.value, **sr1_int(a).to_payload()}, 0
    if action == "complete-row":
        completion = complete_row(args.row)
        payload = {
            "row": [str(entry) for entry in args.row],
            "completion": None if completion is None else completion.to_json(),
        }
        return payload, 0
    if action == "bezout":
        form = bezout_matrix(args.p, args.q)
        payload = {
            "a": str(form.a),
            "s": str(form.s),
            "t": str(form.t),
            "x": str(form.x),
            "y": str(form.y),
            "U": form.U.to_json(),
            "C": form.C.to_json(),
            **form.verdict.to_payload(),
        }
        return payload, 0
    if action == "refute-3-12":
        return variant_refute(box=args.box, samples=args.samples, seed=args.seed).to_payload(), 0
    if action == "audit-6-12":
        return audit_6_12().to_payload(), 0
    assert False, "unrecognised intmat action"


def verify_command(args: argparse.Namespace) -> Result:
    config = SuiteConfig.from_env(budget=args.budget, workers=args.workers, seed=args.seed)
    registry = default_registry() if args.rings == "default" else registry_from_specs(args.rings.split(";"))
    ids = [name for name in args.theorems.split(",") if name.strip()]
    logger.info("verify rings=%d theorems=%s", len(registry), ",".join(ids))
    reports = VerificationSuite(registry, config).select(*ids).execute()
    payload = [report.to_payload(args.omit_timing) for report in reports]
    return payload, 1 if suite_failed(reports) else 0


def counterexample_command(args: argparse.Namespace) -> Result:
    config = SuiteConfig.from_env(budget=args.budget)
    result = find_counterexamples(args.kind, config.budget)
    return result.to_payload(), 0
