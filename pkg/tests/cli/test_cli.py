import json
from pathlib import Path
from typing import Any, List, Tuple

import pytest

from pysrone.cli import run_command


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> Tuple[int, str, str]:
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> Any:
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def write_matrix(path: Path, rows: List[List[int]]) -> str:
    path.write_text(json.dumps({"n": len(rows), "rows": [[str(entry) for entry in row] for row in rows]}))
    return str(path)


def test_ring(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "ring", "M(2,Z/2)")
    assert payload["id"] == "M(2,Z/2)"
    assert payload["order"] == 16
    assert payload["units"] == 6
    assert payload["commutative"] is False
    assert "elements" not in payload

    listed = run_json(capsys, "ring", "Z/3", "--list")
    assert listed["elements"] == [0, 1, 2]


def test_classify(capsys: pytest.CaptureFixture[str]) -> None:
    predicates = run_json(capsys, "classify", "Z/6")
    assert predicates["stable_range_one"] is True
    assert predicates["commutative"] is True

    flags = run_json(capsys, "classify", "Z/8", "--element", "2")
    assert flags["nilpotent"] is True
    assert flags["nilpotency_index"] == 3
    assert flags["unit"] is False


def test_check_sr(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_json(capsys, "check", "sr", "Z/6", "--element", "2") == {"sr": True, "side": "right"}

    payload = run_json(capsys, "check", "sr", "Z/6", "--element", "#2", "--side", "left", "--variant", "unit")
    assert payload == {"sr": True, "side": "left", "variant": "unit"}


def test_check_sjl_agrees(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "check", "sjl", "M(2,Z/2)", "--a", "E11", "--b", "E12", "--x", "E21")
    assert payload["agree"] is True
    assert payload["class"] == "unit"


def test_witness(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "witness", "Z/6", "--element", "2", "--x", "1")
    assert payload["verified"] is True

    # a = 0, t = 0 is not comaximal
    code, _, err = run(capsys, "witness", "Z/6", "--element", "0", "--t", "0")
    assert code == 2
    assert err.startswith("error: ")


def test_intmat_check(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    singular = write_matrix(tmp_path / "diag2_0.json", [[2, 0], [0, 0]])
    assert run_json(capsys, "intmat", "check", "--matrix", singular) == {"sr": "yes", "det": "0"}

    regular = write_matrix(tmp_path / "diag2_1.json", [[2, 0], [0, 1]])
    payload = run_json(capsys, "intmat", "check", "--matrix", regular)
    assert payload["sr"] == "no"
    assert payload["det"] == "2"
    assert "refutation" in payload


def test_intmat_snf(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    matrix = write_matrix(tmp_path / "a.json", [[2, 4], [6, 8]])
    payload = run_json(capsys, "intmat", "snf", "--matrix", matrix)
    assert payload["invariants"] == ["2", "4"]


def test_intmat_complete_row(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "intmat", "complete-row", "--row", "2,3")
    assert payload["row"] == ["2", "3"]
    assert payload["completion"]["rows"][0] == ["2", "3"]

    assert run_json(capsys, "intmat", "complete-row", "--row", "2,4")["completion"] is None


def test_intmat_bezout(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "intmat", "bezout", "--p", "4", "--q", "6")
    assert payload["a"] == "2"
    assert (payload["s"], payload["t"]) == ("2", "3")
    assert payload["C"]["rows"] == [["4", "6"], ["0", "0"]]
    assert payload["sr"] == "yes"


def test_intmat_audit(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "intmat", "audit-6-12")
    assert payload["sr1_orientation"] == "block-transpose"
    assert payload["labels_swapped"] is True


def test_intmat_missing_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    code, out, err = run(capsys, "intmat", "check", "--matrix", str(tmp_path / "missing.json"))
    assert code == 2
    assert out == ""
    assert "cannot read matrix file" in err


def test_verify_is_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ("verify", "--theorems", "L3.2-unit", "--rings", "M(2,Z/2)", "--omit-timing")
    code, first, _ = run(capsys, *argv)
    assert code == 0
    code, second, _ = run(capsys, *argv)
    assert code == 0
    assert first == second

    reports = json.loads(first)
    assert reports == [
        {
            "theorem": "L3.2-unit",
            "ring": "M(2,Z/2)",
            "instances": 4096,
            "outcome": "pass",
            "counterexample": None,
            "elapsed_ms": None,
        }
    ]


def test_verify_writes_output_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--theorems", "T2.2", "--rings", "Z/4;Z/6", "--omit-timing", "--output", str(target)
    )
    assert code == 0
    assert out == ""
    reports = json.loads(target.read_text())
    assert [report["ring"] for report in reports] == ["Z/4", "Z/6"]


def test_verify_text_format(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "--format", "text", "verify", "--theorems", "T2.2", "--rings", "Z/4", "--omit-timing")
    assert code == 0
    header, row = out.splitlines()
    assert header.split()[:3] == ["theorem", "ring", "instances"]
    assert row.split()[:2] == ["T2.2", "Z/4"]


def test_counterexample(capsys: pytest.CaptureFixture[str]) -> None:
    payload = run_json(capsys, "counterexample", "trace-mismatch")
    assert payload["kind"] == "trace-mismatch"
    assert payload["found"] is True
    assert payload["ring"] == "M(2,Z/2)"


@pytest.mark.parametrize(
    "argv",
    [
        ["ring", "M(2 Z/4"],
        ["verify", "--theorems", "T9.9", "--rings", "Z/2"],
        ["check", "sr", "Z/6", "--element", "#6"],
        ["check", "sr", "Z/6", "--element", "E12"],
        ["check", "sr", "Z/6"],
        ["intmat", "complete-row", "--row", "1,x"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys: pytest.CaptureFixture[str], argv: List[str]) -> None:
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_ring_spec_error_names_the_offset(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "ring", "M(2 Z/4")
    assert code == 2
    assert "at offset 4" in err


def test_invalid_budget_environment(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SRONE_BUDGET", "lots")
    code, _, err = run(capsys, "verify", "--theorems", "T2.2", "--rings", "Z/2")
    assert code == 2
    assert "SRONE_BUDGET" in err


def test_help_exits_cleanly(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "srone" in out
