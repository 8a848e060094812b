import json
from typing import Any, Dict, List, Sequence

FORMATS = ("json", "text")


def render(payload: Any, fmt: str) -> str:
    """Renders a command result. Both formats end with a newline and depend only on the payload."""
    if fmt == "json":
        return json.dumps(payload, indent=2, separators=(",", ": ")) + "\n"
    if fmt == "text":
        return _text(payload) + "\n"
    assert False, "unrecognised output format"


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _text(payload: Any) -> str:
    if isinstance(payload, list) and payload and all(isinstance(row, dict) for row in payload):
        return _table(payload)
    if isinstance(payload, dict):
        width = max((len(key) for key in payload), default=0)
        return "\n".join(f"{key.ljust(width)}  {_scalar(value)}" for key, value in payload.items())
    return _scalar(payload)


def _table(rows: Sequence[Dict[str, Any]]) -> str:
    columns: List[str] = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    cells = [[_scalar(row.get(column)) for column in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in cells)) for i, column in enumerate(columns)]
    lines = ["  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip()]
    lines.extend("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells)
    return "\n".join(lines)
