import abc
import re
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from .base import LiteralError

Literal = Any

_MATRIX_UNIT = re.compile(r"^E(\d)(\d)$")


class ElementCodec(abc.ABC):
    """ElementCodec maps element literals to canonical element indices and back.

    Index 0 is always the zero element of the ring.
    """

    @abc.abstractmethod
    def encode(self, literal: Literal) -> int:
        pass

    @abc.abstractmethod
    def decode(self, index: int) -> Literal:
        pass


class ModularCodec(ElementCodec):
    """Z/n literals are least nonnegative residues and the index is the residue itself."""

    def __init__(self, n: int):
        self._n = n

    def encode(self, literal: Literal) -> int:
        if isinstance(literal, bool) or not isinstance(literal, int):
            raise LiteralError(f"expected a residue of Z/{self._n}, got {render_literal(literal)}")
        if not 0 <= literal < self._n:
            raise LiteralError(f"residue {literal} out of range for Z/{self._n}")
        return literal

    def decode(self, index: int) -> Literal:
        return int(index)


class MatrixCodec(ElementCodec):
    """Square matrix literals over a base ring.

    The index is the row-major mixed-radix number of the base indices stored at `positions`, first position most
    significant. Full matrix rings store every position, upper-triangular rings only the positions with i <= j.
    Literals may also be matrix-unit names such as `E12` (1-based row and column).
    """

    def __init__(
        self, k: int, base: ElementCodec, base_order: int, base_one: int, positions: Sequence[Tuple[int, int]]
    ):
        self._k = k
        self._base = base
        self._base_order = base_order
        self._base_one = base_one
        self._positions = list(positions)
        self._position_set = set(self._positions)

    def encode(self, literal: Literal) -> int:
        if isinstance(literal, str):
            return self._encode_unit(literal)
        if not isinstance(literal, list) or len(literal) != self._k:
            raise LiteralError(f"expected a {self._k}x{self._k} matrix literal, got {render_literal(literal)}")

        digits: Dict[Tuple[int, int], int] = {}
        for i, row in enumerate(literal):
            if not isinstance(row, list) or len(row) != self._k:
                raise LiteralError(f"row {i} of {render_literal(literal)} is not of length {self._k}")
            for j, entry in enumerate(row):
                digit = self._base.encode(entry)
                if (i, j) in self._position_set:
                    digits[(i, j)] = digit
                elif digit != 0:
                    raise LiteralError(f"entry ({i + 1},{j + 1}) must be zero in a triangular literal")
        return self._pack(digits)

    def decode(self, index: int) -> Literal:
        digits = self.digits(index)
        zero = self._base.decode(0)
        rows: List[List[Literal]] = [[zero for _ in range(self._k)] for _ in range(self._k)]
        for (i, j), digit in zip(self._positions, digits):
            rows[i][j] = self._base.decode(digit)
        return rows

    def digits(self, index: int) -> List[int]:
        out = []
        for _ in self._positions:
            index, digit = divmod(int(index), self._base_order)
            out.append(digit)
        return out[::-1]

    def _encode_unit(self, name: str) -> int:
        match = _MATRIX_UNIT.match(name)
        if match is None:
            raise LiteralError(f"unknown matrix literal {name!r}")
        i, j = int(match.group(1)) - 1, int(match.group(2)) - 1
        if (i, j) not in self._position_set:
            raise LiteralError(f"matrix unit {name} is not an element of this ring")
        return self._pack({(i, j): self._base_one})

    def _pack(self, digits: Dict[Tuple[int, int], int]) -> int:
        index = 0
        for position in self._positions:
            index = index * self._base_order + digits.get(position, 0)
        return index


class ProductCodec(ElementCodec):
    """Product literals are tuples, indexed mixed-radix with the first coordinate most significant."""

    def __init__(self, factors: Sequence[ElementCodec], orders: Sequence[int]):
        self._factors = list(factors)
        self._orders = list(orders)

    def encode(self, literal: Literal) -> int:
        if not isinstance(literal, tuple) or len(literal) != len(self._factors):
            raise LiteralError(f"expected a {len(self._factors)}-tuple literal, got {render_literal(literal)}")
        index = 0
        for codec, order, part in zip(self._factors, self._orders, literal):
            index = index * order + codec.encode(part)
        return index

    def decode(self, index: int) -> Literal:
        parts = []
        index = int(index)
        for codec, order in zip(reversed(self._factors), reversed(self._orders)):
            index, digit = divmod(index, order)
            parts.append(codec.decode(digit))
        return tuple(reversed(parts))


class SubsetCodec(ElementCodec):
    """Literals of a ring carried by parent-ring elements (corner rings and quotient representatives).

    `members[i]` is the parent index of local element i and `lookup[p]` the local index of parent element p, or -1
    when p does not belong to the ring.
    """

    def __init__(self, parent: ElementCodec, members: np.ndarray, lookup: np.ndarray, name: str):
        self._parent = parent
        self._members = members
        self._lookup = lookup
        self._name = name

    def encode(self, literal: Literal) -> int:
        local = int(self._lookup[self._parent.encode(literal)])
        if local < 0:
            raise LiteralError(f"{render_literal(literal)} is not an element of {self._name}")
        return local

    def decode(self, index: int) -> Literal:
        return self._parent.decode(int(self._members[index]))


def parse_literal(text: str) -> Literal:
    """Parses the text form of an element literal.

    Args:
        text: Literal text such as `5`, `(1,2)`, `[[1,0],[0,1]]` or `E12`.

    Returns:
        Literal: An int, tuple, nested list or matrix-unit name.

    Raises:
        LiteralError: The text is not a well-formed literal.
    """
    literal, pos = read_literal(text, 0)
    pos = _skip_space(text, pos)
    if pos != len(text):
        raise LiteralError("unexpected trailing input", pos)
    return literal


def read_literal(text: str, pos: int) -> Tuple[Literal, int]:
    """Reads one literal starting at `pos`, returning it with the offset just past it."""
    pos = _skip_space(text, pos)
    if pos >= len(text):
        raise LiteralError("expected a literal", pos)

    ch = text[pos]
    if ch in "[(":
        close = "]" if ch == "[" else ")"
        items, pos = _read_items(text, pos + 1, close)
        return (items if ch == "[" else tuple(items)), pos
    if ch == "-" or ch.isdigit():
        end = pos + 1
        while end < len(text) and text[end].isdigit():
            end += 1
        if text[pos:end] == "-":
            raise LiteralError("expected digits after '-'", pos)
        return int(text[pos:end]), end
    if ch == "E":
        end = pos + 1
        while end < len(text) and text[end].isdigit():
            end += 1
        return text[pos:end], end
    raise LiteralError(f"unexpected character {ch!r}", pos)


def render_literal(literal: Literal) -> str:
    if isinstance(literal, tuple):
        return "(" + ",".join(render_literal(item) for item in literal) + ")"
    if isinstance(literal, list):
        return "[" + ",".join(render_literal(item) for item in literal) + "]"
    return str(literal)


def to_json_literal(literal: Literal) -> Any:
    """Tuples become lists so the literal can be embedded in JSON."""
    if isinstance(literal, (tuple, list)):
        return [to_json_literal(item) for item in literal]
    return literal


def _read_items(text: str, pos: int, close: str) -> Tuple[List[Literal], int]:
    items: List[Literal] = []
    pos = _skip_space(text, pos)
    if pos < len(text) and text[pos] == close:
        raise LiteralError("empty literal list", pos)

    while True:
        item, pos = read_literal(text, pos)
        items.append(item)
        pos = _skip_space(text, pos)
        if pos >= len(text):
            raise LiteralError(f"expected ',' or {close!r}", pos)
        if text[pos] == close:
            return items, pos + 1
        if text[pos] != ",":
            raise LiteralError(f"expected ',' or {close!r}", pos)
        pos += 1


def _skip_space(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos

