from dataclasses import dataclass
from typing import Tuple, Union

from pysrone.base import LiteralError, RingSpecError
from pysrone.codec import Literal, read_literal, render_literal


@dataclass(frozen=True)
class ModularSpec:
    n: int

    def __str__(self) -> str:
        return f"Z/{self.n}"


@dataclass(frozen=True)
class MatrixSpec:
    k: int
    base: "RingSpec"

    def __str__(self) -> str:
        return f"M({self.k},{self.base})"


@dataclass(frozen=True)
class TriangularSpec:
    # Upper triangular k x k matrices.
    k: int
    base: "RingSpec"

    def __str__(self) -> str:
        return f"T({self.k},{self.base})"


@dataclass(frozen=True)
class ProductSpec:
    factors: Tuple["RingSpec", ...]

    def __str__(self) -> str:
        return " x ".join(f"({f})" if isinstance(f, ProductSpec) else str(f) for f in self.factors)


@dataclass(frozen=True, eq=False)
class CornerSpec:
    base: "RingSpec"
    idempotent: Literal

    def __str__(self) -> str:
        return f"corner({self.base},{render_literal(self.idempotent)})"


@dataclass(frozen=True)
class OppositeSpec:
    base: "RingSpec"

    def __str__(self) -> str:
        return f"op({self.base})"


@dataclass(frozen=True)
class TransposeSpec:
    # A matrix ring over a commutative base, equipped with the transpose involution.
    base: "RingSpec"

    def __str__(self) -> str:
        return f"tr({self.base})"


@dataclass(frozen=True, eq=False)
class QuotientSpec:
    base: "RingSpec"
    generators: Tuple[Literal, ...]

    def __str__(self) -> str:
        return f"quot({self.base}," + ",".join(render_literal(g) for g in self.generators) + ")"


RingSpec = Union[
    ModularSpec, MatrixSpec, TriangularSpec, ProductSpec, CornerSpec, OppositeSpec, TransposeSpec, QuotientSpec
]


def parse_ring_spec(text: str) -> RingSpec:
    """Parses a ring-spec string into its syntax tree.

    Grammar (whitespace between tokens is ignored):

        spec    := primary (" x " primary)*
        primary := "Z/" n | "M(" k "," spec ")" | "T(" k "," spec ")" | "corner(" spec "," literal ")"
                 | "op(" spec ")" | "tr(" spec ")" | "quot(" spec "," literal ("," literal)* ")" | "(" spec ")"

    Args:
        text: The ring-spec string, e.g. `"corner(M(2,Z/2),E11)"`.

    Returns:
        RingSpec: The syntax tree. `str()` of it renders the canonical form.

    Raises:
        RingSpecError: The text does not match the grammar. The error carries the offset of the offending token.

    Examples:
        >>> str(parse_ring_spec("M( 2 , Z/4 )"))
        'M(2,Z/4)'
    """
    if not text.strip():
        raise RingSpecError("empty ring spec", 0)

    parser = _Parser(text)
    spec = parser.spec()
    parser.skip_space()
    if parser.pos != len(text):
        raise RingSpecError(f"unexpected {text[parser.pos]!r}", parser.pos)
    return spec


class _Parser:
    _KEYWORDS = ("corner(", "quot(", "op(", "tr(", "M(", "T(", "Z/")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def spec(self) -> RingSpec:
        factors = [self.primary()]
        while self._at_product_sign():
            self.pos += 1
            factors.append(self.primary())
        if len(factors) == 1:
            return factors[0]
        return ProductSpec(tuple(factors))

    def primary(self) -> RingSpec:
        self.skip_space()
        keyword = next((kw for kw in self._KEYWORDS if self.text.startswith(kw, self.pos)), None)
        if keyword is None:
            if self._peek() == "(":
                self.pos += 1
                inner = self.spec()
                self.expect(")")
                return inner
            raise RingSpecError(self._unexpected("a ring"), self.pos)

        self.pos += len(keyword)
        if keyword == "Z/":
            n = self.integer()
            if n < 2:
                raise RingSpecError(f"Z/{n} is not a nonzero ring", self.pos - len(str(n)))
            return ModularSpec(n)
        if keyword in ("M(", "T("):
            k = self.integer()
            if k < 1:
                raise RingSpecError("matrix size must be positive", self.pos - len(str(k)))
            self.expect(",")
            base = self.spec()
            self.expect(")")
            return MatrixSpec(k, base) if keyword == "M(" else TriangularSpec(k, base)
        if keyword in ("op(", "tr("):
            base = self.spec()
            self.expect(")")
            return OppositeSpec(base) if keyword == "op(" else TransposeSpec(base)

        base = self.spec()
        self.expect(",")
        literals = [self.literal()]
        if keyword == "quot(":
            while self._peek() == ",":
                self.pos += 1
                literals.append(self.literal())
        self.expect(")")
        if keyword == "corner(":
            return CornerSpec(base, literals[0])
        return QuotientSpec(base, tuple(literals))

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise RingSpecError(self._unexpected("an integer", start), start)
        return int(self.text[start : self.pos])

    def literal(self) -> Literal:
        try:
            literal, self.pos = read_literal(self.text, self.pos)
        except LiteralError as e:
            raise RingSpecError(e.message, e.offset if e.offset is not None else self.pos) from None
        return literal

    def expect(self, token: str) -> None:
        self.skip_space()
        if not self.text.startswith(token, self.pos):
            raise RingSpecError(self._unexpected(repr(token)), self.pos)
        self.pos += len(token)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _at_product_sign(self) -> bool:
        if self._peek() != "x":
            return False
        after = self.text[self.pos + 1 : self.pos + 2]
        return after == "" or not after.isalnum()

    def _unexpected(self, wanted: str, pos: int = -1) -> str:
        pos = self.pos if pos < 0 else pos
        found = repr(self.text[pos]) if pos < len(self.text) else "end of input"
        return f"expected {wanted}, found {found}"

