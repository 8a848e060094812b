import random
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from pysrone.base import Arithmetic, LiteralError, NotAUnitError

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class IntMatrix:
    """An immutable square matrix of arbitrary-precision integers."""

    rows: Rows

    def __post_init__(self) -> None:
        rows = tuple(tuple(_as_int(entry) for entry in row) for row in self.rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise LiteralError(f"expected a nonempty square matrix, got {len(rows)} rows")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.rows[i][j]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diag(*([1] * n))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls.diag(*([0] * n))

    @classmethod
    def diag(cls, *entries: int) -> "IntMatrix":
        n = len(entries)
        return cls.from_rows([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "IntMatrix":
        """The matrix unit E_ij of size n, with 1-based i and j."""
        return cls.from_rows([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        """Assembles [[P, Q], [R, S]] (or any square grid of equally sized square blocks) into one matrix."""
        size = blocks[0][0].n
        if any(len(line) != len(blocks) or any(b.n != size for b in line) for line in blocks):
            raise LiteralError("block matrix needs a square grid of equally sized blocks")
        rows: List[List[int]] = []
        for line in blocks:
            for r in range(size):
                rows.append([entry for b in line for entry in b.rows[r]])
        return cls.from_rows(rows)

    @classmethod
    def from_json(cls, payload: Any) -> "IntMatrix":
        """Reads the {"n": int, "rows": [[decimal-string, ...], ...]} matrix format.

        Raises:
            LiteralError: The payload does not follow the format.
        """
        if not isinstance(payload, dict) or "rows" not in payload:
            raise LiteralError("matrix payload must be an object with a 'rows' field")
        matrix = cls.from_rows(payload["rows"])
        if "n" in payload and payload["n"] != matrix.n:
            raise LiteralError(f"matrix payload declares n={payload['n']} but has {matrix.n} rows")
        return matrix

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "rows": [[str(entry) for entry in row] for row in self.rows]}

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        columns = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in columns) for row in self.rows))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * entry for entry in row) for row in self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def swap_rows(self, i: int, j: int) -> "IntMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return IntMatrix(tuple(rows))

    def swap_cols(self, i: int, j: int) -> "IntMatrix":
        return self.transpose().swap_rows(i, j).transpose()

    def leading(self, k: int) -> "IntMatrix":
        """The upper left k x k block."""
        return IntMatrix(tuple(row[:k] for row in self.rows[:k]))

    def pad(self, n: int) -> "IntMatrix":
        """Embeds the matrix as the upper left block of an n x n zero matrix."""
        width = n - self.n
        rows = [row + (0,) * width for row in self.rows] + [(0,) * n] * width
        return IntMatrix(tuple(rows))

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def _check(self, other: "IntMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} and {other.n}")


def _as_int(entry: Any) -> int:
    if isinstance(entry, bool):
        raise LiteralError(f"matrix entries must be integers, got {entry!r}")
    if isinstance(entry, int):
        return entry
    if isinstance(entry, str):
        try:
            return int(entry, 10)
        except ValueError:
            raise LiteralError(f"matrix entry {entry!r} is not a decimal integer") from None
    if hasattr(entry, "__index__"):
        return int(entry.__index__())
    raise LiteralError(f"matrix entries must be integers, got {entry!r}")


def _domain(a: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(entry) for entry in row] for row in a.rows], (a.n, a.n), ZZ)


def det_exact(a: IntMatrix) -> int:
    """The exact determinant, by fraction-free elimination over ZZ."""
    return int(_domain(a).det())


class MatrixRing(Arithmetic[IntMatrix]):
    """M(n, Z) as an `Arithmetic`; its units are the unimodular matrices."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"matrix size must be positive, got {n}")
        self.n = n

    @property
    def id(self) -> str:
        return f"M({self.n},Z)"

    @property
    def zero(self) -> IntMatrix:
        return IntMatrix.zeros(self.n)

    @property
    def one(self) -> IntMatrix:
        return IntMatrix.identity(self.n)

    def add(self, a: IntMatrix, b: IntMatrix) -> IntMatrix:
        return a + b

    def neg(self, a: IntMatrix) -> IntMatrix:
        return -a

    def mul(self, a: IntMatrix, b: IntMatrix) -> IntMatrix:
        return a @ b

    def is_unit(self, a: IntMatrix) -> bool:
        return abs(det_exact(a)) == 1

    def inverse(self, a: IntMatrix) -> IntMatrix:
        if not self.is_unit(a):
            raise NotAUnitError(f"{self.literal(a)} is not unimodular")
        inverse = _domain(a).convert_to(QQ).inv().convert_to(ZZ).to_Matrix()
        return IntMatrix.from_rows([[int(inverse[i, j]) for j in range(a.n)] for i in range(a.n)])

    def literal(self, a: IntMatrix) -> Any:
        return a.to_json()["rows"]


def elementary(n: int, i: int, j: int, k: int) -> IntMatrix:
    """I + k E_ij with 0-based i != j."""
    rows = IntMatrix.identity(n).to_lists()
    rows[i][j] = k
    return IntMatrix.from_rows(rows)


def random_unimodular(rng: random.Random, n: int, steps: int = 6, bound: int = 3) -> IntMatrix:
    """A product of random elementary matrices, row swaps and sign flips."""
    u = IntMatrix.identity(n)
    if n == 1:
        return u.scale(rng.choice((1, -1)))
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        u = elementary(n, i, j, rng.randint(-bound, bound)) @ u
        if rng.random() < 0.2:
            u = u.swap_rows(i, j)
    if rng.random() < 0.5:
        u = u.swap_cols(0, n - 1)
    if rng.random() < 0.5:
        rows = u.to_lists()
        rows[0] = [-entry for entry in rows[0]]
        u = IntMatrix.from_rows(rows)
    return u


def random_matrix(rng: random.Random, n: int, bound: int) -> IntMatrix:
    return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
