import logging
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar

import numpy as np

from pysrone.base import Arithmetic, LiteralError, NotAUnitError, NotIdempotentError, PreconditionError
from pysrone.codec import ElementCodec, Literal, render_literal, to_json_literal

from .structures import OppositeStructure, Structure, corner_structure

logger = logging.getLogger(__name__)

V = TypeVar("V")


class FiniteRing(Arithmetic[int]):
    """A fully specified finite ring over the element indices 0..order-1.

    Operation tables are built lazily and kept for rings of order up to `TABLE_THRESHOLD`; larger rings evaluate their
    operations structurally on every call. A ring is immutable once published: every cache is write-once.

    Attributes:
        id: Canonical ring-spec string. `construct_ring(ring.id)` rebuilds the same ring.
        order: Number of elements.
        kind: One of modular, matrix, triangular, product, corner, opposite, quotient.
        involution: Optional array mapping a to a* for rings with an involution.
    """

    TABLE_THRESHOLD = 4096
    SAMPLED_TRIPLES = 100_000

    def __init__(self, ring_id: str, structure: Structure, involution: Optional[np.ndarray] = None):
        self.id = ring_id
        self.structure = structure
        self.order = structure.order
        self.kind = structure.kind
        self.involution = involution
        self._one = structure.one
        self._memo: Dict[str, Any] = {}

    def __repr__(self) -> str:
        return f"FiniteRing({self.id!r}, order={self.order})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self._one

    @property
    def codec(self) -> ElementCodec:
        return self.structure.codec

    @property
    def tabulated(self) -> bool:
        return self.order <= self.TABLE_THRESHOLD

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def add_table(self) -> np.ndarray:
        el = self.elements()
        return np.asarray(self.structure.vadd(el[:, None], el[None, :]), dtype=np.int32)

    @cached_property
    def mul_table(self) -> np.ndarray:
        el = self.elements()
        logger.debug("tabulating mul ring=%s order=%d", self.id, self.order)
        return np.asarray(self.structure.vmul(el[:, None], el[None, :]), dtype=np.int32)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.asarray(self.structure.vneg(self.elements()), dtype=np.int32)

    def vadd(self, a: Any, b: Any) -> np.ndarray:
        if self.tabulated:
            return self.add_table[a, b]
        return self.structure.vadd(np.asarray(a), np.asarray(b))

    def vmul(self, a: Any, b: Any) -> np.ndarray:
        if self.tabulated:
            return self.mul_table[a, b]
        return self.structure.vmul(np.asarray(a), np.asarray(b))

    def vneg(self, a: Any) -> np.ndarray:
        if self.tabulated:
            return self.neg_table[a]
        return self.structure.vneg(np.asarray(a))

    def vsub(self, a: Any, b: Any) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def add(self, a: int, b: int) -> int:
        return int(self.vadd(a, b))

    def neg(self, a: int) -> int:
        return int(self.vneg(a))

    def mul(self, a: int, b: int) -> int:
        return int(self.vmul(a, b))

    def power(self, a: int, n: int) -> int:
        out, base = self.one, a
        while n > 0:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    @cached_property
    def unit_table(self) -> Dict[int, int]:
        """Maps every unit to its two-sided inverse."""
        table: Dict[int, int] = {}
        if self.tabulated:
            hits = self.mul_table == self.one
            both = hits & hits.T
            for a in np.flatnonzero(both.any(axis=1)):
                table[int(a)] = int(np.argmax(both[a]))
        else:
            el = self.elements()
            for a in range(self.order):
                right = np.flatnonzero(self.vmul(a, el) == self.one)
                for b in right:
                    if self.mul(int(b), a) == self.one:
                        table[a] = int(b)
                        break
        logger.debug("units ring=%s count=%d", self.id, len(table))
        return table

    @cached_property
    def unit_mask(self) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[list(self.unit_table)] = True
        return mask

    @cached_property
    def inverse_array(self) -> np.ndarray:
        """Inverse of each unit, -1 for non-units."""
        out = np.full(self.order, -1, dtype=np.int64)
        for u, v in self.unit_table.items():
            out[u] = v
        return out

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask[a])

    def inverse(self, a: int) -> int:
        inv = self.unit_table.get(int(a))
        if inv is None:
            raise NotAUnitError(f"{self.render(a)} is not a unit of {self.id}")
        return inv

    def units(self) -> List[Tuple[int, int]]:
        return sorted(self.unit_table.items())

    @cached_property
    def idempotent_set(self) -> Tuple[int, ...]:
        el = self.elements()
        return tuple(int(e) for e in np.flatnonzero(self.vmul(el, el) == el))

    def is_idempotent(self, a: int) -> bool:
        return self.mul(a, a) == a

    @cached_property
    def squares(self) -> Tuple[int, ...]:
        el = self.elements()
        return tuple(int(s) for s in np.unique(self.vmul(el, el)))

    @cached_property
    def is_commutative(self) -> bool:
        if self.tabulated:
            return bool(np.array_equal(self.mul_table, self.mul_table.T))
        el = self.elements()
        return all(np.array_equal(self.vmul(a, el), self.vmul(el, a)) for a in range(self.order))

    def is_central(self, a: int) -> bool:
        el = self.elements()
        return bool(np.array_equal(self.vmul(a, el), self.vmul(el, a)))

    def commutant(self, a: int) -> np.ndarray:
        el = self.elements()
        return np.flatnonzero(self.vmul(a, el) == self.vmul(el, a))

    def star(self, a: Any) -> Any:
        if self.involution is None:
            raise PreconditionError(f"{self.id} carries no involution")
        return self.involution[a]

    def encode(self, literal: Literal) -> int:
        return self.codec.encode(literal)

    def decode(self, index: int) -> Literal:
        if not 0 <= index < self.order:
            raise LiteralError(f"index {index} out of range for {self.id}")
        return self.codec.decode(int(index))

    def render(self, index: int) -> str:
        return render_literal(self.decode(index))

    def literal(self, a: int) -> Any:
        return to_json_literal(self.decode(a))

    def opposite(self) -> "FiniteRing":
        """The opposite ring: same carrier, multiplication with swapped arguments."""
        return self.memo("opposite", self._build_opposite)

    def _build_opposite(self) -> "FiniteRing":
        opposite = FiniteRing(f"op({self.id})", OppositeStructure(self), self.involution)
        if "mul_table" in self.__dict__:
            opposite.__dict__["mul_table"] = np.ascontiguousarray(self.mul_table.T)
            opposite.__dict__["add_table"] = self.add_table
        return opposite

    def corner(self, e: int) -> "FiniteRing":
        """The corner ring eRe, whose identity is e.

        Raises:
            NotIdempotentError: `e` is not idempotent.
        """
        if not self.is_idempotent(e):
            raise NotIdempotentError(f"{self.render(e)} is not idempotent in {self.id}")
        ring_id = f"corner({self.id},{self.render(e)})"
        return self.memo(f"corner:{e}", lambda: FiniteRing(ring_id, corner_structure(self, e, ring_id)))

    def memo(self, key: str, factory: Callable[[], V]) -> V:
        """Returns the derived value cached under `key`, building it with `factory` on first use."""
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]  # type: ignore[no-any-return]
