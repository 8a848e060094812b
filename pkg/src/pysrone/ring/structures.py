"""Structural (table-free) arithmetic for each ring kind.

Every structure evaluates its operations on numpy index arrays of any broadcastable shape. `FiniteRing` tabulates
them below its threshold and calls them directly above it.
"""

import abc
import math
from typing import TYPE_CHECKING, Dict, List, Sequence, Tuple

import numpy as np

from pysrone.codec import ElementCodec, MatrixCodec, ModularCodec, ProductCodec, SubsetCodec

if TYPE_CHECKING:
    from .descriptor import FiniteRing

Index = np.ndarray


class Structure(abc.ABC):
    kind: str
    order: int
    one: int
    codec: ElementCodec

    @abc.abstractmethod
    def vadd(self, a: Index, b: Index) -> Index:
        pass

    @abc.abstractmethod
    def vmul(self, a: Index, b: Index) -> Index:
        pass

    @abc.abstractmethod
    def vneg(self, a: Index) -> Index:
        pass


class ModularStructure(Structure):
    kind = "modular"

    def __init__(self, n: int):
        self.n = n
        self.order = n
        self.one = 1 % n
        self.codec = ModularCodec(n)

    def vadd(self, a: Index, b: Index) -> Index:
        return (np.asarray(a, dtype=np.int64) + b) % self.n

    def vmul(self, a: Index, b: Index) -> Index:
        return (np.asarray(a, dtype=np.int64) * b) % self.n

    def vneg(self, a: Index) -> Index:
        return (-np.asarray(a, dtype=np.int64)) % self.n


class MatrixStructure(Structure):
    """k x k matrices over `base`, either full or upper triangular."""

    def __init__(self, k: int, base: "FiniteRing", triangular: bool = False):
        self.k = k
        self.base = base
        self.kind = "triangular" if triangular else "matrix"
        self.positions: List[Tuple[int, int]] = [
            (i, j) for i in range(k) for j in range(k) if not triangular or i <= j
        ]
        self._slot = {pos: s for s, pos in enumerate(self.positions)}
        m = len(self.positions)
        self._weights = [base.order ** (m - 1 - s) for s in range(m)]
        self.order = base.order**m
        self.one = self.pack({(i, i): np.asarray(base.one) for i in range(k)})
        self.codec = MatrixCodec(k, base.codec, base.order, base.one, self.positions)

    def unpack(self, a: Index) -> Dict[Tuple[int, int], Index]:
        a = np.asarray(a, dtype=np.int64)
        return {pos: (a // w) % self.base.order for pos, w in zip(self.positions, self._weights)}

    def pack(self, entries: Dict[Tuple[int, int], Index]) -> int:
        return int(self._pack(entries))

    def _pack(self, entries: Dict[Tuple[int, int], Index]) -> Index:
        out: Index = np.zeros((), dtype=np.int64)
        for pos, w in zip(self.positions, self._weights):
            if pos in entries:
                out = out + np.asarray(entries[pos], dtype=np.int64) * w
        return out

    def vadd(self, a: Index, b: Index) -> Index:
        ea, eb = self.unpack(a), self.unpack(b)
        return self._pack({pos: self.base.vadd(ea[pos], eb[pos]) for pos in self.positions})

    def vneg(self, a: Index) -> Index:
        ea = self.unpack(a)
        return self._pack({pos: self.base.vneg(ea[pos]) for pos in self.positions})

    def vmul(self, a: Index, b: Index) -> Index:
        ea, eb = self.unpack(a), self.unpack(b)
        out: Dict[Tuple[int, int], Index] = {}
        for i, j in self.positions:
            acc: Index = np.zeros((), dtype=np.int64)
            for m in range(self.k):
                if (i, m) in self._slot and (m, j) in self._slot:
                    acc = self.base.vadd(acc, self.base.vmul(ea[(i, m)], eb[(m, j)]))
            out[(i, j)] = acc
        return self._pack(out)

    def vtranspose(self, a: Index) -> Index:
        ea = self.unpack(a)
        return self._pack({(i, j): ea[(j, i)] for i, j in self.positions})


class ProductStructure(Structure):
    kind = "product"

    def __init__(self, factors: Sequence["FiniteRing"]):
        self.factors = list(factors)
        orders = [f.order for f in self.factors]
        self._weights = [math.prod(orders[i + 1 :]) for i in range(len(orders))]
        self.order = math.prod(orders)
        self.one = int(sum(f.one * w for f, w in zip(self.factors, self._weights)))
        self.codec = ProductCodec([f.codec for f in self.factors], orders)

    def _unpack(self, a: Index) -> List[Index]:
        a = np.asarray(a, dtype=np.int64)
        return [(a // w) % f.order for f, w in zip(self.factors, self._weights)]

    def _pack(self, parts: List[Index]) -> Index:
        out: Index = np.zeros((), dtype=np.int64)
        for part, w in zip(parts, self._weights):
            out = out + np.asarray(part, dtype=np.int64) * w
        return out

    def vadd(self, a: Index, b: Index) -> Index:
        return self._pack([f.vadd(x, y) for f, x, y in zip(self.factors, self._unpack(a), self._unpack(b))])

    def vmul(self, a: Index, b: Index) -> Index:
        return self._pack([f.vmul(x, y) for f, x, y in zip(self.factors, self._unpack(a), self._unpack(b))])

    def vneg(self, a: Index) -> Index:
        return self._pack([f.vneg(x) for f, x in zip(self.factors, self._unpack(a))])


class SubsetStructure(Structure):
    """A ring whose elements are parent elements, renumbered densely.

    `members` holds parent indices in ascending order and `lookup` maps each parent index to the local index (or -1).
    Results of parent operations are mapped back through `lookup`.
    """

    def __init__(self, kind: str, parent: "FiniteRing", members: np.ndarray, lookup: np.ndarray, one: int, name: str):
        self.kind = kind
        self.parent = parent
        self.members = members
        self.lookup = lookup
        self.order = len(members)
        self.one = one
        self.codec = SubsetCodec(parent.codec, members, lookup, name)

    def vadd(self, a: Index, b: Index) -> Index:
        return self.lookup[self.parent.vadd(self.members[a], self.members[b])]

    def vmul(self, a: Index, b: Index) -> Index:
        return self.lookup[self.parent.vmul(self.members[a], self.members[b])]

    def vneg(self, a: Index) -> Index:
        return self.lookup[self.parent.vneg(self.members[a])]


def corner_structure(parent: "FiniteRing", e: int, name: str) -> SubsetStructure:
    """The corner ring eRe, with identity e."""
    members = np.unique(parent.vmul(parent.vmul(e, parent.elements()), e))
    lookup = np.full(parent.order, -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    return SubsetStructure("corner", parent, members, lookup, int(lookup[e]), name)


def ideal_closure(parent: "FiniteRing", generators: Sequence[int]) -> np.ndarray:
    """The two-sided ideal generated by `generators`, as sorted parent indices.

    The ideal is the additive span of every r*g*s, reached by fixed-point iteration over sums.
    """
    everything = parent.elements()
    spanning: List[np.ndarray] = []
    for g in generators:
        left = np.unique(parent.vmul(everything, g))
        spanning.append(np.unique(parent.vmul(left[:, None], everything[None, :])))
    seeds = np.unique(np.concatenate(spanning)) if spanning else np.zeros(1, dtype=np.int64)

    ideal = np.union1d(seeds, [0])
    while True:
        grown = np.union1d(ideal, parent.vadd(ideal[:, None], seeds[None, :]).ravel())
        if len(grown) == len(ideal):
            return ideal
        ideal = grown


def quotient_structure(parent: "FiniteRing", ideal: np.ndarray, name: str) -> SubsetStructure:
    """R/I with each coset represented by its least parent index."""
    everything = parent.elements()
    canonical = everything.copy()
    for i in ideal:
        canonical = np.minimum(canonical, parent.vadd(everything, i))
    reps = np.unique(canonical)
    lookup = np.searchsorted(reps, canonical)
    return SubsetStructure("quotient", parent, reps, lookup, int(lookup[parent.one]), name)


class OppositeStructure(Structure):
    kind = "opposite"

    def __init__(self, parent: "FiniteRing"):
        self.parent = parent
        self.order = parent.order
        self.one = parent.one
        self.codec = parent.codec

    def vadd(self, a: Index, b: Index) -> Index:
        return self.parent.vadd(a, b)

    def vmul(self, a: Index, b: Index) -> Index:
        return self.parent.vmul(b, a)

    def vneg(self, a: Index) -> Index:
        return self.parent.vneg(a)
