"""Finite rings: construction from ring-specs, validation, units, idempotents and Peirce splits."""

from typing import List, Tuple

from pysrone.codec import Literal, parse_literal, render_literal

from .construct import construct_ring, quotient_ideal, quotient_map, quotient_projection
from .descriptor import FiniteRing
from .peirce import PeirceSplit, peirce_split
from .spec import RingSpec, parse_ring_spec


def units(ring: FiniteRing) -> List[Tuple[int, int]]:
    """Returns every (unit, inverse) pair of `ring`, ascending by unit."""
    return ring.units()


def idempotents(ring: FiniteRing) -> Tuple[int, ...]:
    return ring.idempotent_set


def encode_element(ring: FiniteRing, literal: Literal) -> int:
    """Maps an element literal to its index.

    Raises:
        LiteralError: The literal is malformed or out of range for `ring`.
    """
    return ring.encode(literal)


def decode_element(ring: FiniteRing, index: int) -> Literal:
    return ring.decode(index)


__all__ = [
    "FiniteRing",
    "PeirceSplit",
    "RingSpec",
    "construct_ring",
    "decode_element",
    "encode_element",
    "idempotents",
    "parse_literal",
    "parse_ring_spec",
    "peirce_split",
    "quotient_ideal",
    "quotient_map",
    "quotient_projection",
    "render_literal",
    "units",
]
