"""The circle operation a + b - axb, block inversion and the class transfers between a + b - axb and a + b - bxa."""

from .block import (
    BanachiewiczVerdict,
    Block2,
    BlockArithmetic,
    banachiewicz,
    block_inverse_check,
    matrix_ring,
    peirce_inverse,
)
from .checks import ElementClass, Prop36Result, in_class, naive_ternary_check, prop36_check, sjl_check
from .circle import (
    CircleContext,
    circle,
    circle_commutativity_criterion,
    circle_is_associative,
    circle_is_commutative,
)

__all__ = [
    "BanachiewiczVerdict",
    "Block2",
    "BlockArithmetic",
    "CircleContext",
    "ElementClass",
    "Prop36Result",
    "banachiewicz",
    "block_inverse_check",
    "circle",
    "circle_commutativity_criterion",
    "circle_is_associative",
    "circle_is_commutative",
    "in_class",
    "matrix_ring",
    "naive_ternary_check",
    "peirce_inverse",
    "prop36_check",
    "sjl_check",
]
