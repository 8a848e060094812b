from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional


@dataclass(frozen=True)
class ClassificationFlags:
    """Membership of one element in every element-wise class.

    `nilpotency_index` is the least n with a^n = 0, or None when the element is not nilpotent.
    `pi_regular_index` is the least n with a^n in a^(n+1)R and Ra^(n+1), or None.
    """

    unit: bool
    idempotent: bool
    nilpotent: bool
    nilpotency_index: Optional[int]
    regular: bool
    unit_regular: bool
    strongly_regular: bool
    strongly_nilpotent: bool
    quasi_nilpotent: bool
    suitable: bool
    clean: bool
    strongly_pi_regular: bool
    pi_regular_index: Optional[int]
    in_radical: bool
    central: bool

    def to_payload(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class RingPredicates:
    exchange: bool
    ic: bool
    abelian: bool
    reg_closed: bool
    stable_range_one: bool
    clean_ring: bool
    commutative: bool

    def to_payload(self) -> Dict[str, Any]:
        return asdict(self)
