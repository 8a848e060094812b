"""Stable range one: exhaustive decision on finite rings and certified witness synthesis."""

from .base import CERTIFICATES, CertificateLedger, Side, VariantKind, WitnessCertificate, WitnessMode, in_variant
from .conditions import Sr1Conditions, principal_right_ideals, sr1_conditions, two_generated_right_ideals
from .decide import has_sr1, sr1_mask, sr1_witness, witness_set
from .suspension import (
    CornerOracle,
    CornerWitness,
    SchurReduction,
    corner_oracle,
    desuspend_witness,
    extract_corner_unit,
    schur_reduce,
    suspend_witness,
)
from .witness import (
    Form3Source,
    PairOracle,
    comaximal_pair,
    form3_oracle,
    idempotent_oracle,
    lift_form3,
    pair_witness,
    product_witness,
    search_oracle,
    transport_witness,
    unit_oracle,
)

__all__ = [
    "CERTIFICATES",
    "CertificateLedger",
    "CornerOracle",
    "CornerWitness",
    "Form3Source",
    "PairOracle",
    "SchurReduction",
    "Side",
    "Sr1Conditions",
    "VariantKind",
    "WitnessCertificate",
    "WitnessMode",
    "comaximal_pair",
    "corner_oracle",
    "desuspend_witness",
    "extract_corner_unit",
    "form3_oracle",
    "has_sr1",
    "idempotent_oracle",
    "in_variant",
    "lift_form3",
    "pair_witness",
    "principal_right_ideals",
    "product_witness",
    "schur_reduce",
    "search_oracle",
    "sr1_conditions",
    "sr1_mask",
    "sr1_witness",
    "suspend_witness",
    "transport_witness",
    "two_generated_right_ideals",
    "unit_oracle",
]
