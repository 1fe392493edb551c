"""Smash products, the ideal generated by the integral, and pertinency."""

from .annihilator import AnnihilatorLadder, ModularAnnihilatorLadder
from .ladder import IdealLadder, ideal_ladder, ideal_membership, quotient_hilbert
from .products import (
    DualGroupSmashAlgebra,
    GroupSmashAlgebra,
    SmashAlgebra,
    SmashElement,
    corner_dimension,
    integral_idempotent,
    smash_multiply,
)
from .report import FIELD_POLICIES, PertinencyReport, pertinency_report

__all__ = [
    "AnnihilatorLadder", "DualGroupSmashAlgebra", "FIELD_POLICIES", "GroupSmashAlgebra",
    "IdealLadder", "ModularAnnihilatorLadder", "PertinencyReport", "SmashAlgebra",
    "SmashElement", "corner_dimension", "ideal_ladder", "ideal_membership",
    "integral_idempotent", "pertinency_report", "quotient_hilbert", "smash_multiply",
]
