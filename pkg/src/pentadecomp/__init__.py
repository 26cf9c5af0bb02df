"""Constructive decompositions of integers into weighted pentagonal sums.

Every n >= 0 is written as p5(w) + b*p5(x) + c*p5(y) + d*p5(z) for the
coefficient triples (1,1,2), (2,3,4), (1,2,3), (1,2,6), with an explicit
verified witness; a bitset range verifier independently sweeps [0, N] for
these and the remaining conjectured triples.
"""

from .decompose import (
    BSelection,
    Decomposition,
    certify,
    decompose,
    direct_search,
    reconstruct,
    select_B_thm11,
    select_B_thm12,
    select_B_thm13,
)
from .polygonal import (
    PentagonalTable,
    is_pentagonal,
    pentagonal,
    pentagonal_index,
    pentagonals_upto,
    polygonal,
)
from .sieve import (
    SUN_TRIPLES,
    VerificationReport,
    ju_universality_check,
    three_pentagonal_gaps,
    verify_range,
    verify_sun_15,
)
from .ternary import (
    DiagonalForm,
    TernaryRepresentation,
    dickson_excluded_1_2_10,
    lemma31_hypothesis,
    lemma41_hypothesis,
    represent,
)
from .transforms import (
    QuaternaryWitness,
    lemma21_transform,
    lemma31_transform,
    lemma41_transform,
    lemma43_transform,
)

__version__ = "0.1.0"

__all__ = [
    "BSelection",
    "Decomposition",
    "DiagonalForm",
    "PentagonalTable",
    "QuaternaryWitness",
    "SUN_TRIPLES",
    "TernaryRepresentation",
    "VerificationReport",
    "certify",
    "decompose",
    "dickson_excluded_1_2_10",
    "direct_search",
    "is_pentagonal",
    "ju_universality_check",
    "lemma21_transform",
    "lemma31_transform",
    "lemma31_hypothesis",
    "lemma41_transform",
    "lemma41_hypothesis",
    "lemma43_transform",
    "pentagonal",
    "pentagonal_index",
    "pentagonals_upto",
    "polygonal",
    "reconstruct",
    "represent",
    "select_B_thm11",
    "select_B_thm12",
    "select_B_thm13",
    "three_pentagonal_gaps",
    "verify_range",
    "verify_sun_15",
]
