"""Cut-down de Bruijn sequences.

A cut-down de Bruijn sequence is a cyclic k-ary sequence of length L, with
k^(n-1) < L <= k^n, in which every length-n window occurs at most once.
This package generates them by cycle joining over the pure cycling register
(stateful steppers for k = 2 and k > 2, plus a context-free successor rule
for k = 2), and provides the supporting counting, ranking and verification
machinery.
"""

from .counting import (
    count_lyndon,
    count_strings,
    count_weight_at_most,
    count_weight_period,
    count_weight_period_at_most,
    mobius,
)
from .cutplan import CutParams, CutSet, cut_set, derive_params, marker_word
from .engine import SequenceSpec, VerifyReport, generate, verify
from .ranking import enumerate_lyndon, rank_lyndon
from .successor import (
    GeneratorState,
    binary_generator_state,
    binary_step,
    cut_down_successor,
    kary_generator_state,
    kary_step,
    mc_step,
    pcr3,
    pcr3_alt,
)
from .words import is_necklace, least_rotation, period, rotate, weight

__all__ = [
    "CutParams",
    "CutSet",
    "GeneratorState",
    "SequenceSpec",
    "VerifyReport",
    "binary_generator_state",
    "binary_step",
    "count_lyndon",
    "count_strings",
    "count_weight_at_most",
    "count_weight_period",
    "count_weight_period_at_most",
    "cut_down_successor",
    "cut_set",
    "derive_params",
    "enumerate_lyndon",
    "generate",
    "is_necklace",
    "kary_generator_state",
    "kary_step",
    "least_rotation",
    "marker_word",
    "mc_step",
    "mobius",
    "pcr3",
    "pcr3_alt",
    "period",
    "rank_lyndon",
    "rotate",
    "verify",
    "weight",
]

__version__ = "0.1.0"
