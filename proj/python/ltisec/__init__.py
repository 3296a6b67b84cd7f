"""Exact opacity and attack-detectability analysis for discrete-time linear systems.

Matrices are nested lists whose entries are ints or rational strings like
"1/2"; results come back as rational strings, so nothing is ever rounded.
"""

from ._core import (
    forced_response_matrix,
    is_attack_undetectable,
    is_observable,
    is_state_opaque,
    is_strongly_opaque_finite,
    is_weakly_opaque_finite,
    largest_opaque_non_secret,
    observability_matrix,
    simulate,
    synthesize_undetectable_attack,
    wus,
    wus_complement,
    zeroing_input,
)

__all__ = [
    "forced_response_matrix",
    "is_attack_undetectable",
    "is_observable",
    "is_state_opaque",
    "is_strongly_opaque_finite",
    "is_weakly_opaque_finite",
    "largest_opaque_non_secret",
    "observability_matrix",
    "simulate",
    "synthesize_undetectable_attack",
    "wus",
    "wus_complement",
    "zeroing_input",
]

__version__ = "1.0.0"
