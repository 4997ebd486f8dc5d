"""Switch Markov chain for uniform sampling of d-regular simple digraphs.

The package implements the chain itself (single steps, trajectories, exact
transition matrices, spectra and mixing times), exhaustive state-space
enumeration at desk scale, the canonical-path machinery that routes a unit of
flow between every ordered pair of states, the encoding/repair apparatus used
to bound how many paths cross a transition, and an exact multicommodity-flow
audit tying everything back to the spectral gap.
"""

from switchchain.digraph import (
    Digraph,
    Switch,
    ColouredDiff,
    apply_switch,
    switch_valid,
    converse,
    complement,
    sym_diff,
    resolve_zeta_chi_switch,
    circulant_generator,
)

__all__ = [
    "Digraph",
    "Switch",
    "ColouredDiff",
    "apply_switch",
    "switch_valid",
    "converse",
    "complement",
    "sym_diff",
    "resolve_zeta_chi_switch",
    "circulant_generator",
]

__version__ = "0.1.0"
