"""Simulator for the entangled quantum penny flip game."""

from .classical import ClassicalMove, Outcome
from .entanglement import concurrence
from .game import (
    HADAMARD_STRATEGY,
    ClassicalMixed,
    ClassicalPure,
    GameRecord,
    Quantum,
    play,
    play_entangled_mixed,
    play_entangled_pure,
    play_meyer,
)
from .quantum import UnitaryParams

__all__ = [
    "ClassicalMixed",
    "ClassicalMove",
    "ClassicalPure",
    "GameRecord",
    "HADAMARD_STRATEGY",
    "Outcome",
    "Quantum",
    "UnitaryParams",
    "concurrence",
    "play",
    "play_entangled_mixed",
    "play_entangled_pure",
    "play_meyer",
]
