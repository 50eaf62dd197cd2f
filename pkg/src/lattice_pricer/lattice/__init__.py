"""Time grids, branch steps and recombining lattices."""

from .grid import WORLDS, StepSpec, TimeGrid
from .lattice import (
    BINOMIAL,
    CONVENTIONS,
    MOMENT_MATCHED,
    TRINOMIAL,
    UPS_FIRST,
    Lattice,
    build_binomial,
    build_lattice,
    build_trinomial,
    recombination_residual,
)

__all__ = [
    "WORLDS",
    "StepSpec",
    "TimeGrid",
    "BINOMIAL",
    "CONVENTIONS",
    "MOMENT_MATCHED",
    "TRINOMIAL",
    "UPS_FIRST",
    "Lattice",
    "build_binomial",
    "build_lattice",
    "build_trinomial",
    "recombination_residual",
]
