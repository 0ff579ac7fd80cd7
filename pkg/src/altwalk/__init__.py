"""Two-dimensional alternate discrete-time quantum walk with step-dependent phase gates."""

from altwalk.disorder import DisorderKind, DisorderSpec, DisorderTarget, draw_delta
from altwalk.evolution import (
    WalkParams,
    apply_hadamard,
    apply_phase,
    evolve,
    shift_x,
    shift_y,
    step,
    walk1d,
)
from altwalk.experiments import (
    SweepGrid,
    TrialEnsemble,
    coherence_series,
    disorder_ensemble,
    line_scan,
    run_series,
    sweep,
)
from altwalk.lattice_state import (
    COIN_ONE,
    COIN_PLUS,
    COIN_PLUS_Y,
    COIN_ZERO,
    CoinState,
    WalkerState,
    new_state,
    norm_sq,
    probability_at,
)
from altwalk.observables import (
    DensityMatrix,
    SeriesRecord,
    average_return_probability,
    coherence_norm,
    marginal_density,
    position_distribution,
    reduced_walker_density,
    return_probability,
)

__version__ = "0.1.0"

__all__ = [
    "COIN_ONE",
    "COIN_PLUS",
    "COIN_PLUS_Y",
    "COIN_ZERO",
    "CoinState",
    "DensityMatrix",
    "DisorderKind",
    "DisorderSpec",
    "DisorderTarget",
    "SeriesRecord",
    "SweepGrid",
    "TrialEnsemble",
    "WalkParams",
    "WalkerState",
    "apply_hadamard",
    "apply_phase",
    "average_return_probability",
    "coherence_norm",
    "coherence_series",
    "disorder_ensemble",
    "draw_delta",
    "evolve",
    "line_scan",
    "marginal_density",
    "new_state",
    "norm_sq",
    "position_distribution",
    "probability_at",
    "reduced_walker_density",
    "return_probability",
    "run_series",
    "shift_x",
    "shift_y",
    "step",
    "sweep",
    "walk1d",
]
