"""
Numerical studies built on single walk evolutions.

Every function here is a pure function of its arguments, seeds included.
Independent work items (grid cells, trials) may be spread over worker
processes with ``workers > 1``; results are always assembled in input order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, TypeVar

import numpy as np
from numpy.typing import NDArray

from altwalk.disorder import DisorderKind, DisorderSpec, DisorderTarget, trial_seed
from altwalk.evolution import WalkParams, evolve
from altwalk.lattice_state import WalkerState
from altwalk.observables import (
    DEFAULT_DIM_CAP,
    SeriesRecord,
    coherence_norm,
    return_probability,
    running_average,
)

__all__ = [
    "REFERENCE_ARRANGEMENTS",
    "SweepGrid",
    "LineScan",
    "TrialEnsemble",
    "angle_grid",
    "p0_series",
    "run_series",
    "p_bar_at",
    "sweep",
    "line_scan",
    "disorder_ensemble",
    "coherence_series",
]

# (phi_x, phi_y) for strong, weak and no localization
REFERENCE_ARRANGEMENTS = {
    "strong": (19 * math.pi / 25, 0.0),
    "weak": (math.pi / 4, 0.0),
    "none": (0.0, 0.0),
}

_T = TypeVar("_T")
_R = TypeVar("_R")


def _pmap(fn: Callable[[_T], _R], items: Iterable[_T], workers: int) -> list[_R]:
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def angle_grid(n: int) -> list[float]:
    """``n`` equally spaced angles ``2 pi k / n`` on ``[0, 2 pi)``."""
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    return [2 * math.pi * k / n for k in range(n)]


def p0_series(params: WalkParams) -> list[float]:
    """Return probability after each of the steps 0..T."""
    state = evolve(params.replace(steps=0))
    out = [return_probability(state)]

    def record(s: WalkerState) -> None:
        out.append(return_probability(s))

    evolve(params, observer=record)
    return out


def run_series(params: WalkParams) -> list[SeriesRecord]:
    p0 = p0_series(params)
    return [SeriesRecord(t, p, pb) for t, (p, pb) in enumerate(zip(p0, running_average(p0)))]


def p_bar_at(params: WalkParams) -> float:
    """Average return probability at the horizon ``params.steps``."""
    return running_average(p0_series(params))[-1]


@dataclass(frozen=True)
class SweepGrid:
    phi_x_values: Sequence[float]
    phi_y_values: Sequence[float]
    T: int
    observable: str = "p_bar_at_T"

    def __post_init__(self) -> None:
        if self.T < 2 or self.T % 2:
            raise ValueError(f"sweep horizon must be even and >= 2, got {self.T}")
        if self.observable != "p_bar_at_T":
            raise ValueError(f"unsupported observable {self.observable!r}")
        if not all(math.isfinite(v) for v in [*self.phi_x_values, *self.phi_y_values]):
            raise ValueError("grid angles must be finite")


def _cell(args: tuple[WalkParams, float, float]) -> float:
    base, px, py = args
    return p_bar_at(base.replace(phi_x=px, phi_y=py))


def sweep(grid: SweepGrid, base: Optional[WalkParams] = None, workers: int = 1) -> NDArray[np.float64]:
    """
    P-bar at ``grid.T`` for every ``(phi_x, phi_y)``.

    Returns an array indexed ``[i, j]`` for ``phi_x_values[i]``, ``phi_y_values[j]``.
    Coin, step-index base and disorder are taken from ``base``.
    """
    base = (base or WalkParams(grid.T)).replace(steps=grid.T)
    cells = [(base, px, py) for px in grid.phi_x_values for py in grid.phi_y_values]
    values = _pmap(_cell, cells, workers)
    return np.array(values, dtype=np.float64).reshape(len(grid.phi_x_values), len(grid.phi_y_values))


@dataclass(frozen=True)
class LineScan:
    phi_x: list[float]
    p_bar: list[float]

    @property
    def argmax_index(self) -> int:
        return int(np.argmax(self.p_bar))

    @property
    def argmax_phi(self) -> float:
        return self.phi_x[self.argmax_index]

    @property
    def max_value(self) -> float:
        return self.p_bar[self.argmax_index]

    def rows(self) -> list[tuple[float, float]]:
        return list(zip(self.phi_x, self.p_bar))


def line_scan(
    phi_x_values: Sequence[float],
    T: int,
    base: Optional[WalkParams] = None,
    workers: int = 1,
) -> LineScan:
    """P-bar at ``T`` along ``phi_x`` with ``phi_y`` held at zero."""
    grid = SweepGrid(list(phi_x_values), [0.0], T)
    values = sweep(grid, base, workers)[:, 0]
    return LineScan(list(grid.phi_x_values), values.tolist())


def _mean(columns: Sequence[Sequence[float]]) -> list[float]:
    # shifted mean: exact when every trial agrees (e.g. epsilon = 0) or n = 1
    n = len(columns)
    out = []
    for values in zip(*columns):
        x0 = values[0]
        out.append(x0 + math.fsum(v - x0 for v in values) / n)
    return out


@dataclass
class TrialEnsemble:
    """Trial-averaged series for a disordered walk; trial i uses ``trial_seed(base_seed, i)``."""

    base_params: WalkParams
    n_trials: int
    base_seed: int
    per_step_mean: list[float] = field(default_factory=list)
    per_step_p0_mean: list[float] = field(default_factory=list)

    def records(self) -> list[SeriesRecord]:
        return [
            SeriesRecord(t, p0, pb)
            for t, (p0, pb) in enumerate(zip(self.per_step_p0_mean, self.per_step_mean))
        ]


def _trial(params: WalkParams) -> list[float]:
    return p0_series(params)


def disorder_ensemble(
    base: WalkParams,
    kind: DisorderKind | str,
    epsilon: float,
    n_trials: int,
    base_seed: int,
    target: DisorderTarget | str = DisorderTarget.PHI_X_ONLY,
    workers: int = 1,
) -> TrialEnsemble:
    """Average ``P0`` and running ``P-bar`` over ``n_trials`` disorder realizations."""
    if n_trials < 1:
        raise ValueError(f"n_trials must be >= 1, got {n_trials}")
    runs = [
        base.replace(disorder=DisorderSpec(kind, epsilon, trial_seed(base_seed, i), target))
        for i in range(n_trials)
    ]
    p0_runs = _pmap(_trial, runs, workers)
    return TrialEnsemble(
        base_params=base,
        n_trials=n_trials,
        base_seed=base_seed,
        per_step_mean=_mean([running_average(p) for p in p0_runs]),
        per_step_p0_mean=_mean(p0_runs),
    )


def coherence_series(
    params: WalkParams, t_max: int, dim_cap: int = DEFAULT_DIM_CAP
) -> list[tuple[int, float]]:
    """Coherence norm after each of the steps 0..t_max."""
    if (t_max + 1) ** 2 > dim_cap:
        raise ValueError(
            f"t_max={t_max} needs a {(t_max + 1) ** 2}-dimensional eigensolve, "
            f"above dim_cap={dim_cap}; pass a larger dim_cap to allow it"
        )
    p = params.replace(steps=t_max)
    out = [(0, coherence_norm(evolve(p.replace(steps=0)), dim_cap))]

    def record(s: WalkerState) -> None:
        out.append((s.steps_taken, coherence_norm(s, dim_cap)))

    evolve(p, observer=record)
    return out
