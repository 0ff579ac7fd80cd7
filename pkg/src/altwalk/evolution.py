"""
Gates and step sequence of the alternate walk.

One step with index ``t`` applies, in order::

    Hadamard, P(phi_x, t), S_x, Hadamard, P(phi_y, t), S_y

where ``P(phi, t) = diag(exp(-i phi t / 2), exp(+i phi t / 2))`` acts on the
coin and ``S_x`` (``S_y``) moves coin-0 amplitude one site towards negative x
(y) and coin-1 amplitude one site towards positive x (y). Steps are numbered
from ``step_index_base`` (default 1).

The public gate functions return new states. ``evolve`` runs the same
kernels in place on a private buffer, restricted to the square window that
can hold nonzero amplitude, so results agree bit for bit with chained
``step`` calls.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray

from altwalk.disorder import CLEAN, DisorderKind, DisorderSpec, delta_field, draw_delta
from altwalk.lattice_state import COIN_PLUS_Y, CoinState, WalkerState, new_state

__all__ = [
    "WalkParams",
    "apply_hadamard",
    "apply_phase",
    "shift_x",
    "shift_y",
    "step",
    "evolve",
    "walk1d",
    "phase_factors",
]

INV_SQRT2 = 1.0 / math.sqrt(2.0)

Observer = Callable[[WalkerState], None]


@dataclass(frozen=True)
class WalkParams:
    """Everything that determines a run."""

    steps: int
    phi_x: float = 0.0
    phi_y: float = 0.0
    initial_coin: CoinState = COIN_PLUS_Y
    step_index_base: int = 1
    disorder: DisorderSpec = field(default=CLEAN)

    def __post_init__(self) -> None:
        if int(self.steps) != self.steps or self.steps < 0:
            raise ValueError(f"steps must be a non-negative integer, got {self.steps!r}")
        if not (math.isfinite(self.phi_x) and math.isfinite(self.phi_y)):
            raise ValueError("phase angles must be finite")

    def replace(self, **changes) -> WalkParams:
        return replace(self, **changes)


# -- array kernels; leading axes are (x, [y,]) and the last axis is the coin --


def _hadamard(a: NDArray[np.complex128]) -> None:
    a0 = a[..., 0].copy()
    a1 = a[..., 1]
    a[..., 0] = (a0 + a1) * INV_SQRT2
    a[..., 1] = (a0 - a1) * INV_SQRT2


def _phase(a: NDArray[np.complex128], f0, f1) -> None:
    a[..., 0] *= f0
    a[..., 1] *= f1


def _shift(a: NDArray[np.complex128], axis: int) -> None:
    """Coin-0 amplitude to lower index, coin-1 to higher, along ``axis``."""
    lo = [slice(None)] * (a.ndim - 1)
    hi = [slice(None)] * (a.ndim - 1)
    first = [slice(None)] * (a.ndim - 1)
    last = [slice(None)] * (a.ndim - 1)
    lo[axis], hi[axis] = slice(None, -1), slice(1, None)
    first[axis], last[axis] = 0, -1
    a0 = a[..., 0]
    a1 = a[..., 1]
    a0[tuple(lo)] = a0[tuple(hi)]
    a0[tuple(last)] = 0.0
    a1[tuple(hi)] = a1[tuple(lo)]
    a1[tuple(first)] = 0.0


def _check_room(a: NDArray[np.complex128], axis: int) -> None:
    idx0 = [slice(None)] * (a.ndim - 1)
    idx1 = [slice(None)] * (a.ndim - 1)
    idx0[axis], idx1[axis] = 0, -1
    if np.any(a[..., 0][tuple(idx0)]) or np.any(a[..., 1][tuple(idx1)]):
        raise ValueError("shift would move amplitude past the lattice edge; raise the capacity")


def phase_factors(phi: float, t: int, disorder: DisorderSpec, axis: str, xs=None, ys=None):
    """
    Diagonal entries ``(f0, f1)`` of the phase gate at step ``t``.

    Returns complex scalars unless the disorder depends on position, in which
    case both factors are arrays over the grid ``xs`` x ``ys``.
    """
    if not disorder.acts_on(axis):
        angle = phi * t / 2
        return cmath.exp(complex(0.0, -angle)), cmath.exp(complex(0.0, angle))
    if disorder.kind is DisorderKind.TIME:
        angle = (1.0 + draw_delta(disorder, t, axis=axis)) * phi * t / 2
        return cmath.exp(complex(0.0, -angle)), cmath.exp(complex(0.0, angle))
    delta = delta_field(disorder, t, xs, ys, axis=axis)
    angle = (1.0 + delta) * phi * t / 2
    return np.exp(-1j * angle), np.exp(1j * angle)


def _advance(w: NDArray[np.complex128], coords, params: WalkParams, t: int) -> None:
    """One full step on a window whose sites have coordinates ``coords`` per axis."""
    d = params.disorder
    _hadamard(w)
    _phase(w, *phase_factors(params.phi_x, t, d, "x", coords, coords))
    _shift(w, 0)
    _hadamard(w)
    _phase(w, *phase_factors(params.phi_y, t, d, "y", coords, coords))
    _shift(w, 1)


def _lattice_coords(state: WalkerState) -> NDArray[np.int64]:
    T = state.capacity
    return np.arange(-T, T + 1)


# -- public gates --


def apply_hadamard(state: WalkerState) -> WalkerState:
    out = state.copy()
    _hadamard(out.amplitudes)
    return out


def apply_phase(
    state: WalkerState,
    phi: float,
    t: int,
    disorder: DisorderSpec = CLEAN,
    axis_tag: str = "x",
) -> WalkerState:
    """Phase gate ``P(phi_eff, t)`` with ``phi_eff = (1 + delta) phi`` at every site."""
    if axis_tag not in ("x", "y"):
        raise ValueError(f"axis_tag must be 'x' or 'y', got {axis_tag!r}")
    out = state.copy()
    xs = _lattice_coords(state)
    _phase(out.amplitudes, *phase_factors(phi, t, disorder, axis_tag, xs, xs))
    return out


def shift_x(state: WalkerState) -> WalkerState:
    _check_room(state.amplitudes, 0)
    out = state.copy()
    _shift(out.amplitudes, 0)
    return out


def shift_y(state: WalkerState) -> WalkerState:
    _check_room(state.amplitudes, 1)
    out = state.copy()
    _shift(out.amplitudes, 1)
    return out


def step(state: WalkerState, params: WalkParams, t: Optional[int] = None) -> WalkerState:
    """Apply one full walk step; ``t`` defaults to ``steps_taken + step_index_base``."""
    expected = state.steps_taken + params.step_index_base
    if t is None:
        t = expected
    elif t != expected:
        raise ValueError(f"step index {t} does not follow steps_taken={state.steps_taken}")
    if state.steps_taken >= state.capacity:
        raise ValueError(
            f"state already holds {state.steps_taken} steps, capacity is {state.capacity}"
        )
    out = state.copy()
    _advance(out.amplitudes, _lattice_coords(state), params, t)
    out.steps_taken += 1
    return out


def evolve(
    params: WalkParams,
    observer: Optional[Observer] = None,
    capacity: Optional[int] = None,
) -> WalkerState:
    """
    Run ``params.steps`` steps from the origin.

    ``observer`` is called after every step with a read-only view of the
    current state; copy it if it has to outlive the call.
    """
    T = params.steps
    cap = max(T, 1) if capacity is None else capacity
    if cap < T:
        raise ValueError(f"capacity {cap} is smaller than the requested {T} steps")
    state = new_state(cap, params.initial_coin)
    a = state.amplitudes
    for s in range(T):
        r = s + 1
        w = a[cap - r : cap + r + 1, cap - r : cap + r + 1]
        _advance(w, np.arange(-r, r + 1), params, s + params.step_index_base)
        state.steps_taken = s + 1
        if observer is not None:
            view = a.view()
            view.flags.writeable = False
            observer(WalkerState(view, state.steps_taken))
    return state


def walk1d(
    T: int,
    phi: float,
    coin: CoinState = COIN_PLUS_Y,
    disorder: DisorderSpec = CLEAN,
    step_index_base: int = 1,
) -> NDArray[np.complex128]:
    """
    One-dimensional walk with step ``Hadamard, P(phi, t), S``.

    Returns
    -------
    ndarray, shape (2T+1, 2)
        Final amplitudes indexed ``[x + T, c]``.
    """
    if int(T) != T or T < 0:
        raise ValueError(f"T must be a non-negative integer, got {T!r}")
    coin.validate()
    a = np.zeros((2 * T + 1, 2), dtype=np.complex128)
    a[T] = coin.as_array()
    xs = np.arange(-T, T + 1)
    zeros = np.zeros(1, dtype=np.int64)
    for s in range(T):
        t = s + step_index_base
        _hadamard(a)
        f0, f1 = phase_factors(phi, t, disorder, "x", xs, zeros)
        if isinstance(f0, np.ndarray):
            f0, f1 = f0[:, 0], f1[:, 0]
        _phase(a, f0, f1)
        _shift(a, 0)
    return a
