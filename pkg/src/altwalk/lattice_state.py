"""
Walker state on a bounded square lattice.

The state is a dense complex array ``amplitudes[x + T, y + T, c]`` over
positions ``(x, y)`` in ``[-T, T]^2`` and coin values ``c`` in ``{0, 1}``,
where ``T`` is the capacity (the largest number of steps the allocation can
hold). Support after ``s`` steps never leaves ``[-s, s]^2``, so the bounded
lattice reproduces the infinite one exactly for ``s <= T``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "CoinState",
    "COIN_ZERO",
    "COIN_ONE",
    "COIN_PLUS",
    "COIN_PLUS_Y",
    "WalkerState",
    "new_state",
    "norm_sq",
    "probability_at",
    "parity_slice",
]

COIN_NORM_TOL = 1e-9


@dataclass(frozen=True)
class CoinState:
    """Coin amplitudes ``a0 |0> + a1 |1>``."""

    a0: complex
    a1: complex

    @property
    def norm_sq(self) -> float:
        return abs(self.a0) ** 2 + abs(self.a1) ** 2

    def as_array(self) -> NDArray[np.complex128]:
        return np.array([self.a0, self.a1], dtype=np.complex128)

    def validate(self) -> CoinState:
        if abs(self.norm_sq - 1.0) > COIN_NORM_TOL:
            raise ValueError(
                f"initial coin must be normalized, got |a0|^2 + |a1|^2 = {self.norm_sq!r}"
            )
        return self


_R = 1.0 / np.sqrt(2.0)

COIN_ZERO = CoinState(1.0 + 0j, 0j)
COIN_ONE = CoinState(0j, 1.0 + 0j)
COIN_PLUS = CoinState(complex(_R), complex(_R))
COIN_PLUS_Y = CoinState(complex(_R), complex(0.0, _R))


@dataclass
class WalkerState:
    """
    Full walker-plus-coin state.

    Attributes
    ----------
    amplitudes : ndarray, shape (2T+1, 2T+1, 2), complex128
        ``amplitudes[x + T, y + T, c]``.
    steps_taken : int
        Number of complete walk steps applied so far.
    """

    amplitudes: NDArray[np.complex128]
    steps_taken: int = 0

    @property
    def capacity(self) -> int:
        return (self.amplitudes.shape[0] - 1) // 2

    def index(self, x: int, y: int) -> tuple[int, int]:
        """Array indices of site ``(x, y)``; raises if outside the lattice."""
        T = self.capacity
        if abs(x) > T or abs(y) > T:
            raise ValueError(f"site ({x}, {y}) outside lattice [-{T}, {T}]^2")
        return x + T, y + T

    def amplitude(self, x: int, y: int, c: int) -> complex:
        i, j = self.index(x, y)
        return complex(self.amplitudes[i, j, c])

    def copy(self) -> WalkerState:
        return WalkerState(self.amplitudes.copy(), self.steps_taken)


def new_state(T: int, coin: CoinState = COIN_PLUS_Y) -> WalkerState:
    """Walker localized at the origin with the given coin, room for ``T`` steps."""
    if int(T) != T or T < 1:
        raise ValueError(f"capacity must be an integer >= 1, got {T!r}")
    coin.validate()
    T = int(T)
    amps = np.zeros((2 * T + 1, 2 * T + 1, 2), dtype=np.complex128)
    amps[T, T, :] = coin.as_array()
    return WalkerState(amps, 0)


def norm_sq(state: WalkerState) -> float:
    a = state.amplitudes
    return float(np.sum(a.real**2 + a.imag**2))


def probability_at(state: WalkerState, x: int, y: int) -> float:
    """Position probability at ``(x, y)`` with the coin traced out."""
    i, j = state.index(x, y)
    a = state.amplitudes[i, j]
    return float(a[0].real ** 2 + a[0].imag ** 2 + a[1].real ** 2 + a[1].imag ** 2)


def parity_slice(state: WalkerState) -> slice:
    """Index slice selecting the ``s + 1`` reachable coordinates along one axis."""
    T, s = state.capacity, state.steps_taken
    return slice(T - s, T + s + 1, 2)
