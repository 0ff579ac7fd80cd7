"""
Measured quantities: return probability, position distribution, walker
density matrices and the coherence norm.

Density matrices live on the parity sublattice. After ``s`` steps only sites
with ``x = s (mod 2)`` and ``y = s (mod 2)`` can be occupied, so each axis
contributes ``s + 1`` basis states ``-s, -s + 2, ..., s`` and the two-walker
basis is their product in x-major order.

The coherence norm is the trace norm of ``rho_W - rho_x (x) rho_y``. That
difference is Hermitian, so its trace norm is the sum of absolute
eigenvalues, obtained from LAPACK's Hermitian solver (``zheevd``:
Householder tridiagonalization followed by divide and conquer).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from altwalk.lattice_state import WalkerState, parity_slice, probability_at

__all__ = [
    "DensityMatrix",
    "SeriesRecord",
    "DEFAULT_DIM_CAP",
    "return_probability",
    "average_return_probability",
    "running_average",
    "position_distribution",
    "reduced_walker_density",
    "marginal_density",
    "coherence_difference",
    "hermitian_eigenvalues",
    "coherence_norm",
]

DEFAULT_DIM_CAP = 2500


@dataclass
class DensityMatrix:
    """
    Hermitian matrix with basis labels.

    ``basis`` holds integer positions for a single walker or ``(x, y)`` pairs
    for the two-walker matrix.
    """

    entries: NDArray[np.complex128]
    basis: list

    def __post_init__(self) -> None:
        n = len(self.basis)
        if self.entries.shape != (n, n):
            raise ValueError(f"entries shape {self.entries.shape} does not match basis size {n}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def hermiticity_error(self) -> float:
        if self.dim == 0:
            return 0.0
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def eigenvalues(self) -> NDArray[np.float64]:
        return hermitian_eigenvalues(self.entries)


@dataclass(frozen=True)
class SeriesRecord:
    """Per-step observables; ``p_bar`` is NaN for t < 2, ``c_norm`` optional."""

    t: int
    p0: float
    p_bar: float
    c_norm: Optional[float] = None


def return_probability(state: WalkerState) -> float:
    return probability_at(state, 0, 0)


def average_return_probability(p0_series: Sequence[float]) -> float:
    """
    Mean of ``P0(t)`` over the even steps ``2, 4, ..., T``.

    ``p0_series[t]`` is the return probability after ``t`` steps, t = 0..T.
    Odd steps are skipped (they vanish by parity) and so is ``t = 0``.
    """
    T = len(p0_series) - 1
    if T < 2 or T % 2:
        raise ValueError(f"need an even horizon T >= 2, got T={T}")
    even = p0_series[2 : T + 1 : 2]
    return sum(even) / len(even)


def running_average(p0_series: Sequence[float]) -> list[float]:
    """
    ``P-bar`` at every horizon t = 0..T.

    For odd t the value over even steps up to t - 1 is carried forward; it is
    NaN for t < 2 where no even step has been taken.
    """
    out = []
    total = 0.0
    count = 0
    for t, p in enumerate(p0_series):
        if t >= 2 and t % 2 == 0:
            total += p
            count += 1
        out.append(total / count if count else float("nan"))
    return out


def position_distribution(state: WalkerState) -> dict[tuple[int, int], float]:
    s = state.steps_taken
    sl = parity_slice(state)
    a = state.amplitudes[sl, sl]
    prob = np.sum(a.real**2 + a.imag**2, axis=-1)
    coords = range(-s, s + 1, 2)
    return {(x, y): float(prob[i, j]) for i, x in enumerate(coords) for j, y in enumerate(coords)}


def _coin_slices(state: WalkerState) -> NDArray[np.complex128]:
    """Coin-resolved amplitudes on the parity sublattice, shape (2, n, n)."""
    sl = parity_slice(state)
    return np.moveaxis(state.amplitudes[sl, sl], -1, 0)


def reduced_walker_density(state: WalkerState) -> DensityMatrix:
    """Two-walker density matrix with the coin traced out (rank at most 2)."""
    s = state.steps_taken
    psi = _coin_slices(state).reshape(2, -1)
    rho = psi[0][:, None] * psi[0].conj()[None, :] + psi[1][:, None] * psi[1].conj()[None, :]
    coords = list(range(-s, s + 1, 2))
    return DensityMatrix(rho, [(x, y) for x in coords for y in coords])


def _product_axes(basis: list) -> tuple[list, list]:
    try:
        xs = list(dict.fromkeys(b[0] for b in basis))
        ys = list(dict.fromkeys(b[1] for b in basis))
    except (TypeError, IndexError):
        raise ValueError("marginal_density needs a basis of (x, y) pairs") from None
    if [(x, y) for x in xs for y in ys] != list(basis):
        raise ValueError("basis is not an x-major product of x and y coordinates")
    return xs, ys


def marginal_density(rho: DensityMatrix, axis: str) -> DensityMatrix:
    """Partial trace of a two-walker matrix, keeping the walker along ``axis``."""
    xs, ys = _product_axes(rho.basis)
    r = rho.entries.reshape(len(xs), len(ys), len(xs), len(ys))
    if axis == "x":
        return DensityMatrix(np.einsum("ijkj->ik", r), xs)
    if axis == "y":
        return DensityMatrix(np.einsum("ijil->jl", r), ys)
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def coherence_difference(state: WalkerState, dim_cap: int = DEFAULT_DIM_CAP) -> DensityMatrix:
    """``rho_W - rho_x (x) rho_y`` on the parity sublattice (traceless, Hermitian)."""
    n = state.steps_taken + 1
    if n * n > dim_cap:
        raise ValueError(
            f"coherence norm after {state.steps_taken} steps needs a {n * n}-dimensional "
            f"eigensolve, above dim_cap={dim_cap}; pass a larger dim_cap to allow it"
        )
    rho = reduced_walker_density(state)
    rx = marginal_density(rho, "x")
    ry = marginal_density(rho, "y")
    return DensityMatrix(rho.entries - np.kron(rx.entries, ry.entries), rho.basis)


def hermitian_eigenvalues(m: NDArray[np.complex128]) -> NDArray[np.float64]:
    """Ascending eigenvalues of a Hermitian matrix (lower triangle is used)."""
    return np.linalg.eigvalsh(m)


def coherence_norm(state: WalkerState, dim_cap: int = DEFAULT_DIM_CAP) -> float:
    """Trace norm of ``rho_W - rho_x (x) rho_y``."""
    d = coherence_difference(state, dim_cap)
    return float(np.sum(np.abs(hermitian_eigenvalues(d.entries))))
