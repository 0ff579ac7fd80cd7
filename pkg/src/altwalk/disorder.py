"""
Deterministic phase-angle disorder.

A disordered phase gate uses the angle ``(1 + delta) * phi`` with ``delta``
uniform in ``[-epsilon, epsilon]``. Draws are a pure function of the seed and
a key (time step, lattice site, or both), computed with a counter-based
hash rather than a sequential stream: the same key always yields the same
``delta`` and draws for different sites can be taken in any order.

Mixing function
---------------
``splitmix64(z)`` is the standard SplitMix64 finalizer on unsigned 64-bit
integers::

    z = z + 0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z = z ^ (z >> 31)

A key ``(w1, ..., wk)`` is folded in as ``h = splitmix64(seed)`` followed by
``h = splitmix64(h ^ wi)`` for each word; signed words enter as their 64-bit
two's complement. The top 53 bits of ``h`` give ``u = (h >> 11) / 2**53`` in
``[0, 1)`` and ``delta = epsilon * (2u - 1)``. All arithmetic is modulo
``2**64``, so results are identical on every platform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

__all__ = [
    "DisorderKind",
    "DisorderTarget",
    "DisorderSpec",
    "CLEAN",
    "splitmix64",
    "mix",
    "draw_delta",
    "delta_field",
    "trial_seed",
]

MASK64 = 0xFFFFFFFFFFFFFFFF

_GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

# domain-separation words mixed ahead of the key
_AXIS_WORD = {"x": 0x78, "y": 0x79}
_TRIAL_WORD = 0x747269616C


class DisorderKind(str, enum.Enum):
    NONE = "none"
    TIME = "time"
    POSITION = "position"
    BOTH = "both"


class DisorderTarget(str, enum.Enum):
    PHI_X_ONLY = "phi_x_only"
    PHI_Y_ONLY = "phi_y_only"
    BOTH_PHASES = "both_phases"

    def covers(self, axis: str) -> bool:
        if self is DisorderTarget.BOTH_PHASES:
            return True
        return (axis == "x") == (self is DisorderTarget.PHI_X_ONLY)


@dataclass(frozen=True)
class DisorderSpec:
    """Disorder model for the phase-gate angles."""

    kind: DisorderKind = DisorderKind.NONE
    epsilon: float = 0.0
    seed: int = 0
    target: DisorderTarget = DisorderTarget.PHI_X_ONLY

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", DisorderKind(self.kind))
        object.__setattr__(self, "target", DisorderTarget(self.target))
        if not np.isfinite(self.epsilon) or self.epsilon < 0:
            raise ValueError(f"epsilon must be finite and >= 0, got {self.epsilon!r}")
        object.__setattr__(self, "seed", int(self.seed) & MASK64)

    @property
    def active(self) -> bool:
        """True when the spec can change any angle at all."""
        return self.kind is not DisorderKind.NONE and self.epsilon != 0.0

    def acts_on(self, axis: str) -> bool:
        return self.active and self.target.covers(axis)

    def with_seed(self, seed: int) -> DisorderSpec:
        return DisorderSpec(self.kind, self.epsilon, seed, self.target)


CLEAN = DisorderSpec()


def splitmix64(z: int) -> int:
    z = (z + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def _splitmix64_array(z: NDArray[np.uint64]) -> NDArray[np.uint64]:
    z = z + np.uint64(_GOLDEN)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def mix(seed: int, *words: int) -> int:
    """Fold integer words into a 64-bit hash of ``seed``."""
    h = splitmix64(seed & MASK64)
    for w in words:
        h = splitmix64(h ^ (w & MASK64))
    return h


def _to_unit(h: int) -> float:
    return (h >> 11) * 2.0**-53


def _key(spec: DisorderSpec, t: int, x: int, y: int) -> tuple[int, ...]:
    if spec.kind is DisorderKind.TIME:
        return (t,)
    if spec.kind is DisorderKind.POSITION:
        return (x, y)
    return (t, x, y)


def draw_delta(spec: DisorderSpec, t: int, x: int = 0, y: int = 0, axis: str = "x") -> float:
    """
    Relative angle perturbation for one key.

    Only the parts of ``(t, x, y)`` that the disorder kind depends on enter the
    hash. ``axis`` separates the streams of the two phase gates.
    """
    if spec.kind is DisorderKind.NONE:
        raise ValueError("draw_delta called with disorder kind 'none'")
    if spec.epsilon == 0.0:
        return 0.0
    h = mix(spec.seed, _AXIS_WORD[axis], *_key(spec, t, x, y))
    return spec.epsilon * (2.0 * _to_unit(h) - 1.0)


def delta_field(
    spec: DisorderSpec, t: int, xs: ArrayLike, ys: ArrayLike, axis: str = "x"
) -> NDArray[np.float64]:
    """
    Vectorized ``draw_delta`` over the grid ``xs`` x ``ys`` (indexing ``ij``).

    Only meaningful for kinds that depend on position; values equal the scalar
    ``draw_delta`` bit for bit.
    """
    if spec.kind not in (DisorderKind.POSITION, DisorderKind.BOTH):
        raise ValueError(f"delta_field needs a position-dependent kind, got {spec.kind.value!r}")
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    if spec.epsilon == 0.0:
        return np.zeros((xs.size, ys.size))
    prefix = [_AXIS_WORD[axis]]
    if spec.kind is DisorderKind.BOTH:
        prefix.append(t)
    h0 = mix(spec.seed, *prefix)
    hx = _splitmix64_array(np.uint64(h0) ^ xs.astype(np.uint64))
    h = _splitmix64_array(hx[:, None] ^ ys.astype(np.uint64)[None, :])
    u = (h >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return spec.epsilon * (2.0 * u - 1.0)


def trial_seed(base_seed: int, trial: int) -> int:
    """Seed of Monte Carlo trial ``trial``; independent of evaluation order."""
    return mix(base_seed, _TRIAL_WORD, trial)
