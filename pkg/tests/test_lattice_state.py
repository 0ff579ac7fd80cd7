import math

import numpy as np
import pytest

from altwalk import COIN_PLUS_Y, COIN_ZERO, CoinState, WalkParams, evolve, new_state, norm_sq, probability_at

SQ = 1 / math.sqrt(2)


def test_new_state_basis_coin():
    s = new_state(10, CoinState(1, 0))
    assert s.steps_taken == 0
    assert s.amplitudes.shape == (21, 21, 2)
    assert s.amplitude(0, 0, 0) == 1
    assert np.count_nonzero(s.amplitudes) == 1


def test_new_state_default_coin():
    s = new_state(10, CoinState(SQ, 1j * SQ))
    assert s.amplitude(0, 0, 0) == pytest.approx(SQ)
    assert s.amplitude(0, 0, 1) == pytest.approx(1j * SQ)
    assert COIN_PLUS_Y == CoinState(SQ, 1j * SQ)


@pytest.mark.parametrize(
    "T, coin",
    [(10, CoinState(0.6, 0.9)), (0, COIN_ZERO), (-3, COIN_ZERO), (2.5, COIN_ZERO)],
)
def test_new_state_rejects(T, coin):
    with pytest.raises(ValueError):
        new_state(T, coin)


def test_norm_sq():
    s = new_state(5)
    assert norm_sq(s) == pytest.approx(1.0, abs=1e-15)
    s.amplitudes[:] = 0
    assert norm_sq(s) == 0.0
    assert norm_sq(evolve(WalkParams(100, 1.234, 0.5))) == pytest.approx(1.0, abs=1e-10)


def test_probability_at():
    s = new_state(10, COIN_PLUS_Y)
    assert probability_at(s, 0, 0) == pytest.approx(1.0)
    assert probability_at(s, 1, 0) == 0.0
    with pytest.raises(ValueError):
        probability_at(s, 11, 0)
    with pytest.raises(ValueError):
        probability_at(s, 0, -11)


def test_one_step_corners():
    s = evolve(WalkParams(1))
    for x in (-1, 1):
        for y in (-1, 1):
            assert probability_at(s, x, y) == pytest.approx(0.25, abs=1e-15)
    assert probability_at(s, 0, 0) == 0.0


@pytest.mark.parametrize("seed", range(5))
def test_parity_and_support(seed):
    r = np.random.default_rng(seed)
    phi_x, phi_y = r.uniform(0, 2 * math.pi, 2)
    T = 100
    xs = np.arange(-T, T + 1)

    def check(s):
        k = s.steps_taken
        nz = np.any(s.amplitudes != 0, axis=-1)
        bad_parity = ((xs[:, None] - k) % 2 != 0) | ((xs[None, :] - k) % 2 != 0)
        assert not np.any(nz & bad_parity)
        ix, iy = np.nonzero(nz)
        assert np.max(np.abs(xs[ix])) <= k and np.max(np.abs(xs[iy])) <= k
        assert abs(norm_sq(s) - 1) < 1e-10

    evolve(WalkParams(T, phi_x, phi_y), observer=check)
