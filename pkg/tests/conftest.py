import numpy as np
import pytest

from altwalk import COIN_PLUS_Y, WalkerState, new_state

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def random_state(rng: np.random.Generator, T: int = 4, steps: int = 0) -> WalkerState:
    """Normalized random amplitudes inside [-T+1, T-1]^2 (room for one shift each way)."""
    state = new_state(T, COIN_PLUS_Y)
    a = np.zeros_like(state.amplitudes)
    inner = (slice(1, 2 * T), slice(1, 2 * T), slice(None))
    a[inner] = rng.normal(size=a[inner].shape) + 1j * rng.normal(size=a[inner].shape)
    a /= np.sqrt(np.sum(np.abs(a) ** 2))
    return WalkerState(a, steps)


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
