import numpy as np
import pytest

from lookuplingam.models.timeseries import DataMatrix

SQRT3 = np.sqrt(3.0)


def pytest_addoption(parser):
    parser.addoption(
        "--run-timing",
        action="store_true",
        default=False,
        help="run wall-clock acceptance checks",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-timing"):
        return
    skip = pytest.mark.skip(reason="wall-clock check, pass --run-timing to run")
    for item in items:
        if "timing" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def uniform_chain(seed: int, n: int = 10_000, m: int = 2, coef: float = 0.8) -> DataMatrix:
    """x0 -> x1 -> ... -> x{m-1} with unit-variance uniform shocks."""
    gen = np.random.default_rng(seed)
    e = gen.uniform(-SQRT3, SQRT3, size=(n, m))
    x = np.empty_like(e)
    x[:, 0] = e[:, 0]
    for k in range(1, m):
        x[:, k] = coef * x[:, k - 1] + e[:, k]
    return DataMatrix.from_array(x)


def var1_series(seed: int, coef: np.ndarray, n: int = 10_000, burn_in: int = 200) -> np.ndarray:
    gen = np.random.default_rng(seed)
    m = coef.shape[0]
    e = gen.uniform(-SQRT3, SQRT3, size=(n + burn_in, m))
    x = np.zeros_like(e)
    for t in range(1, n + burn_in):
        x[t] = coef @ x[t - 1] + e[t]
    return x[burn_in:]


@pytest.fixture
def chain():
    return uniform_chain


@pytest.fixture
def var1():
    return var1_series
