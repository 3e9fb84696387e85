"""Synthetic non-Gaussian structural VAR processes with known structure.

x_t = B0 x_t + sum_tau B_tau x_{t-tau} + e_t with i.i.d. unit-variance
non-Gaussian e_t. B0 is strictly lower triangular under a random order.
"""
import logging
from typing import List, Tuple

import numpy as np
from scipy import linalg

from lookuplingam.errors import InsufficientSamples, InvalidDensity, NonStationary
from lookuplingam.models.ground_truth import GroundTruth, NoiseFamily
from lookuplingam.models.timeseries import CausalOrder, DataMatrix

logger = logging.getLogger(__name__)

BURN_IN = 200
COEF_LOW = 0.3
COEF_HIGH = 0.9
TARGET_RADIUS = 0.95
SHRINK = 0.9
MAX_SHRINK_STEPS = 200


def default_density(m: int) -> float:
    """Two instantaneous parents per variable on average."""
    if m <= 1:
        return 1.0
    return min(1.0, 2.0 / (m - 1))


def _coefficients(rng: np.random.Generator, shape, density: float) -> np.ndarray:
    mask = rng.random(shape) < density
    magnitude = rng.uniform(COEF_LOW, COEF_HIGH, size=shape)
    sign = rng.choice([-1.0, 1.0], size=shape)
    return np.where(mask, magnitude * sign, 0.0)


def _draw(rng: np.random.Generator, family: NoiseFamily, size) -> np.ndarray:
    # Both families have unit variance.
    if family == NoiseFamily.laplace:
        return rng.laplace(0.0, 1.0 / np.sqrt(2.0), size=size)
    return rng.uniform(-np.sqrt(3.0), np.sqrt(3.0), size=size)


def draw_noise(rng: np.random.Generator, family: NoiseFamily, n: int, m: int) -> np.ndarray:
    if family != NoiseFamily.mixed:
        return _draw(rng, family, (n, m))
    families = [NoiseFamily.laplace if u < 0.5 else NoiseFamily.uniform for u in rng.random(m)]
    return np.column_stack([_draw(rng, fam, n) for fam in families])


def solve_instantaneous(b0: np.ndarray, order: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve (I - b0) y = rhs column-wise by forward substitution along ``order``."""
    lower = (np.eye(b0.shape[0]) - b0)[np.ix_(order, order)]
    y = linalg.solve_triangular(lower, rhs[order], lower=True, unit_diagonal=True)
    out = np.empty_like(y)
    out[order] = y
    return out


def companion_radius(reduced: List[np.ndarray]) -> float:
    """Spectral radius of the companion matrix of x_t = sum A_tau x_{t-tau}."""
    if not reduced:
        return 0.0
    m = reduced[0].shape[0]
    p = len(reduced)
    companion = np.zeros((m * p, m * p))
    companion[:m, :] = np.hstack(reduced)
    companion[m:, :-m] = np.eye(m * (p - 1))
    return float(np.max(np.abs(np.linalg.eigvals(companion))))


def generate_synthetic(
    m: int,
    n: int,
    p: int = 1,
    density: float = 0.5,
    noise_family: NoiseFamily = NoiseFamily.uniform,
    seed: int = 0,
) -> Tuple[DataMatrix, GroundTruth]:
    if not 0.0 < density <= 1.0:
        raise InvalidDensity(f"density must lie in (0, 1], got {density}")
    if m < 1 or p < 0:
        raise ValueError(f"need m >= 1 and p >= 0, got m={m}, p={p}")
    if n <= p * m + 50:
        raise InsufficientSamples(f"n={n} must exceed p*m + 50 = {p * m + 50}")
    noise_family = NoiseFamily(noise_family)
    rng = np.random.default_rng(seed)

    order = rng.permutation(m)
    b0 = np.zeros((m, m))
    b0[np.ix_(order, order)] = np.tril(_coefficients(rng, (m, m), density), k=-1)

    lagged = [_coefficients(rng, (m, m), density) for _ in range(p)]
    reduced = [solve_instantaneous(b0, order, b) for b in lagged]
    steps = 0
    # The simulated process is the reduced form; the structural matrices are kept stable too.
    while companion_radius(reduced) >= TARGET_RADIUS or companion_radius(lagged) >= 1.0:
        if steps == MAX_SHRINK_STEPS:
            raise NonStationary(
                f"companion radius still {companion_radius(reduced):.3f} after {steps} shrink steps"
            )
        lagged = [SHRINK * b for b in lagged]
        reduced = [SHRINK * a for a in reduced]
        steps += 1
    if steps:
        logger.debug("shrank lagged matrices %d times for stationarity", steps)

    total = n + BURN_IN
    shocks = solve_instantaneous(b0, order, draw_noise(rng, noise_family, total, m).T).T
    x = np.zeros((total, m))
    for t in range(total):
        x[t] = shocks[t]
        for tau, a in enumerate(reduced, start=1):
            if t >= tau:
                x[t] += a @ x[t - tau]

    truth = GroundTruth(
        b0_true=b0,
        lagged_true=lagged,
        order_true=CausalOrder(order=order.tolist()),
        noise_family=noise_family,
    )
    return DataMatrix.from_array(x[BURN_IN:]), truth
