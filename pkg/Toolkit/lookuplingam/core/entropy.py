"""Residuals, the maximum-entropy approximation and pairwise scores.

Every moment here is a population (divisor n) moment.
"""
import logging
from typing import Tuple

import numpy as np
from joblib import Parallel, delayed

from lookuplingam.core.standardize import is_constant
from lookuplingam.errors import LengthMismatch, ZeroVariance

logger = logging.getLogger(__name__)

Residual = np.ndarray
PairScore = float

H_NU = (1.0 + np.log(2.0 * np.pi)) / 2.0
K1 = 79.047
K2 = 7.4129
GAMMA = 0.37457
LOG2 = np.log(2.0)

# Residual variance at or below this fraction of the regressand variance means
# the pair is exactly collinear.
COLLINEAR_TOLERANCE = 1e-12


def _check_pair(xi: np.ndarray, xj: np.ndarray) -> None:
    if xi.shape != xj.shape or xi.ndim != 1:
        raise LengthMismatch(f"vectors of shapes {xi.shape} and {xj.shape} cannot be paired")
    if xi.shape[0] < 2:
        raise LengthMismatch("need at least 2 samples")


def residual(xi: np.ndarray, xj: np.ndarray) -> Residual:
    """x_i minus its least-squares projection onto x_j."""
    xi = np.asarray(xi, dtype=np.float64)
    xj = np.asarray(xj, dtype=np.float64)
    _check_pair(xi, xj)
    if is_constant(xj):
        raise ZeroVariance(detail="regressor is constant")
    dj = xj - np.mean(xj)
    cov = np.mean((xi - np.mean(xi)) * dj)
    var = np.mean(dj * dj)
    return xi - (cov / var) * xj


def is_collinear(r: np.ndarray, xi: np.ndarray) -> bool:
    """True when nothing of x_i survived the regression."""
    return bool(np.var(r) <= COLLINEAR_TOLERANCE * np.var(xi))


def entropy(u: np.ndarray) -> float:
    u = np.asarray(u, dtype=np.float64)
    if u.shape[0] < 2 or is_constant(u):
        raise ZeroVariance(detail="cannot standardize a constant vector")
    z = (u - np.mean(u)) / np.std(u)
    return float(
        H_NU
        - K1 * (np.mean(np.logaddexp(z, -z) - LOG2) - GAMMA) ** 2
        - K2 * (np.mean(z * np.exp(-(z**2) / 2))) ** 2
    )


def pair_score(xi: np.ndarray, xj: np.ndarray) -> PairScore:
    """T_{i<-j} = H(x_i) - H(r_{i<-j})."""
    r = residual(xi, xj)
    if is_collinear(r, np.asarray(xi, dtype=np.float64)):
        raise ZeroVariance(detail="residual is constant: the pair is exactly collinear")
    return entropy(xi) - entropy(r)


def _residual_entropy_column(z: np.ndarray, j: int, rows) -> np.ndarray:
    out = np.full(z.shape[1], np.nan)
    xj = z[:, j]
    for i in rows:
        if i == j:
            continue
        xi = z[:, i]
        r = residual(xi, xj)
        if is_collinear(r, xi):
            raise ZeroVariance(
                detail=f"residual of column {i} on column {j} is constant (exact collinearity)"
            )
        out[i] = entropy(r)
    return out


def score_table(z: np.ndarray, n_jobs: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Variable entropies ex and residual entropies er for a standardized matrix.

    er[i, j] = H(r_{i<-j}); the diagonal is NaN. Work is split by regressor
    column and written back by index, so the result does not depend on n_jobs.
    """
    m = z.shape[1]
    ex = np.array([entropy(z[:, i]) for i in range(m)])
    rows = range(m)
    columns = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_residual_entropy_column)(z, j, rows) for j in range(m)
    )
    er = np.column_stack(columns) if columns else np.empty((0, 0))
    np.fill_diagonal(er, np.nan)
    return ex, er
