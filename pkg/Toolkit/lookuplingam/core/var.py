import logging
from typing import Tuple

import numpy as np
from scipy import linalg

from lookuplingam.core.standardize import validate
from lookuplingam.errors import InsufficientSamples, SingularDesign
from lookuplingam.models.timeseries import DataMatrix
from lookuplingam.models.var_model import VarModel

logger = logging.getLogger(__name__)


def _lag_design(values: np.ndarray, p: int, offset: int = 0) -> Tuple[np.ndarray, np.ndarray]:
    """Stack [1, x_{t-1}, ..., x_{t-p}] against x_t for t = offset + p .. n - 1.

    ``offset`` drops leading rows so several lag orders share one sample.
    """
    values = values[offset:]
    n = values.shape[0]
    blocks = [np.ones((n - p, 1))]
    blocks += [values[p - tau : n - tau] for tau in range(1, p + 1)]
    return np.hstack(blocks), values[p:]


def _ols(design: np.ndarray, y: np.ndarray) -> np.ndarray:
    # QR with column pivoting; never forms the normal equations.
    coef, _, rank, _ = linalg.lstsq(design, y, lapack_driver="gelsy")
    if rank < design.shape[1]:
        raise SingularDesign(
            f"lag design matrix has rank {rank} < {design.shape[1]} columns"
        )
    return coef


def _check_samples(n: int, m: int, p: int) -> None:
    # the regression runs on n - p rows against p * m + 1 columns
    if n - p <= p * m + 1:
        raise InsufficientSamples(
            f"{n} samples cannot identify a VAR({p}) on {m} variables "
            f"(need more than {p * m + 1} rows after dropping {p})"
        )


def fit_var(x: DataMatrix, p: int = 1) -> VarModel:
    """OLS fit of every variable on all variables at lags 1..p plus an intercept.

    p = 0 gives the intercept-only model whose residuals are the demeaned data.
    """
    validate(x)
    if p < 0:
        raise ValueError(f"lag order must be >= 0, got {p}")
    n, m = x.n_samples, x.n_variables
    _check_samples(n, m, p)

    design, y = _lag_design(x.values, p)
    coef = _ols(design, y)
    fitted = design @ coef
    coefficients = [coef[1 + (tau - 1) * m : 1 + tau * m].T.copy() for tau in range(1, p + 1)]
    logger.debug("fitted VAR(%d) on %dx%d data", p, n, m)
    return VarModel(
        lag_order=p,
        coefficients=coefficients,
        intercept=coef[0].copy(),
        residuals=y - fitted,
        fitted=fitted,
    )


def _bic(values: np.ndarray, p: int, offset: int) -> float:
    design, y = _lag_design(values, p, offset)
    resid = y - design @ _ols(design, y)
    nobs, m = y.shape
    sigma = resid.T @ resid / nobs
    _, logdet = np.linalg.slogdet(sigma)
    free_params = p * m * m + m
    return float(logdet + np.log(nobs) / nobs * free_params)


def select_lag(x: DataMatrix, p_max: int) -> int:
    """Lag order in 1..p_max with the smallest BIC; ties go to the smaller order.

    Every candidate is estimated on the same rows (the first p_max - p rows
    are dropped) so the criteria are comparable.
    """
    validate(x)
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    n, m = x.n_samples, x.n_variables
    _check_samples(n, m, p_max)
    if p_max == 1:
        return 1

    bics = [_bic(x.values, p, p_max - p) for p in range(1, p_max + 1)]
    logger.debug("BIC by lag order: %s", dict(zip(range(1, p_max + 1), bics)))
    return int(np.argmin(bics)) + 1
