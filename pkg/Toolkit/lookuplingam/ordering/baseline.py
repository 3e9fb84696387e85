"""Exact iterative DirectLiNGAM ordering.

Each round standardizes the current matrix, scores every ordered pair,
picks the most exogenous variable and replaces every remaining column by its
residual on the pick. Rounds are sequential; the pairwise work inside a round
is split over ``n_jobs`` threads.
"""
import logging
from typing import List

import numpy as np

from lookuplingam.core.entropy import is_collinear, residual, score_table
from lookuplingam.core.standardize import standardize_values, validate
from lookuplingam.errors import ZeroVariance
from lookuplingam.models.timeseries import CausalOrder, DataMatrix
from lookuplingam.ordering.scores import select_next

logger = logging.getLogger(__name__)


def _refine(z: np.ndarray, pick: int) -> np.ndarray:
    """Residuals of every column except ``pick`` on column ``pick``."""
    root = z[:, pick]
    keep = [i for i in range(z.shape[1]) if i != pick]
    out = np.empty((z.shape[0], len(keep)), dtype=np.float64, order="F")
    for k, i in enumerate(keep):
        r = residual(z[:, i], root)
        if is_collinear(r, z[:, i]):
            raise ZeroVariance(
                detail="refinement produced a constant column: the input is exactly collinear"
            )
        out[:, k] = r
    return out


def causal_order_baseline(x: DataMatrix, n_jobs: int = 1) -> CausalOrder:
    validate(x)
    remaining: List[int] = list(range(x.n_variables))
    order: List[int] = []
    stage = x.values

    while remaining:
        z = standardize_values(stage)
        if len(remaining) == 1:
            order.append(remaining.pop())
            break
        ex, er = score_table(z, n_jobs=n_jobs)
        pick = select_next(ex[:, None] - er, range(len(remaining)))
        order.append(remaining.pop(pick))
        logger.debug("round %d: picked variable %d", len(order), order[-1])
        stage = _refine(z, pick)

    return CausalOrder(order=order)
