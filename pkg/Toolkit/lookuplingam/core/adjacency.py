import logging
from typing import List

import numpy as np
from scipy import linalg

from lookuplingam.errors import ShapeMismatch, SingularDesign
from lookuplingam.models.graph import CausalGraph
from lookuplingam.models.timeseries import CausalOrder, DataMatrix
from lookuplingam.models.var_model import VarModel

logger = logging.getLogger(__name__)


def estimate_b0(residuals: DataMatrix, order: CausalOrder) -> np.ndarray:
    """Regress every variable on its predecessors in ``order``.

    Row v of the result holds the OLS coefficients of v on its predecessors;
    every other entry is exactly 0. Columns are centred first, which is the
    same as fitting an intercept.
    """
    m = residuals.n_variables
    if len(order.order) != m:
        raise ShapeMismatch(f"order has {len(order.order)} entries for {m} variables")
    centred = residuals.values - residuals.values.mean(axis=0)
    b0 = np.zeros((m, m))
    for k in range(1, m):
        target = order.order[k]
        predictors = order.order[:k]
        coef, _, rank, _ = linalg.lstsq(
            centred[:, predictors], centred[:, target], lapack_driver="gelsy"
        )
        if rank < len(predictors):
            raise SingularDesign(
                f"predecessors of variable {target} are linearly dependent (rank {rank} < {k})"
            )
        b0[target, predictors] = coef
    return b0


def lagged_effects(b0: np.ndarray, var: VarModel) -> List[np.ndarray]:
    """B_tau = (I - b0) M_tau for every VAR coefficient matrix."""
    eye = np.eye(b0.shape[0])
    return [(eye - b0) @ m_tau for m_tau in var.coefficients]


def build_graph(b0: np.ndarray, var: VarModel) -> CausalGraph:
    return CausalGraph(b0=b0, lagged=lagged_effects(b0, var))


def prune_threshold(g: CausalGraph, eps: float) -> CausalGraph:
    """Zero every entry with magnitude below ``eps``."""
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps}")

    def _prune(mat: np.ndarray) -> np.ndarray:
        return np.where(np.abs(mat) < eps, 0.0, mat)

    b0, *lagged = [_prune(mat) for mat in g.matrices()]
    return CausalGraph(b0=b0, lagged=lagged)
