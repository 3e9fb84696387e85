"""Directed-graph comparison metrics.

Adjacency convention: entry (i, j) true means an edge j -> i. Both metrics
only look at which ordered pairs carry an edge, so the convention does not
change their values as long as truth and estimate share it.
"""
from typing import Dict, Tuple

import numpy as np

from lookuplingam.errors import ShapeMismatch


def binarize(matrix: np.ndarray, eps: float = 0.0, include_diagonal: bool = False) -> np.ndarray:
    adj = np.abs(np.asarray(matrix, dtype=np.float64)) > eps
    if not include_diagonal:
        np.fill_diagonal(adj, False)
    return adj


def _as_pair(truth, est, include_diagonal: bool = False) -> Tuple[np.ndarray, np.ndarray]:
    t = np.array(truth, dtype=bool)
    e = np.array(est, dtype=bool)
    if t.shape != e.shape or t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ShapeMismatch(f"cannot compare adjacency shapes {t.shape} and {e.shape}")
    if not include_diagonal:
        np.fill_diagonal(t, False)
        np.fill_diagonal(e, False)
    return t, e


def shd(truth, est, include_diagonal: bool = False) -> int:
    """Edge insertions, deletions and reversals turning ``est`` into ``truth``.

    Every unordered pair whose edge state differs costs 1, so a reversed edge
    counts once. With ``include_diagonal`` each mismatched self-loop (a lag-on-
    itself effect) adds 1.
    """
    t, e = _as_pair(truth, est, include_diagonal)
    upper = np.triu_indices(t.shape[0], k=1)
    differs = (t[upper] != e[upper]) | (t.T[upper] != e.T[upper])
    loops = int((np.diag(t) != np.diag(e)).sum()) if include_diagonal else 0
    return int(differs.sum()) + loops


def precision_recall(truth, est, include_diagonal: bool = False) -> Tuple[float, float]:
    t, e = _as_pair(truth, est, include_diagonal)
    tp = int((t & e).sum())
    n_est = int(e.sum())
    n_true = int(t.sum())
    precision = tp / n_est if n_est else 0.0
    recall = tp / n_true if n_true else 0.0
    return precision, recall


def f1(truth, est, include_diagonal: bool = False) -> float:
    """Directed-edge F1; an edge with the wrong direction is not a hit."""
    t, e = _as_pair(truth, est, include_diagonal)
    if not t.any() and not e.any():
        return 1.0
    precision, recall = precision_recall(t, e, include_diagonal)
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def graph_metrics(truth, est, include_diagonal: bool = False) -> Dict[str, float]:
    precision, recall = precision_recall(truth, est, include_diagonal)
    return {
        "shd": shd(truth, est, include_diagonal),
        "f1": f1(truth, est, include_diagonal),
        "precision": precision,
        "recall": recall,
    }
