"""Aggregate dependence score shared by both ordering engines.

T[i, j] holds T_{i<-j}. The pairwise term is
f(T_{i<-j}, T_{j<-i}) = min(0, T_{j<-i} - T_{i<-j})**2 and the next variable
in the order is the argmin of the per-variable sums.
"""
from typing import Sequence

import numpy as np


def aggregate_score(i: int, U: Sequence[int], T: np.ndarray) -> float:
    total = 0.0
    for j in U:
        if j == i:
            continue
        total += min(0.0, T[j, i] - T[i, j]) ** 2
    return total


def aggregate_scores(T: np.ndarray, U: Sequence[int]) -> np.ndarray:
    """Scores M_i for every i in U (in the order of U)."""
    idx = np.asarray(U, dtype=np.intp)
    sub = T[np.ix_(idx, idx)]
    diff = sub.T - sub
    np.fill_diagonal(diff, 0.0)
    return (np.minimum(0.0, diff) ** 2).sum(axis=1)


def select_next(T: np.ndarray, U: Sequence[int]) -> int:
    """Variable of U with the smallest score; U sorted ascending makes ties go to the smallest index."""
    scores = aggregate_scores(T, U)
    return int(U[int(np.argmin(scores))])
