"""Precompute-and-lookup ordering.

All entropies are computed once from the standardized input; the search
then runs purely on table lookups and never updates the data.
"""
import logging
from typing import List

from lookuplingam.core.entropy import score_table
from lookuplingam.core.standardize import standardize, validate
from lookuplingam.models.tables import EntropyTables
from lookuplingam.models.timeseries import CausalOrder, DataMatrix, StandardizedMatrix
from lookuplingam.ordering.scores import select_next

logger = logging.getLogger(__name__)


def precompute_tables(x: StandardizedMatrix, n_jobs: int = 1) -> EntropyTables:
    ex, er = score_table(x.values, n_jobs=n_jobs)
    return EntropyTables(ex=ex, er=er)


def search_order(tables: EntropyTables) -> CausalOrder:
    T = tables.pair_scores()
    remaining: List[int] = list(range(tables.n_variables))
    order: List[int] = []
    while remaining:
        pick = select_next(T, remaining)
        order.append(pick)
        remaining.remove(pick)
        logger.debug("round %d: picked variable %d", len(order), pick)
    return CausalOrder(order=order)


def causal_order_heuristic(x: DataMatrix, n_jobs: int = 1) -> CausalOrder:
    validate(x)
    return search_order(precompute_tables(standardize(x), n_jobs=n_jobs))
