"""Search for inputs where the lookup ordering departs from the exact one.

Report-only: nothing here decides pass/fail. The ``masked_chain`` generator
aims at the suspected weak spot of skipping refinement, a direct edge that
is partly cancelled by a stronger indirect path.
"""
import logging
from typing import Iterable, Tuple

import numpy as np
import pandas as pd

from lookuplingam.core.standardize import validate
from lookuplingam.evaluation.synthetic import draw_noise, generate_synthetic, solve_instantaneous
from lookuplingam.models.ground_truth import GroundTruth, NoiseFamily
from lookuplingam.models.timeseries import CausalOrder, DataMatrix
from lookuplingam.ordering.baseline import causal_order_baseline
from lookuplingam.ordering.heuristic import causal_order_heuristic

logger = logging.getLogger(__name__)


def masked_chain(
    n: int, seed: int, noise_family: NoiseFamily = NoiseFamily.uniform
) -> Tuple[DataMatrix, GroundTruth]:
    """x_a -> x_b -> x_c with a weak direct x_a -> x_c that opposes the chain."""
    rng = np.random.default_rng(seed)
    strong = rng.uniform(0.6, 0.95)
    cancel = rng.uniform(0.5, 1.0)
    order = rng.permutation(3)
    a, b, c = order
    b0 = np.zeros((3, 3))
    b0[b, a] = strong
    b0[c, b] = strong
    b0[c, a] = -cancel * strong * strong
    shocks = solve_instantaneous(b0, order, draw_noise(rng, NoiseFamily(noise_family), n, 3).T).T
    truth = GroundTruth(
        b0_true=b0,
        lagged_true=[],
        order_true=CausalOrder(order=order.tolist()),
        noise_family=noise_family,
    )
    return DataMatrix.from_array(shocks), truth


def _consistent(order: CausalOrder, b0: np.ndarray) -> bool:
    """True when every edge of b0 points forward in ``order``."""
    targets, sources = np.nonzero(b0)
    return all(order.position(s) < order.position(t) for t, s in zip(targets, sources))


def find_disagreements(
    seeds: Iterable[int],
    kind: str = "masked_chain",
    m: int = 5,
    n: int = 10_000,
    n_jobs: int = 1,
) -> pd.DataFrame:
    """Run both engines per seed and tabulate where they part ways.

    ``kind`` is ``"masked_chain"`` or ``"random"`` (i.i.d. shocks from the
    synthetic generator with p = 0).
    """
    rows = []
    for seed in seeds:
        if kind == "masked_chain":
            data, truth = masked_chain(n, seed)
        else:
            data, truth = generate_synthetic(m, n, p=0, density=0.5, seed=seed)
        validate(data)
        exact = causal_order_baseline(data, n_jobs=n_jobs)
        lookup = causal_order_heuristic(data, n_jobs=n_jobs)
        row = {
            "seed": seed,
            "kind": kind,
            "agree": exact.order == lookup.order,
            "first_pick_agree": exact.first == lookup.first,
            "baseline_correct": _consistent(exact, truth.b0_true),
            "heuristic_correct": _consistent(lookup, truth.b0_true),
        }
        if row["baseline_correct"] and not row["heuristic_correct"]:
            logger.info("seed %d: exact order %s is correct, lookup order %s is not",
                        seed, exact.order, lookup.order)
        rows.append(row)
    return pd.DataFrame(rows)
