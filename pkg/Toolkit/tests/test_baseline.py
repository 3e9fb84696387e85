import itertools

import lingam
import numpy as np
import pytest

from lookuplingam.core.entropy import residual, score_table
from lookuplingam.core.standardize import standardize_values
from lookuplingam.errors import ZeroVariance
from lookuplingam.models.timeseries import DataMatrix
from lookuplingam.ordering.baseline import _refine, causal_order_baseline
from lookuplingam.ordering.scores import aggregate_score


def test_single_variable(rng):
    assert causal_order_baseline(DataMatrix.from_array(rng.uniform(size=(50, 1)))).order == [0]


def test_two_variable_chain(chain):
    assert causal_order_baseline(chain(0)).order == [0, 1]


def test_three_variable_chain(chain):
    assert causal_order_baseline(chain(1, m=3)).order == [0, 1, 2]


def test_refinement_decorrelates(chain):
    z = standardize_values(chain(2, m=4).values)
    refined = _refine(z, 1)
    root = z[:, 1]
    for k in range(refined.shape[1]):
        cov = np.mean((refined[:, k] - refined[:, k].mean()) * (root - root.mean()))
        assert abs(cov) < 1e-6


def test_scale_invariance(chain):
    x = chain(3, m=3)
    scaled = DataMatrix.from_array(x.values * np.array([3.0, 0.01, 250.0]))
    assert causal_order_baseline(scaled).order == causal_order_baseline(x).order


def test_thread_count_does_not_change_order(chain):
    x = chain(4, m=4, n=3000)
    assert causal_order_baseline(x, n_jobs=1) == causal_order_baseline(x, n_jobs=4)


def test_exact_collinearity(rng):
    col = rng.uniform(size=200)
    other = rng.uniform(size=200)
    x = DataMatrix.from_array(np.column_stack([col, other, 2.0 * col - other]))
    with pytest.raises(ZeroVariance):
        causal_order_baseline(x)


def _independence_cost(z: np.ndarray, order) -> float:
    """Sum of aggregate scores along ``order`` with exact refinement, for brute force."""
    stage = z
    labels = list(range(z.shape[1]))
    total = 0.0
    for var in order[:-1]:
        zs = standardize_values(stage)
        ex, er = score_table(zs)
        pos = labels.index(var)
        total += aggregate_score(pos, range(len(labels)), ex[:, None] - er)
        stage = np.column_stack([residual(zs[:, i], zs[:, pos]) for i in range(len(labels)) if i != pos])
        labels.pop(pos)
    return total


def test_three_chain_matches_brute_force(chain):
    z = standardize_values(chain(5, m=3).values)
    costs = {perm: _independence_cost(z, perm) for perm in itertools.permutations(range(3))}
    assert min(costs, key=costs.get) == (0, 1, 2)


@pytest.mark.slow
def test_chain_recovery_rates(chain):
    two = sum(causal_order_baseline(chain(s)).order == [0, 1] for s in range(100))
    three = sum(causal_order_baseline(chain(s, m=3)).order == [0, 1, 2] for s in range(100))
    assert two >= 90
    assert three >= 90


@pytest.mark.parametrize("m", [2, 3])
def test_matches_reference_directlingam(chain, m):
    for seed in range(5):
        x = chain(seed, m=m)
        reference = lingam.DirectLiNGAM(measure="pwling").fit(np.array(x.values))
        assert causal_order_baseline(x).order == list(reference.causal_order_)
