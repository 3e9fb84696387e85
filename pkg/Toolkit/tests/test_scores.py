import lingam
import numpy as np

from lookuplingam.core.entropy import score_table
from lookuplingam.core.standardize import standardize_values
from lookuplingam.ordering.scores import aggregate_score, aggregate_scores, select_next


def test_single_variable_scores_zero():
    T = np.array([[np.nan]])
    assert aggregate_score(0, [0], T) == 0.0
    assert select_next(T, [0]) == 0


def test_dominating_variable_scores_zero():
    # T[j, 0] >= T[0, j] for every j
    T = np.array([[0.0, 0.1, 0.2], [0.3, 0.0, 0.5], [0.4, 0.1, 0.0]])
    assert aggregate_score(0, [0, 1, 2], T) == 0.0


def test_hand_computed_score():
    T = np.array([[0.0, 0.5], [0.2, 0.0]])
    # M_0 = min(0, 0.2 - 0.5)^2, M_1 = min(0, 0.5 - 0.2)^2
    assert aggregate_score(0, [0, 1], T) == (0.2 - 0.5) ** 2
    assert aggregate_score(1, [0, 1], T) == 0.0
    assert select_next(T, [0, 1]) == 1


def test_vectorised_matches_scalar(rng):
    T = rng.normal(size=(6, 6))
    U = [0, 2, 3, 5]
    np.testing.assert_allclose(aggregate_scores(T, U), [aggregate_score(i, U, T) for i in U])


def test_ties_go_to_smallest_index():
    T = np.zeros((4, 4))
    assert select_next(T, [1, 2, 3]) == 1


def test_true_cause_scores_lower(chain):
    z = standardize_values(chain(7).values)
    ex, er = score_table(z)
    T = ex[:, None] - er
    assert aggregate_score(0, [0, 1], T) < aggregate_score(1, [0, 1], T)


def test_selected_root_matches_reference_directlingam(chain):
    x = chain(11, m=3)
    z = standardize_values(x.values)
    ex, er = score_table(z)
    reference = lingam.DirectLiNGAM(measure="pwling").fit(np.array(x.values))
    assert select_next(ex[:, None] - er, [0, 1, 2]) == reference.causal_order_[0]
