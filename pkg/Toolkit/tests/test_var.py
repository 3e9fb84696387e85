import numpy as np
import pytest
from statsmodels.tsa.api import VAR

from lookuplingam.core.var import fit_var, select_lag
from lookuplingam.errors import InsufficientSamples, SingularDesign
from lookuplingam.models.timeseries import DataMatrix


def test_univariate_ar1(var1):
    x = var1(0, np.array([[0.7]]))
    model = fit_var(DataMatrix.from_array(x), 1)
    assert abs(model.coefficients[0][0, 0] - 0.7) < 0.05


def test_white_noise_coefficients_near_zero(rng):
    model = fit_var(DataMatrix.from_array(rng.uniform(size=(10_000, 3))), 1)
    assert np.all(np.abs(model.coefficients[0]) < 0.05)


def test_bivariate_recovery(var1):
    coef = np.array([[0.5, 0.2], [0.0, 0.4]])
    model = fit_var(DataMatrix.from_array(var1(1, coef)), 1)
    np.testing.assert_allclose(model.coefficients[0], coef, atol=0.05)


@pytest.mark.slow
def test_trivariate_recovery_over_seeds(var1):
    coef = np.array([[0.4, 0.0, 0.2], [0.3, 0.3, 0.0], [0.0, -0.25, 0.5]])
    for seed in range(10):
        model = fit_var(DataMatrix.from_array(var1(seed, coef)), 1)
        np.testing.assert_allclose(model.coefficients[0], coef, atol=0.05)


def test_matches_statsmodels(var1):
    x = var1(2, np.array([[0.5, 0.1, 0.0], [0.2, 0.3, 0.1], [0.0, 0.2, 0.4]]), n=2000)
    ours = fit_var(DataMatrix.from_array(x), 2)
    theirs = VAR(x).fit(2, trend="c")
    np.testing.assert_allclose(np.stack(ours.coefficients), theirs.coefs, atol=1e-8)
    np.testing.assert_allclose(ours.intercept, theirs.intercept, atol=1e-8)


def test_residuals_orthogonal_to_regressors(var1):
    x = var1(3, np.array([[0.5, 0.2], [0.1, 0.4]]))
    model = fit_var(DataMatrix.from_array(x), 2)
    resid = model.residuals
    assert np.all(np.abs(resid.mean(axis=0)) < 1e-6)
    for tau in (1, 2):
        lagged = x[2 - tau : len(x) - tau]
        assert np.all(np.abs(lagged.T @ resid / len(resid)) < 1e-6)


def test_reconstruction(var1):
    x = var1(4, np.array([[0.5, 0.2], [0.1, 0.4]]), n=500)
    model = fit_var(DataMatrix.from_array(x), 1)
    np.testing.assert_allclose(model.fitted + model.residuals, x[1:], atol=1e-10)


def test_lag_zero_is_demeaned_data(rng):
    x = rng.uniform(size=(50, 2))
    model = fit_var(DataMatrix.from_array(x), 0)
    assert model.coefficients == []
    np.testing.assert_allclose(model.residuals, x - x.mean(axis=0), atol=1e-12)


def test_insufficient_samples(rng):
    with pytest.raises(InsufficientSamples):
        fit_var(DataMatrix.from_array(rng.uniform(size=(7, 3))), 2)


def test_singular_design(rng):
    col = rng.uniform(size=100)
    with pytest.raises(SingularDesign):
        fit_var(DataMatrix.from_array(np.column_stack([col, 2.0 * col])), 1)


def test_select_lag_single_candidate(rng):
    assert select_lag(DataMatrix.from_array(rng.uniform(size=(100, 2))), 1) == 1


@pytest.mark.slow
def test_select_lag_var1(var1):
    coef = np.array([[0.5, 0.2], [0.1, 0.4]])
    hits = sum(select_lag(DataMatrix.from_array(var1(s, coef)), 4) == 1 for s in range(50))
    assert hits >= 45


@pytest.mark.slow
def test_select_lag_var2():
    hits = 0
    for seed in range(20):
        gen = np.random.default_rng(seed)
        e = gen.uniform(-np.sqrt(3), np.sqrt(3), size=(10_200, 2))
        x = np.zeros_like(e)
        for t in range(2, len(e)):
            x[t] = 0.2 * x[t - 1] + np.array([[0.5, 0.0], [0.2, -0.5]]) @ x[t - 2] + e[t]
        hits += select_lag(DataMatrix.from_array(x[200:]), 4) == 2
    assert hits >= 18


def test_too_few_rows_after_dropping_lags(rng):
    # 8 samples pass n > p*m + 1 but leave 5 rows for 7 columns
    x = DataMatrix.from_array(rng.uniform(size=(8, 2)))
    with pytest.raises(InsufficientSamples):
        fit_var(x, 3)
    with pytest.raises(InsufficientSamples):
        select_lag(x, 3)
