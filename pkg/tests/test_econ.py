import math
import time

import numpy as np
import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import synthetic_lexicon, synthetic_records
from econlex.econ import (
    DesignMatrix,
    PerfectSeparationWarning,
    RankError,
    auc_compare,
    auto_bandwidth,
    build_design,
    delta_ep_decomposition,
    logit_mle,
    ols_newey_west,
    render_table,
    roc_auc,
)
from econlex.econ.ols import white_covariance
from econlex.econ.logit import loglik, score
from econlex.lexicon import Lexicon, modify_disagree
from econlex.sentiment import ep_series
from oracles import (
    irls_logit,
    newey_west_loop,
    normal_equations,
    pair_auc,
    pair_count_auc,
    paired_bootstrap_p,
    white_cov_loop,
)


def monthly(values, start="2000-01"):
    idx = [p.strftime("%Y-%m") for p in pd.period_range(start, periods=len(values), freq="M")]
    return pd.Series(np.asarray(values, float), index=idx)


def design(X, y, names=None):
    X = np.asarray(X, float)
    names = names or tuple(f"x{i}" for i in range(X.shape[1]))
    return DesignMatrix(X, np.asarray(y, float), tuple(names), tuple(str(i) for i in range(len(y))))


# design matrices


def test_build_design_ar_rows():
    d = build_design({"y": monthly(np.arange(100))}, "y", ar_lags=2)
    assert d.n_obs == 98 and d.columns == ("const", "y_lag1", "y_lag2")
    np.testing.assert_array_equal(d.X[0], [1, 1, 0])
    assert d.y[0] == 2 and d.index[0] == "2000-03"


def test_build_design_horizon_arithmetic():
    s = {"y": monthly(np.arange(494.0)), "x": monthly(np.arange(494.0) * 2)}
    d = build_design(s, "y", horizon=3, regressors=["x"])
    assert d.n_obs == 491 and d.target == "y_lead3"
    np.testing.assert_array_equal(d.y - d.column("x") / 2, 3)


def test_build_design_respects_gaps():
    s = monthly([1.0, 2.0, 3.0, 4.0, 5.0]).drop("2000-03")
    d = build_design({"y": s}, "y", ar_lags=1)
    assert d.index == ("2000-02", "2000-05")
    with pytest.raises(KeyError):
        build_design({"y": s}, "y", regressors=["z"])


# OLS / Newey-West


X10 = np.column_stack([np.ones(10), np.arange(1, 11)])
Y10 = np.array([2, 4, 5, 4, 5, 7, 8, 9, 10, 12], float)


def test_ols_hand_solved_fixture():
    fit = ols_newey_west(design(X10, Y10, ("const", "x")), bandwidth=0)
    # solved by hand: slope = Sxy/Sxx = 83/82.5, intercept = 6.6 - slope*5.5
    np.testing.assert_allclose(fit.params, [16 / 15, 166 / 165], rtol=0, atol=1e-10)
    np.testing.assert_allclose(fit.params, normal_equations(X10, Y10), rtol=0, atol=1e-10)


def _random_regression(seed, n=120, k=3):
    rng = np.random.default_rng(seed)
    X = np.column_stack([np.ones(n), rng.normal(size=(n, k - 1))])
    e = np.zeros(n)
    for t in range(1, n):
        e[t] = 0.5 * e[t - 1] + rng.normal() * (1 + abs(X[t, 1]))
    return X, X @ np.arange(1, k + 1) + e


@pytest.mark.parametrize("seed", range(3))
def test_bandwidth_zero_is_white(seed):
    X, y = _random_regression(seed)
    fit = ols_newey_west(design(X, y), bandwidth=0)
    white = white_cov_loop(X, fit.residuals)
    assert np.max(np.abs(fit.cov - white)) < 1e-12
    assert np.max(np.abs(white_covariance(X, fit.residuals) - white)) < 1e-12


@pytest.mark.parametrize("L", [1, 4, 9])
def test_newey_west_matches_loop_and_statsmodels(L):
    sm = pytest.importorskip("statsmodels.api")
    X, y = _random_regression(L)
    fit = ols_newey_west(design(X, y), bandwidth=L)
    np.testing.assert_allclose(fit.cov, newey_west_loop(X, fit.residuals, L), rtol=1e-10, atol=1e-14)
    ref = sm.OLS(y, X).fit(cov_type="HAC", cov_kwds={"maxlags": L, "use_correction": False})
    np.testing.assert_allclose(fit.params, ref.params, rtol=1e-10)
    np.testing.assert_allclose(fit.cov, ref.cov_params(), rtol=1e-8)
    assert fit.r2 == pytest.approx(ref.rsquared, rel=1e-10)
    assert fit.log_likelihood == pytest.approx(ref.llf, rel=1e-10)


def test_auto_bandwidth():
    assert [auto_bandwidth(n) for n in (50, 100, 491, 1000)] == [3, 4, 5, 6]
    fit = ols_newey_west(design(*_random_regression(0)))
    assert fit.info["bandwidth"] == auto_bandwidth(120)


@given(st.integers(0, 10_000), st.integers(0, 6))
@settings(max_examples=25, deadline=None)
def test_ols_properties(seed, L):
    X, y = _random_regression(seed, n=60)
    fit = ols_newey_west(design(X, y), bandwidth=L)
    scale = np.abs(X).max() * np.abs(y).max() * len(y)
    assert np.max(np.abs(X.T @ fit.residuals)) < 1e-8 * scale
    np.testing.assert_array_equal(fit.cov, fit.cov.T)
    assert np.linalg.eigvalsh(fit.cov).min() > -1e-12 * np.abs(fit.cov).max()
    assert fit.aic == pytest.approx(2 * fit.k - 2 * fit.log_likelihood)


def test_ols_recovers_slope():
    rng = np.random.default_rng(1)
    x = rng.normal(size=5000)
    fit = ols_newey_west(design(np.column_stack([np.ones_like(x), x]), 2 * x + rng.normal(0, 0.1, x.size)))
    assert abs(fit.params[1] - 2) < 0.01


def test_rank_deficient():
    X = np.column_stack([np.ones(10), np.arange(10), 2 * np.arange(10)])
    with pytest.raises(RankError):
        ols_newey_west(design(X, np.arange(10)))


# logistic MLE


def test_logit_intercept_only():
    y = np.array([1] * 3 + [0] * 7, float)
    fit = logit_mle(design(np.ones((10, 1)), y))
    assert abs(fit.params[0] - math.log(3 / 7)) < 1e-8
    y = np.r_[np.ones(30), np.zeros(70)]
    assert abs(logit_mle(design(np.ones((100, 1)), y)).params[0] - math.log(3 / 7)) < 1e-8


def _logit_fixture():
    rng = np.random.default_rng(42)
    X = np.column_stack([np.ones(20), rng.normal(size=20), rng.normal(size=20)])
    y = (rng.random(20) < 1 / (1 + np.exp(-(X @ [0.2, 1.0, -0.7])))).astype(float)
    return X, y


def test_logit_matches_irls_oracle():
    X, y = _logit_fixture()
    fit = logit_mle(design(X, y))
    beta, ll = irls_logit(X, y)
    assert abs(fit.log_likelihood - ll) < 1e-6
    np.testing.assert_allclose(fit.params, beta, atol=1e-6)
    assert np.max(np.abs(X.T @ (y - fit.fitted))) < 1e-6
    assert fit.aic == pytest.approx(2 * 3 - 2 * fit.log_likelihood)


def test_logit_matches_statsmodels():
    sm = pytest.importorskip("statsmodels.api")
    X, y = _logit_fixture()
    fit = logit_mle(design(X, y))
    ref = sm.Logit(y, X).fit(disp=0)
    np.testing.assert_allclose(fit.params, ref.params, rtol=1e-6)
    np.testing.assert_allclose(fit.cov, ref.cov_params(), rtol=1e-5)


def test_gradient_matches_finite_differences():
    X, y = _logit_fixture()
    rng = np.random.default_rng(9)
    for _ in range(5):
        beta = rng.normal(size=3)
        h = 1e-5
        numeric = np.array([(loglik(beta + h * e, X, y) - loglik(beta - h * e, X, y)) / (2 * h) for e in np.eye(3)])
        analytic = score(beta, X, y)
        assert np.max(np.abs(numeric - analytic) / np.maximum(np.abs(analytic), 1e-8)) < 1e-6


def test_logit_coin_flip_slope_near_zero():
    rng = np.random.default_rng(3)
    x = rng.normal(size=2000)
    y = (rng.random(2000) < 0.5).astype(float)
    fit = logit_mle(design(np.column_stack([np.ones_like(x), x]), y))
    assert abs(fit.params[1]) < 3 * fit.bse[1]


def test_logit_separation_warns():
    x = np.arange(-5, 5, dtype=float)
    y = (x > 0).astype(float)
    with pytest.warns(PerfectSeparationWarning):
        fit = logit_mle(design(np.column_stack([np.ones_like(x), x]), y))
    assert not fit.converged


def test_logit_rejects_bad_targets():
    with pytest.raises(ValueError, match="binary"):
        logit_mle(design(np.ones((3, 1)), [0, 2, 1]))
    with pytest.raises(ValueError, match="single class"):
        logit_mle(design(np.ones((3, 1)), [1, 1, 1]))


def test_render_table():
    X, y = _logit_fixture()
    text = render_table([logit_mle(design(X, y, ("const", "ep", "spread")))], title="h=3")
    assert "ep" in text and "AIC" in text and "(" in text


# AUC


def _fixtures(n_fixtures=40):
    rng = np.random.default_rng(123)
    for i in range(n_fixtures):
        n = int(rng.integers(4, 201))
        labels = rng.integers(0, 2, n)
        labels[:2] = [0, 1]
        scores = np.round(rng.normal(size=n) + labels * rng.random(), int(rng.integers(0, 3)))
        yield scores, labels


def test_auc_equals_pair_count_exactly():
    for scores, labels in _fixtures():
        res = roc_auc(scores, labels)
        conc, ties, total = pair_count_auc(scores, labels)
        assert res.auc == pair_auc(scores, labels)


def test_auc_curve_properties():
    for scores, labels in _fixtures(10):
        res = roc_auc(scores, labels)
        assert np.all(np.diff(res.tpr) >= 0) and np.all(np.diff(res.fpr) >= 0)
        assert res.auc == pytest.approx(np.trapezoid(res.tpr, res.fpr), abs=1e-12)


def test_auc_matches_sklearn():
    metrics = pytest.importorskip("sklearn.metrics")
    for scores, labels in _fixtures(10):
        assert roc_auc(scores, labels).auc == pytest.approx(metrics.roc_auc_score(labels, scores), abs=1e-12)


def test_auc_monotone_invariance():
    rng = np.random.default_rng(8)
    scores, labels = rng.normal(size=150), rng.integers(0, 2, 150)
    base = roc_auc(scores, labels).auc
    transforms = [np.exp, np.arctan, lambda s: s**3, lambda s: 5 * s - 2, lambda s: np.tanh(s / 3)]
    for i in range(10):
        a, b = rng.uniform(0.1, 3), rng.normal()
        f = transforms[i % len(transforms)]
        assert roc_auc(a * f(scores) + b, labels).auc == base


def test_auc_compare_identical():
    rng = np.random.default_rng(0)
    s, labels = rng.normal(size=50), rng.integers(0, 2, 50)
    assert auc_compare(s, s, labels).p_value == 0.5
    assert auc_compare(s, s, labels, method="bootstrap", n_boot=50).p_value == 0.5


def test_auc_compare_extremes():
    labels = np.array([0] * 20 + [1] * 20)
    good = np.arange(40.0)
    bad = -good
    rng = np.random.default_rng(1)
    noisy = good + rng.normal(0, 15, 40)
    assert auc_compare(good, noisy, labels).p_value > 0.95
    assert auc_compare(bad, noisy, labels).p_value < 1e-6
    assert auc_compare(good, bad, labels).p_value == 1.0


def test_delong_variance_against_loop():
    rng = np.random.default_rng(2)
    labels = rng.integers(0, 2, 60)
    s = rng.normal(size=60) + labels
    pos, neg = s[labels == 1], s[labels == 0]
    psi = lambda a, b: 1.0 if a > b else 0.5 if a == b else 0.0
    v10 = np.array([np.mean([psi(p, q) for q in neg]) for p in pos])
    v01 = np.array([np.mean([psi(p, q) for p in pos]) for q in neg])
    expected = v10.var(ddof=1) / len(pos) + v01.var(ddof=1) / len(neg)
    assert roc_auc(s, labels).variance == pytest.approx(expected, rel=1e-12)


def _simulation(n=500, seed=2024):
    rng = np.random.default_rng(seed)
    labels = (rng.random(n) < 0.3).astype(int)
    common = rng.normal(size=n)
    a = 0.8 * labels + common + 0.8 * rng.normal(size=n)
    b = 0.8 * labels + common + 0.8 * rng.normal(size=n)
    return a, b, labels


def test_delong_close_to_bootstrap():
    a, b, labels = _simulation()
    t0 = time.perf_counter()
    delong = auc_compare(a, b, labels).p_value
    boot = paired_bootstrap_p(a, b, labels, n_boot=10_000, seed=7)
    assert time.perf_counter() - t0 < 30
    assert 0.01 < delong < 0.99
    assert abs(delong - boot) < 0.02
    lib_boot = auc_compare(a, b, labels, method="bootstrap", n_boot=2000, seed=1).p_value
    assert abs(lib_boot - boot) < 0.03


# decomposition


def test_decomposition_identity():
    records = synthetic_records()
    base = synthetic_lexicon()
    ref = Lexicon("REF", {"fell": 0.4, "rose": -0.3, "flat": -0.5, "prices": 0.2, "boom": 0.9})
    for mode in ("categorical", "fine"):
        dec = delta_ep_decomposition(records, base, ref, mode)
        direct = ep_series(records, modify_disagree(base, ref), mode).values - ep_series(records, base, mode).values
        assert np.max(np.abs(dec.delta_disagree.values - direct)) < 1e-12
        assert np.max(np.abs(dec.disagree.values - (dec.base.values + dec.delta_disagree.values))) < 1e-12
        same = delta_ep_decomposition(records, base, base, mode)
        assert (same.delta_disagree.values == 0).all() and (same.delta_only.values == 0).all()
    assert list(dec.frame().columns) == ["ep", "delta_disagree", "delta_only"]


def test_decomposition_single_flip_hand_value():
    import datetime as dt

    from econlex.corpus import SentenceRecord

    recs = [SentenceRecord("a", dt.date(2000, 1, 1), ("growth", "fell", "fell", "x"), "")]
    dec = delta_ep_decomposition(recs, Lexicon("B", {"fell": 0.5}), Lexicon("R", {"fell": -0.5, "x": -1.0}), "fine")
    # base EP = -(2*0.5)/4; flipped EP = -(2*-0.5)/4; delta = 0.5
    assert dec.delta_disagree.values.iloc[0] == pytest.approx(0.5, abs=1e-15)
    # adding x=-1 to the base: EP = -(0.5 + 0.5 - 1)/4 = 0, delta = 0.25
    assert dec.delta_only.values.iloc[0] == pytest.approx(0.25, abs=1e-15)
