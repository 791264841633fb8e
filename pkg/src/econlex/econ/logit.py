"""Logistic regression by damped Newton maximum likelihood."""

from __future__ import annotations

import warnings

import numpy as np
from scipy.special import expit

from .design import DesignMatrix
from .ols import qr_solve
from .results import FitResult


class ConvergenceError(RuntimeError):
    pass


class PerfectSeparationWarning(UserWarning):
    pass


def loglik(beta: np.ndarray, X: np.ndarray, y: np.ndarray) -> float:
    eta = X @ beta
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)))


def score(beta: np.ndarray, X: np.ndarray, y: np.ndarray) -> np.ndarray:
    return X.T @ (y - expit(X @ beta))


def information(beta: np.ndarray, X: np.ndarray) -> np.ndarray:
    p = expit(X @ beta)
    w = p * (1 - p)
    return X.T @ (X * w[:, None])


def logit_mle(
    design: DesignMatrix,
    max_iter: int = 100,
    gtol: float = 1e-8,
    ftol: float = 1e-12,
    separation_bound: float = 30.0,
) -> FitResult:
    """Fit P(y=1) = logistic(X beta) by maximum likelihood.

    Newton steps are halved until the log-likelihood does not decrease. Stops
    when max |gradient| < ``gtol`` or the relative log-likelihood change stays
    below ``ftol`` for two consecutive steps. An iterate that classifies every
    row correctly proves the maximum does not exist; this is reported as a
    :class:`PerfectSeparationWarning` with the last iterate.
    """
    X, y = design.X, design.y
    if not np.all((y == 0) | (y == 1)):
        raise ValueError("target must be binary (0/1)")
    if y.min() == y.max():
        raise ValueError("target has a single class")
    qr_solve(X, y)  # rank check

    beta = np.zeros(X.shape[1])
    ll = loglik(beta, X, y)
    converged = separated = False
    stalls = 0
    it = 0
    for it in range(1, max_iter + 1):
        grad = score(beta, X, y)
        if np.max(np.abs(grad)) < gtol:
            converged = True
            break
        H = information(beta, X)
        try:
            step = np.linalg.solve(H, grad)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(H, grad, rcond=None)[0]
        t = 1.0
        for _ in range(60):
            candidate = beta + t * step
            new_ll = loglik(candidate, X, y)
            # rounding noise in the log-likelihood must not block a full step near the optimum
            if new_ll >= ll - 64 * np.finfo(float).eps * max(abs(ll), 1.0):
                break
            t /= 2
        else:
            converged = True  # no ascent direction left at machine precision
            break
        change = abs(new_ll - ll) / max(abs(ll), 1e-300)
        beta, ll = candidate, new_ll
        eta = X @ beta
        if np.all(np.abs(eta) > separation_bound) and np.all((eta > 0) == (y == 1)):
            separated = True
            break
        stalls = stalls + 1 if change < ftol else 0
        if stalls >= 2:
            converged = True
            break

    eta = X @ beta
    if not separated and np.all(eta != 0) and np.all((eta > 0) == (y == 1)):
        separated = True

    if separated:
        warnings.warn(
            "perfect separation: coefficients diverge; returning the last iterate",
            PerfectSeparationWarning,
            stacklevel=2,
        )
    elif not converged:
        raise ConvergenceError(f"logistic fit did not converge in {max_iter} iterations")

    H = information(beta, X)
    try:
        cov = np.linalg.inv(H)
    except np.linalg.LinAlgError:
        cov = np.linalg.pinv(H)
    cov = (cov + cov.T) / 2
    return FitResult(
        model="logit",
        names=design.columns,
        params=beta,
        cov=cov,
        log_likelihood=ll,
        n_obs=X.shape[0],
        target=design.target,
        fitted=expit(X @ beta),
        converged=converged and not separated,
        iterations=it,
        info={"separated": separated, "max_abs_gradient": float(np.max(np.abs(score(beta, X, y))))},
    )


def predict_proba(fit: FitResult, X: np.ndarray) -> np.ndarray:
    return expit(X @ fit.params)
