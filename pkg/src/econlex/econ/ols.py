"""Least squares with heteroskedasticity and autocorrelation consistent errors."""

from __future__ import annotations

import math

import numpy as np

from .design import DesignMatrix
from .results import FitResult


class RankError(np.linalg.LinAlgError):
    pass


def auto_bandwidth(n: int) -> int:
    return int(math.floor(4 * (n / 100) ** (2 / 9)))


def qr_solve(X: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Least-squares solution via QR; returns ``(beta, R)``.

    Raises :class:`RankError` when a diagonal entry of R falls below
    ``n * eps * max column norm``.
    """
    n, k = X.shape
    if n <= k:
        raise RankError(f"need more observations than regressors (n={n}, k={k})")
    Q, R = np.linalg.qr(X, mode="reduced")
    tol = n * np.finfo(float).eps * np.linalg.norm(X, axis=0).max()
    if np.any(np.abs(np.diag(R)) <= tol):
        raise RankError("design matrix is rank deficient")
    beta = np.linalg.solve(R, Q.T @ y)
    return beta, R


def bartlett_weights(bandwidth: int) -> np.ndarray:
    j = np.arange(bandwidth + 1)
    return 1.0 - j / (bandwidth + 1)


def hac_meat(X: np.ndarray, resid: np.ndarray, bandwidth: int) -> np.ndarray:
    scores = X * resid[:, None]
    S = scores.T @ scores
    for j, w in enumerate(bartlett_weights(bandwidth)[1:], start=1):
        gamma = scores[j:].T @ scores[:-j]
        S += w * (gamma + gamma.T)
    return S


def ols_newey_west(design: DesignMatrix, bandwidth: int | str | None = "auto") -> FitResult:
    """OLS coefficients with a Newey-West (Bartlett kernel) sandwich covariance.

    ``bandwidth`` is the number of autocovariance lags; ``"auto"`` (or None)
    uses ``floor(4 (n/100)^(2/9))``. Bandwidth 0 gives White's HC0 covariance.
    No small-sample degrees-of-freedom correction is applied.
    """
    X, y = design.X, design.y
    n, k = X.shape
    beta, R = qr_solve(X, y)
    if bandwidth in (None, "auto"):
        bandwidth = auto_bandwidth(n)
    bandwidth = int(bandwidth)
    if bandwidth < 0:
        raise ValueError("bandwidth must be non-negative")

    fitted = X @ beta
    resid = y - fitted
    R_inv = np.linalg.solve(R, np.eye(k))
    bread = R_inv @ R_inv.T  # (X'X)^-1
    cov = bread @ hac_meat(X, resid, bandwidth) @ bread
    cov = (cov + cov.T) / 2

    ssr = float(resid @ resid)
    centered = y - y.mean()
    tss = float(centered @ centered)
    has_const = np.any(np.all(X == X[0], axis=0))
    if not has_const:
        tss = float(y @ y)
    r2 = 1 - ssr / tss
    df_model = k - 1 if has_const else k
    adj_r2 = 1 - (n - (1 if has_const else 0)) / (n - df_model - (1 if has_const else 0)) * (1 - r2)
    loglik = -n / 2 * (math.log(2 * math.pi) + math.log(ssr / n) + 1)

    return FitResult(
        model="ols",
        names=design.columns,
        params=beta,
        cov=cov,
        log_likelihood=loglik,
        n_obs=n,
        target=design.target,
        r2=r2,
        adj_r2=adj_r2,
        residuals=resid,
        fitted=fitted,
        info={"cov_type": "newey-west", "bandwidth": bandwidth},
    )


def white_covariance(X: np.ndarray, resid: np.ndarray) -> np.ndarray:
    """HC0 sandwich covariance."""
    bread = np.linalg.inv(X.T @ X)
    meat = np.einsum("ti,tj,t->ij", X, X, resid**2)
    return bread @ meat @ bread
