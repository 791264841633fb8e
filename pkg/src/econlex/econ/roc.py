"""ROC curves, AUC and the paired DeLong comparison of two AUCs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats
from scipy.stats import rankdata


def _check(scores, labels) -> tuple[np.ndarray, np.ndarray]:
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels)
    if scores.shape != labels.shape or scores.ndim != 1:
        raise ValueError("scores and labels must be 1-d arrays of equal length")
    if not np.all((labels == 0) | (labels == 1)):
        raise ValueError("labels must be 0/1")
    labels = labels.astype(bool)
    if labels.all() or not labels.any():
        raise ValueError("both classes must be present")
    return scores, labels


@dataclass(frozen=True)
class RocResult:
    auc: float
    thresholds: np.ndarray
    tpr: np.ndarray
    fpr: np.ndarray
    variance: float
    n_pos: int
    n_neg: int


def _structural_components(scores: np.ndarray, labels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """DeLong placement values for positives (V10) and negatives (V01)."""
    pos, neg = scores[labels], scores[~labels]
    m, n = len(pos), len(neg)
    r_all = rankdata(np.concatenate([pos, neg]))
    r_pos = rankdata(pos)
    r_neg = rankdata(neg)
    v10 = (r_all[:m] - r_pos) / n
    v01 = 1.0 - (r_all[m:] - r_neg) / m
    return v10, v01


def roc_auc(scores, labels) -> RocResult:
    """ROC curve and AUC, where the AUC counts ties between classes as one half.

    The trapezoid is accumulated on integer counts, so the area equals the
    Mann-Whitney pair statistic exactly.
    """
    scores, labels = _check(scores, labels)
    order = np.argsort(-scores, kind="mergesort")
    s, lab = scores[order], labels[order]
    distinct = np.r_[np.nonzero(np.diff(s))[0], len(s) - 1]
    tp = np.r_[0, np.cumsum(lab)[distinct]].astype(np.int64)
    fp = np.r_[0, np.cumsum(~lab)[distinct]].astype(np.int64)
    n_pos, n_neg = int(tp[-1]), int(fp[-1])
    twice_area = int(np.sum(np.diff(fp) * (tp[1:] + tp[:-1])))
    auc = twice_area / (2 * n_pos * n_neg)

    v10, v01 = _structural_components(scores, labels)
    var = np.var(v10, ddof=1) / n_pos + np.var(v01, ddof=1) / n_neg
    return RocResult(
        auc=auc,
        thresholds=np.r_[np.inf, s[distinct]],
        tpr=tp / n_pos,
        fpr=fp / n_neg,
        variance=float(var),
        n_pos=n_pos,
        n_neg=n_neg,
    )


@dataclass(frozen=True)
class AucComparison:
    auc_a: float
    auc_b: float
    p_value: float
    z: float
    variance: float
    method: str = "delong"
    degenerate: bool = False


def _one_sided(diff: float, var: float) -> tuple[float, float, bool]:
    if diff == 0:
        return 0.5, 0.0, var <= 0
    if var <= 0:
        return (1.0, np.inf, True) if diff > 0 else (0.0, -np.inf, True)
    z = diff / np.sqrt(var)
    return float(stats.norm.cdf(z)), float(z), False


def auc_compare(
    scores_a,
    scores_b,
    labels,
    method: str = "delong",
    n_boot: int = 10_000,
    seed: int | None = 0,
) -> AucComparison:
    """One-sided test of H0: AUC_a >= AUC_b against H1: AUC_a < AUC_b.

    Returns ``P(Z < z)`` with ``z = (AUC_a - AUC_b) / sd``; small values reject
    the null. ``method="bootstrap"`` instead reports the share of stratified
    paired resamples with ``AUC_a > AUC_b`` (ties count one half).
    Equal AUCs give p = 0.5; a zero variance with unequal AUCs gives 0 or 1.
    """
    a, labels_a = _check(scores_a, labels)
    b, _ = _check(scores_b, labels)
    if method == "delong":
        v10a, v01a = _structural_components(a, labels_a)
        v10b, v01b = _structural_components(b, labels_a)
        auc_a, auc_b = v10a.mean(), v10b.mean()
        m, n = len(v10a), len(v01a)
        if np.array_equal(a, b):
            return AucComparison(auc_a, auc_b, 0.5, 0.0, 0.0, method, True)
        s10 = np.cov(np.vstack([v10a, v10b]))
        s01 = np.cov(np.vstack([v01a, v01b]))
        S = s10 / m + s01 / n
        var = float(S[0, 0] + S[1, 1] - 2 * S[0, 1])
        p, z, degenerate = _one_sided(auc_a - auc_b, var)
        return AucComparison(float(auc_a), float(auc_b), p, z, var, method, degenerate)
    if method == "bootstrap":
        return _bootstrap(a, b, labels_a, n_boot, seed)
    raise ValueError(f"unknown method {method!r}")


def _bootstrap(a, b, labels, n_boot, seed) -> AucComparison:
    rng = np.random.default_rng(seed)
    pos_idx, neg_idx = np.flatnonzero(labels), np.flatnonzero(~labels)
    auc_a = roc_auc(a, labels).auc
    auc_b = roc_auc(b, labels).auc
    if np.array_equal(a, b):
        return AucComparison(auc_a, auc_b, 0.5, 0.0, 0.0, "bootstrap", True)
    diffs = np.empty(n_boot)
    for i in range(n_boot):
        idx = np.r_[rng.choice(pos_idx, len(pos_idx)), rng.choice(neg_idx, len(neg_idx))]
        v10a, _ = _structural_components(a[idx], labels[idx])
        v10b, _ = _structural_components(b[idx], labels[idx])
        diffs[i] = v10a.mean() - v10b.mean()
    p = float(np.mean(diffs > 0) + 0.5 * np.mean(diffs == 0))
    var = float(np.var(diffs, ddof=1))
    z = (auc_a - auc_b) / np.sqrt(var) if var > 0 else 0.0
    return AucComparison(auc_a, auc_b, p, float(z), var, "bootstrap", var == 0)
