from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy import stats


@dataclass
class FitResult:
    """Estimates from an OLS or logistic fit."""

    model: str
    names: tuple[str, ...]
    params: np.ndarray
    cov: np.ndarray
    log_likelihood: float
    n_obs: int
    target: str = "y"
    r2: float | None = None
    adj_r2: float | None = None
    residuals: np.ndarray | None = field(default=None, repr=False)
    fitted: np.ndarray | None = field(default=None, repr=False)
    converged: bool = True
    iterations: int = 0
    info: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.params)

    @property
    def aic(self) -> float:
        return 2 * self.k - 2 * self.log_likelihood

    @property
    def bse(self) -> np.ndarray:
        return np.sqrt(np.diag(self.cov))

    @property
    def tvalues(self) -> np.ndarray:
        return self.params / self.bse

    @property
    def pvalues(self) -> np.ndarray:
        # normal reference distribution for both HAC-OLS and MLE
        return 2 * stats.norm.sf(np.abs(self.tvalues))

    @property
    def coefficients(self) -> dict[str, float]:
        return dict(zip(self.names, map(float, self.params)))

    def to_dict(self) -> dict:
        out = {
            "model": self.model,
            "target": self.target,
            "n_obs": self.n_obs,
            "coefficients": self.coefficients,
            "std_errors": dict(zip(self.names, map(float, self.bse))),
            "p_values": dict(zip(self.names, map(float, self.pvalues))),
            "covariance": [[float(v) for v in row] for row in self.cov],
            "log_likelihood": float(self.log_likelihood),
            "aic": float(self.aic),
            "converged": self.converged,
        }
        if self.r2 is not None:
            out["r2"] = float(self.r2)
            out["adj_r2"] = float(self.adj_r2)
        out.update(self.info)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _stars(p: float) -> str:
    return "***" if p < 0.01 else "**" if p < 0.05 else "*" if p < 0.10 else ""


def render_table(fits: list[FitResult], rows: list[str] | None = None, title: str = "") -> str:
    """Aligned text table: coefficients with stars, standard errors in parentheses."""
    if rows is None:
        rows = []
        for fit in fits:
            rows.extend(n for n in fit.names if n not in rows)
    cells: list[list[str]] = []
    for name in rows:
        coef_row, se_row = [name], [""]
        for fit in fits:
            if name in fit.names:
                i = fit.names.index(name)
                coef_row.append(f"{fit.params[i]:.3f}{_stars(fit.pvalues[i])}")
                se_row.append(f"({fit.bse[i]:.3f})")
            else:
                coef_row.append("")
                se_row.append("")
        cells += [coef_row, se_row]
    footer = [["Obs."] + [str(f.n_obs) for f in fits]]
    if all(f.r2 is not None for f in fits):
        footer.append(["R2"] + [f"{f.r2:.3f}" for f in fits])
        footer.append(["adj. R2"] + [f"{f.adj_r2:.3f}" for f in fits])
    else:
        footer.append(["Log Lik."] + [f"{f.log_likelihood:.3f}" for f in fits])
        footer.append(["AIC"] + [f"{f.aic:.3f}" for f in fits])
    all_rows = cells + footer
    widths = [max(len(r[j]) for r in all_rows) for j in range(len(fits) + 1)]

    def fmt(r):
        return "  ".join([r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])])

    rule = "-" * len(fmt(all_rows[0]))
    lines = ([title] if title else []) + [rule]
    lines += [fmt(r) for r in cells] + [rule] + [fmt(r) for r in footer] + [rule]
    lines.append("*** 1%, ** 5%, * 10% significance")
    return "\n".join(lines)
