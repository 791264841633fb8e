"""Time-aligned design matrices for autoregressive and forecasting models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class DesignMatrix:
    X: np.ndarray
    y: np.ndarray
    columns: tuple[str, ...]
    index: tuple[str, ...]
    target: str = "y"

    @property
    def n_obs(self) -> int:
        return self.X.shape[0]

    @property
    def k(self) -> int:
        return self.X.shape[1]

    def column(self, name: str) -> np.ndarray:
        return self.X[:, self.columns.index(name)]

    def select(self, names: Sequence[str]) -> "DesignMatrix":
        idx = [self.columns.index(n) for n in names]
        return DesignMatrix(self.X[:, idx], self.y, tuple(names), self.index, self.target)


def _monthly(series: pd.Series) -> pd.Series:
    idx = pd.PeriodIndex(series.index.astype(str), freq="M")
    out = pd.Series(np.asarray(series, dtype=float), index=idx)
    if out.index.duplicated().any():
        raise ValueError("duplicate months in series")
    return out.sort_index()


def build_design(
    series: Mapping[str, pd.Series],
    target: str,
    ar_lags: int = 0,
    horizon: int = 0,
    regressors: Sequence[str] = (),
    intercept: bool = True,
) -> DesignMatrix:
    """Stack the target led by ``horizon`` against its own lags and regressors dated t.

    ``series`` maps names to monthly Series indexed by ``YYYY-MM`` keys (or
    Periods). Rows are kept only where every lag, lead and regressor value
    exists; gaps in the calendar are respected when lagging.
    """
    if ar_lags < 0 or horizon < 0:
        raise ValueError("ar_lags and horizon must be non-negative")
    missing = [n for n in (target, *regressors) if n not in series]
    if missing:
        raise KeyError(f"unknown series {missing}")

    monthly = {name: _monthly(series[name]) for name in {target, *regressors}}
    start = min(s.index.min() for s in monthly.values())
    end = max(s.index.max() for s in monthly.values())
    calendar = pd.period_range(start, end, freq="M")
    frame = pd.DataFrame({name: s.reindex(calendar) for name, s in monthly.items()}, index=calendar)

    cols: dict[str, pd.Series] = {}
    if intercept:
        cols["const"] = pd.Series(1.0, index=calendar)
    for lag in range(1, ar_lags + 1):
        cols[f"{target}_lag{lag}"] = frame[target].shift(lag)
    for name in regressors:
        cols[name] = frame[name]
    lhs = frame[target].shift(-horizon)
    data = pd.DataFrame(cols)
    data["__y__"] = lhs
    data = data.dropna()
    if data.empty:
        raise ValueError("no rows left after lagging and aligning the series")

    y_name = target if horizon == 0 else f"{target}_lead{horizon}"
    return DesignMatrix(
        X=data.drop(columns="__y__").to_numpy(float),
        y=data["__y__"].to_numpy(float),
        columns=tuple(c for c in data.columns if c != "__y__"),
        index=tuple(p.strftime("%Y-%m") for p in data.index),
        target=y_name,
    )
