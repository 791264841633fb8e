"""Sentence scoring and the economic pessimism time series."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

import numpy as np
import pandas as pd

from .corpus import SentenceRecord, period_key
from .lexicon import Granularity, Lexicon, to_categorical


@dataclass(frozen=True)
class SentenceScore:
    sentence_ref: str
    pos_count: int
    neg_count: int
    sum_score: float
    matches: tuple[str, ...] = field(default=(), repr=False)

    @property
    def count_score(self) -> int:
        return self.pos_count - self.neg_count


def match_terms(tokens: tuple[str, ...] | list[str], lex: Lexicon) -> list[str]:
    """Lexicon terms found in ``tokens``, scanning left to right, bigrams first."""
    has_bigrams = bool(lex.bigrams)
    found = []
    i, n = 0, len(tokens)
    while i < n:
        if has_bigrams and i + 1 < n:
            pair = f"{tokens[i]} {tokens[i + 1]}"
            if pair in lex.entries:
                found.append(pair)
                i += 2
                continue
        if tokens[i] in lex.entries:
            found.append(tokens[i])
        i += 1
    return found


def score_sentence(record: SentenceRecord, lex: Lexicon) -> SentenceScore:
    matches = match_terms(record.tokens, lex)
    scores = [lex.entries[m] for m in matches]
    return SentenceScore(
        sentence_ref=record.doc_id,
        pos_count=sum(1 for s in scores if s > 0),
        neg_count=sum(1 for s in scores if s < 0),
        sum_score=math.fsum(scores),
        matches=tuple(matches),
    )


def _full_index(keys, freq: str) -> pd.Index:
    if freq == "monthly":
        periods = pd.PeriodIndex(sorted(keys), freq="M")
        rng = pd.period_range(periods.min(), periods.max(), freq="M")
        return pd.Index([p.strftime("%Y-%m") for p in rng], name="month")
    periods = pd.PeriodIndex(sorted(keys), freq="D")
    rng = pd.period_range(periods.min(), periods.max(), freq="D")
    return pd.Index([p.strftime("%Y-%m-%d") for p in rng], name="date")


@dataclass(frozen=True)
class EpSeries:
    """Economic pessimism per period; missing periods are NaN."""

    lexicon_name: str
    values: pd.Series
    mode: str = "categorical"
    freq: str = "monthly"
    standardized: bool = False
    smoothing_window: int = 1
    transforms: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.values)

    @property
    def missing(self) -> list[str]:
        return list(self.values.index[self.values.isna()])

    def to_csv(self, path) -> None:
        label = "month" if self.freq == "monthly" else "date"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(f"{label},value\n")
            for key, value in self.values.items():
                fh.write(f"{key},{'' if np.isnan(value) else repr(float(value))}\n")

    def metadata(self) -> dict:
        return {
            "lexicon": self.lexicon_name,
            "mode": self.mode,
            "freq": self.freq,
            "standardized": self.standardized,
            "smoothing_window": self.smoothing_window,
            "transforms": list(self.transforms),
            "missing": self.missing,
        }

    def write(self, path) -> None:
        """Write the CSV and a ``.json`` metadata sidecar next to it."""
        self.to_csv(path)
        with open(f"{path}.json", "w", encoding="utf-8") as fh:
            json.dump(self.metadata(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def period_sums(
    records: Iterable[SentenceRecord], lex: Lexicon, freq: str = "monthly"
) -> dict[str, tuple[float, int]]:
    """Per-period ``(sum of matched scores, token count)``; mergeable across workers."""
    acc: dict[str, list] = {}
    for rec in records:
        key = period_key(rec.date, freq)
        slot = acc.setdefault(key, [[], 0])
        slot[0].extend(lex.entries[m] for m in match_terms(rec.tokens, lex))
        slot[1] += len(rec.tokens)
    return {k: (math.fsum(v[0]), v[1]) for k, v in acc.items()}


def merge_sums(*parts: Mapping[str, tuple[float, int]]) -> dict[str, tuple[float, int]]:
    # keep the per-part sums so the merged total does not depend on part order
    pieces: dict[str, list] = {}
    for part in parts:
        for key, (s, n) in part.items():
            slot = pieces.setdefault(key, [[], 0])
            slot[0].append(s)
            slot[1] += n
    return {k: (math.fsum(v[0]), v[1]) for k, v in pieces.items()}


def prepare_lexicon(lex: Lexicon, mode: str) -> Lexicon:
    if mode == "categorical":
        return to_categorical(lex)
    if mode == "fine":
        return lex
    raise ValueError(f"unknown mode {mode!r}; expected 'categorical' or 'fine'")


def ep_from_sums(
    sums: Mapping[str, tuple[float, int]],
    lexicon_name: str,
    mode: str = "categorical",
    freq: str = "monthly",
    denominators: Mapping[str, int] | None = None,
) -> EpSeries:
    if not sums:
        raise ValueError("no records to build a pessimism series from")
    index = _full_index(sums.keys(), freq)
    values = np.full(len(index), np.nan)
    for i, key in enumerate(index):
        if key not in sums:
            continue
        total, n_tokens = sums[key]
        if denominators is not None:
            n_tokens = denominators.get(key, 0)
        if n_tokens > 0:
            values[i] = -total / n_tokens
    return EpSeries(lexicon_name, pd.Series(values, index=index, name="ep"), mode, freq)


def ep_series(
    records: Iterable[SentenceRecord],
    lex: Lexicon,
    mode: str = "categorical",
    freq: str = "monthly",
    denominators: Mapping[str, int] | None = None,
) -> EpSeries:
    """Negated score-weighted term frequency divided by the period's word count.

    In ``categorical`` mode scores are first mapped to -1/0/+1. ``denominators``
    overrides the per-period word totals (e.g. counts over all sentences rather
    than the filtered ones). Periods without words are missing.
    """
    lex = prepare_lexicon(lex, mode)
    return ep_from_sums(period_sums(records, lex, freq), lex.name, mode, freq, denominators)


def standardize(series: EpSeries) -> EpSeries:
    values = series.values
    observed = values.dropna()
    if len(observed) < 2:
        raise ValueError("standardizing needs at least two observed periods")
    sd = observed.std(ddof=1)
    if not sd > 0:
        raise ValueError("cannot standardize a constant series")
    out = (values - observed.mean()) / sd
    return replace(series, values=out, standardized=True, transforms=series.transforms + ("standardize",))


def smooth(series: EpSeries, window: int) -> EpSeries:
    """Trailing moving average; early periods average the available prefix.

    Missing periods stay missing and are ignored inside neighbouring windows.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    values = series.values
    out = values.rolling(window, min_periods=1).mean()
    out[values.isna()] = np.nan
    return replace(
        series,
        values=out,
        smoothing_window=window,
        transforms=series.transforms + (f"smooth({window})",),
    )


def correlate(a, b, min_overlap: int = 3) -> float:
    """Pearson correlation over periods observed in both series."""
    sa = a.values if isinstance(a, EpSeries) else pd.Series(a)
    sb = b.values if isinstance(b, EpSeries) else pd.Series(b)
    joined = pd.concat([sa.rename("a"), sb.rename("b")], axis=1, join="inner").dropna()
    if len(joined) < min_overlap:
        raise ValueError(f"only {len(joined)} overlapping periods; need {min_overlap}")
    x = joined["a"].to_numpy(float)
    y = joined["b"].to_numpy(float)
    x = x - x.mean()
    y = y - y.mean()
    return float(np.dot(x, y) / math.sqrt(np.dot(x, x) * np.dot(y, y)))


def read_series(path) -> pd.Series:
    """Read a ``month,value`` or ``date,value`` CSV into a Series keyed by month."""
    df = pd.read_csv(path, dtype={0: str})
    if df.shape[1] != 2:
        raise ValueError(f"{path}: expected two columns")
    keys = pd.PeriodIndex(pd.to_datetime(df.iloc[:, 0].str.slice(0, 10), format="mixed"), freq="M")
    values = pd.to_numeric(df.iloc[:, 1], errors="coerce").to_numpy(float)
    out = pd.Series(values, index=pd.Index([p.strftime("%Y-%m") for p in keys], name="month"))
    if out.index.duplicated().any():
        raise ValueError(f"{path}: duplicate months")
    return out.sort_index()


def is_categorical(lex: Lexicon) -> bool:
    return lex.granularity is Granularity.CATEGORICAL
