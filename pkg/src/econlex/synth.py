"""Seeded synthetic corpora and macro series for tests and the bundled demo data."""

from __future__ import annotations

import datetime as dt
import json

import numpy as np
import pandas as pd

from .corpus import Document
from .lexicon import Granularity, Lexicon

CONCEPTS = [
    "economy", "unemployment", "inflation", "growth", "trade", "investment", "output",
    "employment", "exports", "wages", "economic growth", "house prices", "interest rates",
    "consumer spending", "industrial production",
]

NEGATIVE = {
    "fell": -0.6, "slumped": -0.8, "declined": -0.5, "weak": -0.6, "sharply": -0.3,
    "contraction": -0.7, "slowdown": -0.6, "crisis": -0.9, "losses": -0.7, "downturn": -0.8,
    "stagnant": -0.5, "fragile": -0.4, "recession": -0.9, "layoffs": -0.8, "plunged": -0.9,
    "credit crunch": -0.9,
}
POSITIVE = {
    "rose": 0.5, "recovery": 0.7, "strong": 0.6, "robust": 0.7, "expansion": 0.6,
    "improved": 0.5, "gains": 0.5, "boom": 0.8, "steady": 0.2, "rebounded": 0.7, "solid": 0.4,
    "upturn": 0.6,
}
NEUTRAL_SCORED = {"quarter": 0.0, "report": 0.0, "data": 0.0, "survey": 0.0}
FILLER = ["the", "in", "a", "of", "and", "analysts", "said", "last", "month", "according", "to", "figures"]


def el_lexicon() -> Lexicon:
    """Fine-grained demo lexicon over the synthetic vocabulary."""
    entries = {**NEGATIVE, **POSITIVE, **NEUTRAL_SCORED}
    return Lexicon("EL", entries, Granularity.FINE_GRAINED, "synthetic demo lexicon")


def alt_lexicon() -> Lexicon:
    """Categorical lexicon with partial coverage and a few sign flips relative to :func:`el_lexicon`."""
    entries = {
        "fell": -1, "slumped": -1, "weak": -1, "crisis": -1, "losses": -1, "recession": -1,
        "layoffs": -1, "sharply": 1, "steady": -1, "strong": 1, "gains": 1, "boom": 1,
        "recovery": 0, "quarter": -1, "downturn": 1, "volatile": -1,
    }
    return Lexicon("ALT", entries, Granularity.CATEGORICAL, "synthetic categorical lexicon")


def latent_cycle(n_months: int, rng: np.random.Generator, phi: float = 0.93) -> np.ndarray:
    x = np.empty(n_months)
    x[0] = rng.normal(0, 1)
    for t in range(1, n_months):
        x[t] = phi * x[t - 1] + rng.normal(0, np.sqrt(1 - phi**2))
    return x


def month_keys(start: str, n_months: int) -> list[str]:
    return [p.strftime("%Y-%m") for p in pd.period_range(start, periods=n_months, freq="M")]


def _sentence(rng: np.random.Generator, p_neg: float) -> str:
    concept = CONCEPTS[rng.integers(len(CONCEPTS))]
    words = [concept]
    for _ in range(rng.integers(1, 4)):
        bank = NEGATIVE if rng.random() < p_neg else POSITIVE
        keys = list(bank)
        words.append(keys[rng.integers(len(keys))])
    n_fill = rng.integers(2, 7)
    words += [FILLER[i] for i in rng.integers(len(FILLER), size=n_fill)]
    if rng.random() < 0.3:
        words.append(list(NEUTRAL_SCORED)[rng.integers(len(NEUTRAL_SCORED))])
    order = rng.permutation(len(words) - 1) + 1
    words = [words[0]] + [words[i] for i in order]
    text = " ".join(words)
    return text[0].upper() + text[1:] + "."


def generate_corpus(
    seed: int = 0,
    start: str = "2000-01",
    n_months: int = 120,
    docs_per_month: int = 8,
    sentences_per_doc: tuple[int, int] = (2, 6),
    latent: np.ndarray | None = None,
) -> list[Document]:
    """Documents whose negative-word share tracks a latent business-cycle factor.

    Some sentences carry no economic concept so filtering has work to do.
    """
    rng = np.random.default_rng(seed)
    if latent is None:
        latent = latent_cycle(n_months, rng)
    docs = []
    for t, key in enumerate(month_keys(start, n_months)):
        year, month = map(int, key.split("-"))
        p_neg = 1 / (1 + np.exp(-(latent[t] * 1.2)))
        for d in range(docs_per_month):
            n_sent = rng.integers(sentences_per_doc[0], sentences_per_doc[1] + 1)
            sentences = []
            for _ in range(n_sent):
                if rng.random() < 0.15:
                    sentences.append("The weather was pleasant and the match ended late.")
                else:
                    sentences.append(_sentence(rng, p_neg))
            day = int(rng.integers(1, 29))
            docs.append(
                Document(
                    id=f"{key}-{d:03d}",
                    date=dt.date(year, month, day),
                    source="synthetic",
                    title=f"Economic report {key}",
                    body=" ".join(sentences),
                )
            )
    return docs


def generate_macro(seed: int = 0, start: str = "2000-01", n_months: int = 120, latent: np.ndarray | None = None):
    """Recession dummy, term spread, activity index and a volatility series driven by the latent cycle."""
    rng = np.random.default_rng(seed + 1)
    if latent is None:
        latent = latent_cycle(n_months, np.random.default_rng(seed))
    keys = month_keys(start, n_months)
    lead = np.r_[latent[3:], np.repeat(latent[-1], 3)]
    recession = (lead + rng.normal(0, 0.5, n_months) > 0.9).astype(float)
    spread = 1.5 - 0.8 * np.r_[latent[6:], np.repeat(latent[-1], 6)] + rng.normal(0, 0.5, n_months)
    ads = -0.7 * latent + rng.normal(0, 0.5, n_months)
    vix = np.empty(n_months)
    vix[0] = 20
    for t in range(1, n_months):
        vix[t] = 6 + 0.7 * vix[t - 1] + 3 * latent[t] + rng.normal(0, 2)
    idx = pd.Index(keys, name="month")
    return {
        "recession": pd.Series(recession, index=idx),
        "spread": pd.Series(spread, index=idx),
        "ads": pd.Series(ads, index=idx),
        "vix": pd.Series(vix, index=idx),
    }


def write_corpus(docs: list[Document], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for doc in docs:
            obj = {
                "id": doc.id,
                "date": doc.date.isoformat(),
                "source": doc.source,
                "title": doc.title,
                "body": doc.body,
            }
            fh.write(json.dumps(obj, sort_keys=True) + "\n")


def write_series(series: pd.Series, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("date,value\n")
        for key, value in series.items():
            fh.write(f"{key}-01,{float(value)!r}\n")
