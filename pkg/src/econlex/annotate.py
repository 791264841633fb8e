"""Aggregation of annotator scores and removal of ambiguous terms."""

from __future__ import annotations

import csv
import logging
import math
import statistics
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .lexicon import Granularity, Lexicon

logger = logging.getLogger(__name__)


class AnnotationError(ValueError):
    pass


@dataclass(frozen=True)
class AnnotationSheet:
    term: str
    scores: tuple[float, ...]
    context_phrase: str = ""

    def __post_init__(self):
        object.__setattr__(self, "scores", tuple(float(s) for s in self.scores))
        for s in self.scores:
            if not -1.0 <= s <= 1.0:
                raise AnnotationError(f"{self.term!r}: score {s} outside [-1, 1]")
            if not math.isclose(s * 10, round(s * 10), abs_tol=1e-9):
                raise AnnotationError(f"{self.term!r}: score {s} has more than one decimal")


@dataclass(frozen=True)
class AggregatedTerm:
    term: str
    median_score: float
    sign_split: tuple[int, int, int]
    ambiguous_flags: int = 0

    @property
    def n(self) -> int:
        return sum(self.sign_split)

    @property
    def minority_fraction(self) -> float:
        neg, _, pos = self.sign_split
        return min(neg, pos) / self.n


def aggregate(sheet: AnnotationSheet) -> AggregatedTerm:
    if not sheet.scores:
        raise AnnotationError(f"{sheet.term!r}: no scores")
    median = statistics.median(sheet.scores)
    neg = sum(1 for s in sheet.scores if s < 0)
    pos = sum(1 for s in sheet.scores if s > 0)
    return AggregatedTerm(sheet.term, median, (neg, len(sheet.scores) - neg - pos, pos))


def flag_disagreement(terms: Iterable[AggregatedTerm], threshold: float = 0.3) -> list[str]:
    """Terms whose minority sign (zeros excluded) covers at least ``threshold`` of annotators."""
    if not 0 < threshold <= 0.5:
        raise ValueError("threshold must lie in (0, 0.5]")
    return [t.term for t in terms if t.minority_fraction >= threshold]


def disambiguate(
    terms: Iterable[AggregatedTerm],
    review_flags: Mapping[str, int] | None = None,
    min_flags: int = 1,
    name: str = "EL",
) -> Lexicon:
    """Drop terms flagged ``min_flags`` or more times and return the rest as a lexicon."""
    if min_flags < 1:
        raise ValueError("min_flags must be >= 1")
    review_flags = review_flags or {}
    terms = list(terms)
    kept = {t.term: t.median_score for t in terms if review_flags.get(t.term, 0) < min_flags}
    if terms and not kept:
        logger.warning("every term was flagged; the lexicon is empty")
    return Lexicon(name, kept, Granularity.FINE_GRAINED, f"median of annotator scores, min_flags={min_flags}")


def read_annotations(path, delimiter: str = ",") -> list[AnnotationSheet]:
    """Read ``term,annotator_id,score,phrase`` rows into one sheet per term."""
    scores: dict[str, dict[str, float]] = defaultdict(dict)
    phrases: dict[str, str] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader((ln for ln in fh if not ln.startswith("#")), delimiter=delimiter)
        required = {"term", "annotator_id", "score"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise AnnotationError(f"{path}: header must contain {sorted(required)}")
        for row in reader:
            term = row["term"].strip().lower()
            annotator = row["annotator_id"].strip()
            if annotator in scores[term]:
                raise AnnotationError(f"{path}: annotator {annotator} scored {term!r} twice")
            try:
                scores[term][annotator] = float(row["score"])
            except ValueError:
                raise AnnotationError(f"{path}: bad score {row['score']!r} for {term!r}") from None
            if row.get("phrase"):
                phrases.setdefault(term, row["phrase"])
    return [
        AnnotationSheet(term, tuple(by_annotator[a] for a in sorted(by_annotator)), phrases.get(term, ""))
        for term, by_annotator in sorted(scores.items())
    ]


def read_review_flags(path, delimiter: str = ",") -> dict[str, int]:
    flags: dict[str, int] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader((ln for ln in fh if not ln.startswith("#")), delimiter=delimiter)
        for row in reader:
            flags[row["term"].strip().lower()] = int(row["flag_count"])
    return flags
