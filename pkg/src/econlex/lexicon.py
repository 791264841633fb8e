"""Sentiment lexicons: loading, classification, comparison and modification."""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping


class LexiconError(ValueError):
    """Raised for malformed lexicon files or invalid entries."""


class SentimentClass(enum.Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"

    @classmethod
    def of(cls, score: float) -> "SentimentClass":
        # exact comparison with zero, no epsilon
        if score < 0:
            return cls.NEGATIVE
        if score > 0:
            return cls.POSITIVE
        return cls.NEUTRAL


class Granularity(str, enum.Enum):
    CATEGORICAL = "categorical"
    FINE_GRAINED = "fine_grained"


def _check_term(term: str) -> str:
    term = term.strip().lower()
    if not term:
        raise LexiconError("empty term")
    if term.count(" ") > 1 or "  " in term or "\t" in term:
        raise LexiconError(f"term {term!r}: at most one internal space is supported")
    return term


@dataclass(frozen=True)
class Lexicon:
    """Immutable map from lowercased term to a score in [-1, 1]."""

    name: str
    entries: Mapping[str, float]
    granularity: Granularity = Granularity.FINE_GRAINED
    source_note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "granularity", Granularity(self.granularity))
        clean = {}
        for term, score in dict(self.entries).items():
            t = _check_term(term)
            if t in clean:
                raise LexiconError(f"duplicate term {t!r}")
            s = float(score)
            if not -1.0 <= s <= 1.0:
                raise LexiconError(f"term {t!r}: score out of range ({s})")
            if self.granularity is Granularity.CATEGORICAL and s not in (-1.0, 0.0, 1.0):
                raise LexiconError(f"term {t!r}: categorical lexicon holds non-categorical score {s}")
            clean[t] = s
        object.__setattr__(self, "entries", MappingProxyType(clean))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, term: object) -> bool:
        return term in self.entries

    def __getitem__(self, term: str) -> float:
        return self.entries[term]

    def get(self, term: str, default=None):
        return self.entries.get(term, default)

    def classify(self, term: str) -> SentimentClass:
        return SentimentClass.of(self.entries[term])

    @property
    def bigrams(self) -> frozenset[str]:
        return frozenset(t for t in self.entries if " " in t)

    def negated(self) -> "Lexicon":
        return self.replace(entries={t: -s for t, s in self.entries.items()})

    def scaled(self, factor: float) -> "Lexicon":
        """Multiply every score by ``factor``; result must stay within [-1, 1]."""
        return self.replace(
            entries={t: s * factor for t, s in self.entries.items()},
            granularity=Granularity.FINE_GRAINED,
        )

    def replace(self, **changes) -> "Lexicon":
        kwargs = dict(
            name=self.name,
            entries=self.entries,
            granularity=self.granularity,
            source_note=self.source_note,
        )
        kwargs.update(changes)
        return Lexicon(**kwargs)


def _data_lines(fh: Iterable[str]):
    for lineno, line in enumerate(fh, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line.rstrip("\r\n")


def load_lexicon(
    path,
    format: str | None = None,
    granularity: Granularity | str = Granularity.FINE_GRAINED,
    name: str | None = None,
    header: bool = True,
) -> Lexicon:
    """Read a two-column ``term,score`` file.

    ``format`` is ``"csv"`` or ``"tsv"``; inferred from the suffix when omitted.
    Duplicate terms are an error rather than last-wins.
    """
    path = Path(path)
    if format is None:
        format = "tsv" if path.suffix.lower() in (".tsv", ".tab") else "csv"
    if format not in ("csv", "tsv"):
        raise LexiconError(f"unknown lexicon format {format!r}")
    delimiter = "\t" if format == "tsv" else ","

    entries: dict[str, float] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        rows = _data_lines(fh)
        if header:
            first = next(rows, None)
            if first is None:
                return Lexicon(name or path.stem, {}, granularity, str(path))
            head = [c.strip().lower() for c in next(csv.reader([first[1]], delimiter=delimiter))]
            if len(head) != 2:
                raise LexiconError(f"{path}:{first[0]}: header must have two columns, got {head}")
        for lineno, line in rows:
            cells = next(csv.reader(io.StringIO(line), delimiter=delimiter))
            if len(cells) != 2:
                raise LexiconError(f"{path}:{lineno}: expected 2 columns, got {len(cells)}")
            raw_term, raw_score = cells
            try:
                score = float(raw_score)
            except ValueError:
                raise LexiconError(f"{path}:{lineno}: score {raw_score!r} is not a number") from None
            if not -1.0 <= score <= 1.0:
                raise LexiconError(f"{path}:{lineno}: score out of range ({score})")
            try:
                term = _check_term(raw_term)
            except LexiconError as exc:
                raise LexiconError(f"{path}:{lineno}: {exc}") from None
            if term in entries:
                raise LexiconError(f"{path}:{lineno}: duplicate term {term!r}")
            entries[term] = score
    try:
        return Lexicon(name or path.stem, entries, granularity, str(path))
    except LexiconError as exc:
        raise LexiconError(f"{path}: {exc}") from None


def _read_word_list(path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.strip() for _, line in _data_lines(fh)]


def load_word_lists(
    negative_path=None,
    positive_path=None,
    name: str = "LMD",
) -> Lexicon:
    """Build a categorical lexicon from plain negative/positive word lists.

    Negative words are coded -1 and positive words +1. A word listed in both
    files, or twice in one file, is an error.
    """
    entries: dict[str, float] = {}
    for path, value in ((negative_path, -1.0), (positive_path, 1.0)):
        if path is None:
            continue
        for word in _read_word_list(path):
            term = _check_term(word)
            if term in entries:
                raise LexiconError(f"{path}: duplicate term {term!r}")
            entries[term] = value
    notes = ", ".join(str(p) for p in (negative_path, positive_path) if p is not None)
    return Lexicon(name, entries, Granularity.CATEGORICAL, notes)


def load_master_dictionary(path, name: str = "LMD") -> Lexicon:
    """Read a Loughran-McDonald style master dictionary CSV.

    Only the ``Negative`` and ``Positive`` columns are used; a non-zero entry
    marks membership. Words flagged in neither column are skipped.
    """
    import pandas as pd

    df = pd.read_csv(path, keep_default_na=False)
    cols = {c.lower(): c for c in df.columns}
    missing = {"word", "negative", "positive"} - cols.keys()
    if missing:
        raise LexiconError(f"{path}: missing columns {sorted(missing)}")
    neg = pd.to_numeric(df[cols["negative"]], errors="coerce").fillna(0) != 0
    pos = pd.to_numeric(df[cols["positive"]], errors="coerce").fillna(0) != 0
    entries: dict[str, float] = {}
    for word, is_neg, is_pos in zip(df[cols["word"]].astype(str), neg, pos):
        if not (is_neg or is_pos):
            continue
        if is_neg and is_pos:
            raise LexiconError(f"{path}: {word!r} is both negative and positive")
        term = _check_term(word)
        if term in entries:
            raise LexiconError(f"{path}: duplicate term {term!r}")
        entries[term] = -1.0 if is_neg else 1.0
    return Lexicon(name, entries, Granularity.CATEGORICAL, str(path))


def write_lexicon(lex: Lexicon, path, format: str = "csv") -> None:
    delimiter = "\t" if format == "tsv" else ","
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        writer.writerow(["term", "score"])
        for term in sorted(lex.entries):
            writer.writerow([term, repr(lex.entries[term])])


def _count_classes(scores: Iterable[float]) -> tuple[int, int, int]:
    neg = neu = pos = 0
    for score in scores:
        cls = SentimentClass.of(score)
        if cls is SentimentClass.NEGATIVE:
            neg += 1
        elif cls is SentimentClass.POSITIVE:
            pos += 1
        else:
            neu += 1
    return neg, neu, pos


def category_counts(lex: Lexicon) -> tuple[int, int, int, int]:
    """Return ``(negative, neutral, positive, total)``."""
    neg, neu, pos = _count_classes(lex.entries.values())
    return neg, neu, pos, neg + neu + pos


@dataclass(frozen=True)
class ClassBreakdown:
    negative: int = 0
    neutral: int = 0
    positive: int = 0

    @property
    def total(self) -> int:
        return self.negative + self.neutral + self.positive

    def as_dict(self) -> dict:
        return {"negative": self.negative, "neutral": self.neutral, "positive": self.positive}


def _breakdown(scores: Iterable[float]) -> ClassBreakdown:
    return ClassBreakdown(*_count_classes(scores))


@dataclass(frozen=True)
class ComparisonReport:
    name_a: str
    name_b: str
    common_terms: int
    agree_by_class: ClassBreakdown
    disagree: int
    only_in_a: ClassBreakdown
    only_in_b: ClassBreakdown
    paired_scores: tuple = field(repr=False, default=())

    @property
    def agree(self) -> int:
        return self.agree_by_class.total

    def sign_disagree(self) -> int:
        """Shared terms with strictly opposite signs (one negative, one positive)."""
        return sum(1 for _, a, b in self.paired_scores if a * b < 0)

    def as_dict(self, include_pairs: bool = False) -> dict:
        out = {
            "a": self.name_a,
            "b": self.name_b,
            "common_terms": self.common_terms,
            "agree": self.agree,
            "agree_by_class": self.agree_by_class.as_dict(),
            "disagree": self.disagree,
            "sign_disagree": self.sign_disagree(),
            "only_in_a": {"count": self.only_in_a.total, **self.only_in_a.as_dict()},
            "only_in_b": {"count": self.only_in_b.total, **self.only_in_b.as_dict()},
        }
        if include_pairs:
            out["paired_scores"] = [list(p) for p in self.paired_scores]
        return out

    def render(self) -> str:
        rows = [
            ("common terms", self.common_terms),
            ("agree", self.agree),
            ("  negative", self.agree_by_class.negative),
            ("  neutral", self.agree_by_class.neutral),
            ("  positive", self.agree_by_class.positive),
            ("disagree", self.disagree),
            ("  opposite sign", self.sign_disagree()),
            (f"only in {self.name_a}", self.only_in_a.total),
            (f"only in {self.name_b}", self.only_in_b.total),
        ]
        width = max(len(r[0]) for r in rows)
        lines = [f"{self.name_a} vs {self.name_b}"]
        lines += [f"{label:<{width}}  {value:>7d}" for label, value in rows]
        return "\n".join(lines)


def compare(a: Lexicon, b: Lexicon) -> ComparisonReport:
    """Word-level comparison over the intersection and both set differences."""
    common = sorted(a.entries.keys() & b.entries.keys())
    agree = {c: 0 for c in SentimentClass}
    disagree = 0
    pairs = []
    for term in common:
        sa, sb = a.entries[term], b.entries[term]
        pairs.append((term, sa, sb))
        ca, cb = SentimentClass.of(sa), SentimentClass.of(sb)
        if ca is cb:
            agree[ca] += 1
        else:
            disagree += 1
    only_a = _breakdown(s for t, s in a.entries.items() if t not in b.entries)
    only_b = _breakdown(s for t, s in b.entries.items() if t not in a.entries)
    return ComparisonReport(
        name_a=a.name,
        name_b=b.name,
        common_terms=len(common),
        agree_by_class=ClassBreakdown(
            agree[SentimentClass.NEGATIVE], agree[SentimentClass.NEUTRAL], agree[SentimentClass.POSITIVE]
        ),
        disagree=disagree,
        only_in_a=only_a,
        only_in_b=only_b,
        paired_scores=tuple(pairs),
    )


def _opposite(x: float, y: float) -> bool:
    return (x < 0 < y) or (y < 0 < x)


def modify_disagree(base: Lexicon, reference: Lexicon) -> Lexicon:
    """Give shared terms with strictly opposite signs the reference score."""
    entries = {
        term: reference.entries[term]
        if term in reference.entries and _opposite(score, reference.entries[term])
        else score
        for term, score in base.entries.items()
    }
    return base.replace(
        name=f"{base.name}+disagree({reference.name})",
        entries=entries,
        granularity=_merged_granularity(base, reference),
    )


def modify_only_el(base: Lexicon, reference: Lexicon) -> Lexicon:
    """Add reference terms that are missing or neutral in ``base``."""
    entries = dict(base.entries)
    for term, score in reference.entries.items():
        if entries.get(term, 0.0) == 0.0:
            entries[term] = score
    return base.replace(
        name=f"{base.name}+only({reference.name})",
        entries=entries,
        granularity=_merged_granularity(base, reference),
    )


def _merged_granularity(base: Lexicon, reference: Lexicon) -> Granularity:
    if base.granularity is Granularity.CATEGORICAL and reference.granularity is Granularity.CATEGORICAL:
        return Granularity.CATEGORICAL
    return Granularity.FINE_GRAINED


def to_categorical(lex: Lexicon) -> Lexicon:
    """Map positive scores to +1, negative to -1 and keep zeros."""
    entries = {t: float((s > 0) - (s < 0)) for t, s in lex.entries.items()}
    return lex.replace(entries=entries, granularity=Granularity.CATEGORICAL)
