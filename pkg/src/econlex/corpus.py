"""Document ingestion, sentence segmentation, tokenization and concept filtering."""

from __future__ import annotations

import datetime as dt
import json
import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

logger = logging.getLogger(__name__)

EARLIEST_DATE = dt.date(1900, 1, 1)


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Document:
    id: str
    date: dt.date
    source: str
    title: str
    body: str
    topic: str | None = None


@dataclass(frozen=True)
class SentenceRecord:
    doc_id: str
    date: dt.date
    tokens: tuple[str, ...]
    raw_text: str
    matched_concepts: frozenset[str] = frozenset()


@dataclass
class IngestStats:
    read: int = 0
    skipped: int = 0
    excluded: int = 0
    errors: list[str] = field(default_factory=list)


class ConceptList:
    """Set of lowercased unigram and bigram economic concepts."""

    def __init__(self, terms: Iterable[str]):
        entries = []
        seen = set()
        for raw in terms:
            term = " ".join(raw.lower().split())
            if not term:
                continue
            n = len(term.split(" "))
            if n > 2:
                raise CorpusError(f"concept {term!r} has {n} words; only unigrams and bigrams are supported")
            if term in seen:
                raise CorpusError(f"duplicate concept {term!r}")
            seen.add(term)
            entries.append(term)
        if not entries:
            raise CorpusError("concept list is empty")
        self.entries = frozenset(entries)
        self.unigrams = frozenset(t for t in entries if " " not in t)
        self.bigrams = frozenset(tuple(t.split(" ")) for t in entries if " " in t)

    @classmethod
    def load(cls, path) -> "ConceptList":
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
        return cls(ln for ln in lines if ln and not ln.startswith("#"))

    def __contains__(self, term: str) -> bool:
        return term in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries))

    def match(self, tokens: tuple[str, ...] | list[str]) -> frozenset[str]:
        found = {t for t in tokens if t in self.unigrams}
        if self.bigrams:
            for pair in zip(tokens, tokens[1:]):
                if pair in self.bigrams:
                    found.add(" ".join(pair))
        return frozenset(found)


def _parse_date(value) -> dt.date:
    if not isinstance(value, str):
        raise CorpusError(f"date must be a string, got {value!r}")
    date = dt.date.fromisoformat(value[:10])
    if not EARLIEST_DATE <= date <= dt.date.today():
        raise CorpusError(f"date {value} outside [{EARLIEST_DATE}, today]")
    return date


def parse_document(obj: Mapping) -> Document:
    missing = [k for k in ("id", "date", "source", "title", "body") if k not in obj]
    if missing:
        raise CorpusError(f"missing fields {missing}")
    try:
        date = _parse_date(obj["date"])
    except ValueError as exc:
        raise CorpusError(f"bad date {obj['date']!r}: {exc}") from None
    return Document(
        id=str(obj["id"]),
        date=date,
        source=str(obj["source"]),
        title=str(obj["title"]),
        body=str(obj["body"]),
        topic=obj.get("topic"),
    )


def ingest(
    path,
    format: str = "jsonl",
    strict: bool = False,
    exclude_topic: str | Iterable[str] | None = None,
    stats: IngestStats | None = None,
) -> Iterator[Document]:
    """Yield documents from a JSON-lines file in file order.

    Malformed lines are skipped with a warning, or raise under ``strict``.
    Pass an :class:`IngestStats` to collect counts as the stream is consumed.
    """
    if format != "jsonl":
        raise CorpusError(f"unsupported corpus format {format!r}")
    if stats is None:
        stats = IngestStats()
    if isinstance(exclude_topic, str):
        exclude_topic = {exclude_topic}
    excluded = set(exclude_topic or ())
    seen_ids: set[str] = set()
    with open(Path(path), encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                doc = parse_document(json.loads(line))
                if doc.id in seen_ids:
                    raise CorpusError(f"duplicate document id {doc.id!r}")
            except (json.JSONDecodeError, CorpusError) as exc:
                msg = f"{path}:{lineno}: {exc}"
                if strict:
                    raise CorpusError(msg) from None
                logger.warning("skipping %s", msg)
                stats.skipped += 1
                stats.errors.append(msg)
                continue
            seen_ids.add(doc.id)
            if doc.topic is not None and doc.topic in excluded:
                stats.excluded += 1
                continue
            stats.read += 1
            yield doc


ABBREVIATIONS = frozenset(
    a.lower()
    for a in (
        "Mr.", "Mrs.", "Ms.", "Dr.", "U.S.", "U.K.", "Inc.", "Corp.", "e.g.", "i.e.", "vs.",
        "Jan.", "Feb.", "Mar.", "Apr.", "Jun.", "Jul.", "Aug.", "Sep.", "Sept.", "Oct.", "Nov.", "Dec.",
    )
)

_BOUNDARY = re.compile(r"[.?!][\"')\]]*(?=\s+[\"'(\[]?[A-Z])")


def segment(doc: Document | str) -> list[str]:
    """Split text on ``.``, ``?`` or ``!`` followed by whitespace and an uppercase letter.

    A period closing one of :data:`ABBREVIATIONS` never ends a sentence.
    """
    text = doc.body if isinstance(doc, Document) else doc
    sentences = []
    start = 0
    for m in _BOUNDARY.finditer(text):
        end = m.end()
        if text[m.start()] == ".":
            last_word = text[start:m.start() + 1].split()[-1:]
            if last_word and last_word[0].lstrip("\"'([").lower() in ABBREVIATIONS:
                continue
        piece = text[start:end].strip()
        if piece:
            sentences.append(piece)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


# word characters joined by single hyphens/apostrophes/periods (``u.s.-based``);
# a trailing period is kept only on dotted abbreviations
_TOKEN = re.compile(r"\w+(?:(?:\.-|[-.'’])\w+)*(?:(?<=\w\.\w)\.)?")


def tokenize(sentence: str) -> list[str]:
    return [m.group(0).lower() for m in _TOKEN.finditer(sentence)]


def sentences_of(doc: Document) -> list[SentenceRecord]:
    """Segment and tokenize a document; sentences with no tokens are dropped."""
    out = []
    for raw in segment(doc):
        tokens = tuple(tokenize(raw))
        if tokens:
            out.append(SentenceRecord(doc.id, doc.date, tokens, raw))
    return out


def filter_economic(sentences: Iterable[SentenceRecord], concepts: ConceptList) -> Iterator[SentenceRecord]:
    """Keep sentences that mention at least one concept unigram or adjacent bigram."""
    for rec in sentences:
        matched = concepts.match(rec.tokens)
        if matched:
            yield SentenceRecord(rec.doc_id, rec.date, rec.tokens, rec.raw_text, matched)


def period_key(date: dt.date, freq: str = "monthly") -> str:
    if freq == "monthly":
        return f"{date.year:04d}-{date.month:02d}"
    if freq == "daily":
        return date.isoformat()
    raise ValueError(f"unknown frequency {freq!r}")


def monthly_counts(records: Iterable[SentenceRecord], freq: str = "monthly") -> dict[str, tuple[int, int]]:
    """Map each period to ``(sentence count, token count)``."""
    sentences: Counter = Counter()
    tokens: Counter = Counter()
    for rec in records:
        key = period_key(rec.date, freq)
        sentences[key] += 1
        tokens[key] += len(rec.tokens)
    return {k: (sentences[k], tokens[k]) for k in sorted(sentences)}


def merge_counts(*parts: Mapping[str, tuple[int, int]]) -> dict[str, tuple[int, int]]:
    total: dict[str, list[int]] = {}
    for part in parts:
        for key, (s, t) in part.items():
            acc = total.setdefault(key, [0, 0])
            acc[0] += s
            acc[1] += t
    return {k: (v[0], v[1]) for k, v in sorted(total.items())}
