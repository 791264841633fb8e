"""CoNLL-U reading and modifier harvesting around economic-concept noun heads."""

from __future__ import annotations

import datetime as dt
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .corpus import ConceptList


class ConlluError(ValueError):
    pass


@dataclass(frozen=True)
class DepToken:
    index: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class ParsedSentence:
    tokens: tuple[DepToken, ...]
    metadata: Mapping[str, str] = field(default_factory=dict)

    @property
    def sent_id(self) -> str | None:
        return self.metadata.get("sent_id")

    @property
    def date(self) -> dt.date | None:
        value = self.metadata.get("date")
        return dt.date.fromisoformat(value) if value else None

    @property
    def text(self) -> str:
        return self.metadata.get("text", " ".join(t.form for t in self.tokens))

    def token(self, index: int) -> DepToken:
        return self.tokens[index - 1]

    def children(self, index: int) -> list[DepToken]:
        return [t for t in self.tokens if t.head == index]


def _validate(tokens: list[DepToken], where: str) -> None:
    n = len(tokens)
    for i, tok in enumerate(tokens, start=1):
        if tok.index != i:
            raise ConlluError(f"{where}: token ids not consecutive at {tok.index}")
        if tok.head == tok.index:
            raise ConlluError(f"{where}: cyclic head on token {tok.index}")
        if not 0 <= tok.head <= n:
            raise ConlluError(f"{where}: head {tok.head} of token {tok.index} out of range")
    roots = [t.index for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise ConlluError(f"{where}: expected exactly one root, found {len(roots)}")
    for tok in tokens:
        seen = {tok.index}
        h = tok.head
        while h != 0:
            if h in seen:
                raise ConlluError(f"{where}: cyclic head chain through token {tok.index}")
            seen.add(h)
            h = tokens[h - 1].head


def _parse_block(lines: list[tuple[int, str]], source: str) -> ParsedSentence:
    metadata: dict[str, str] = {}
    tokens: list[DepToken] = []
    for lineno, line in lines:
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, value = body.split("=", 1)
                metadata[key.strip()] = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"{source}:{lineno}: expected 10 columns, got {len(cols)}")
        ident = cols[0]
        if "-" in ident or "." in ident:
            # multiword range or empty node
            continue
        try:
            index, head = int(ident), int(cols[6])
        except ValueError:
            raise ConlluError(f"{source}:{lineno}: non-integer id or head") from None
        tokens.append(DepToken(index, cols[1], cols[2], cols[3], head, cols[7]))
    where = f"{source}:{lines[0][0]}"
    if not tokens:
        raise ConlluError(f"{where}: sentence has no tokens")
    _validate(tokens, where)
    return ParsedSentence(tuple(tokens), metadata)


def parse_conllu(source) -> Iterator[ParsedSentence]:
    """Yield validated sentences from a CoNLL-U file path or iterable of lines."""
    if isinstance(source, (str, Path)):
        name = str(source)
        with open(source, encoding="utf-8") as fh:
            yield from _parse_lines(fh, name)
    else:
        yield from _parse_lines(source, "<lines>")


def _parse_lines(lines: Iterable[str], name: str) -> Iterator[ParsedSentence]:
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.strip():
            block.append((lineno, line))
        elif block:
            yield _parse_block(block, name)
            block = []
    if block:
        yield _parse_block(block, name)


@dataclass(frozen=True)
class RelationConfig:
    """Dependency relations that admit a word as a modifier of a concept head."""

    head_children: frozenset[str] = frozenset({"amod", "advmod", "nmod", "acl", "acl:relcl"})
    governor_relations: frozenset[str] = frozenset({"nsubj", "nsubj:pass", "obj", "obl"})
    governor_upos: frozenset[str] = frozenset({"VERB"})
    governor_children: frozenset[str] = frozenset({"advmod", "xcomp", "obj"})
    compound_relations: frozenset[str] = frozenset({"compound", "amod"})
    head_upos: frozenset[str] = frozenset({"NOUN", "PROPN"})

    @classmethod
    def load(cls, path) -> "RelationConfig":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        unknown = set(raw) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"{path}: unknown relation keys {sorted(unknown)}")
        return cls(**{k: frozenset(v) for k, v in raw.items()})


DEFAULT_RELATIONS = RelationConfig()


@dataclass(frozen=True)
class NounPhrase:
    head_term: str
    concept: str
    modifiers: tuple[tuple[str, str, str], ...]
    sentence_ref: str | None = None
    date: dt.date | None = None


def _key(tok: DepToken, count_key: str) -> str:
    if count_key == "form" or tok.lemma in ("", "_"):
        return tok.form.lower()
    return tok.lemma.lower()


def extract_noun_phrases(
    sentence: ParsedSentence,
    concepts: ConceptList,
    relations: RelationConfig = DEFAULT_RELATIONS,
    count_key: str = "lemma",
) -> list[NounPhrase]:
    """One phrase per NOUN/PROPN token whose lemma, or compound bigram, is a concept.

    Modifiers are the head's children under ``head_children`` relations, plus a
    verbal governor reached through ``governor_relations`` and that verb's
    children under ``governor_children``. A bigram match takes precedence over
    a unigram match and its first word is not reported as a modifier.
    """
    phrases = []
    for head in sentence.tokens:
        if head.upos not in relations.head_upos:
            continue
        head_lemma = _key(head, "lemma")
        children = sentence.children(head.index)

        concept = None
        consumed: set[int] = set()
        for child in children:
            if child.deprel in relations.compound_relations:
                bigram = (_key(child, "lemma"), head_lemma)
                if bigram in concepts.bigrams:
                    concept = " ".join(bigram)
                    consumed.add(child.index)
                    break
        if concept is None and head_lemma in concepts.unigrams:
            concept = head_lemma
        if concept is None:
            continue

        picked: list[DepToken] = [
            c for c in children if c.deprel in relations.head_children and c.index not in consumed
        ]
        if head.deprel in relations.governor_relations and head.head != 0:
            gov = sentence.token(head.head)
            if gov.upos in relations.governor_upos:
                picked.append(gov)
                picked.extend(
                    c
                    for c in sentence.children(gov.index)
                    if c.deprel in relations.governor_children and c.index != head.index
                )
        picked.sort(key=lambda t: t.index)
        modifiers = tuple((_key(t, count_key), t.upos, t.deprel) for t in picked)
        phrases.append(NounPhrase(head_lemma, concept, modifiers, sentence.sent_id, sentence.date))
    return phrases


def harvest_candidates(phrases: Iterable[NounPhrase], min_count: int = 65) -> Counter:
    """Count modifier words across phrases, keeping those seen ``min_count`` times or more."""
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts: Counter = Counter()
    for phrase in phrases:
        counts.update(m[0] for m in phrase.modifiers)
    return Counter({k: v for k, v in counts.items() if v >= min_count})


def shortlist(table: Mapping[str, int], votes: Mapping[str, list[bool]], quorum: int = 2) -> list[str]:
    """Keep lemmas marked as sentiment-bearing by at least ``quorum`` reviewers."""
    kept = []
    for lemma in sorted(votes):
        ballot = votes[lemma]
        if lemma not in table:
            raise KeyError(f"voted lemma {lemma!r} is not in the candidate table")
        if not ballot:
            raise ValueError(f"empty vote list for {lemma!r}")
        if sum(bool(v) for v in ballot) >= quorum:
            kept.append(lemma)
    return kept


def write_candidates(table: Mapping[str, int], path) -> None:
    rows = sorted(table.items(), key=lambda kv: (-kv[1], kv[0]))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for lemma, count in rows:
            fh.write(f"{lemma}\t{count}\n")


def read_candidates(path) -> Counter:
    table: Counter = Counter()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            lemma, count = line.rstrip("\n").split("\t")
            table[lemma] = int(count)
    return table
