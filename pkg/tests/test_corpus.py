import datetime as dt
import json
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from econlex.corpus import (
    ConceptList,
    CorpusError,
    Document,
    IngestStats,
    SentenceRecord,
    filter_economic,
    ingest,
    merge_counts,
    monthly_counts,
    period_key,
    segment,
    sentences_of,
    tokenize,
)


def doc(body, id="d1", date=dt.date(2001, 3, 4)):
    return Document(id, date, "src", "t", body)


def rec(text, date=dt.date(1990, 1, 5), id="d"):
    return SentenceRecord(id, date, tuple(tokenize(text)), text)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("GDP fell. Markets rallied.", ["GDP fell.", "Markets rallied."]),
        ("Mr. Smith said GDP fell.", ["Mr. Smith said GDP fell."]),
        ("", []),
        ("Dr. Jones met Mrs. Lee in the U.S. Congress today.", ["Dr. Jones met Mrs. Lee in the U.S. Congress today."]),
        ("Acme Inc. Reported gains. Shares rose.", ["Acme Inc. Reported gains.", "Shares rose."]),
        ("Prices rose in Jan. Analysts were surprised.", ["Prices rose in Jan. Analysts were surprised."]),
        ("Is it over? Nobody knows! Wait.", ["Is it over?", "Nobody knows!", "Wait."]),
        ('He said "growth is weak." Then he left.', ['He said "growth is weak."', "Then he left."]),
        ("Rates were 2.5 percent. Then 3.", ["Rates were 2.5 percent.", "Then 3."]),
        ("growth fell. and then it rose.", ["growth fell. and then it rose."]),
        ("Trade, e.g. Exports, improved.", ["Trade, e.g. Exports, improved."]),
    ],
)
def test_segment_fixtures(text, expected):
    assert segment(doc(text)) == expected


@given(st.text(alphabet="ab. ?!AB\n\"", max_size=60))
def test_segment_covers_all_text(text):
    strip = lambda s: re.sub(r"\s+", "", s)
    assert strip("".join(segment(text))) == strip(text)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("The economy suffered a slowdown", ["the", "economy", "suffered", "a", "slowdown"]),
        ("U.S.-based firms", ["u.s.-based", "firms"]),
        ("!!!", []),
        ("Long-term rates, year-on-year.", ["long-term", "rates", "year-on-year"]),
        ("The U.S. economy", ["the", "u.s.", "economy"]),
        ("It's 3.5% -- roughly", ["it's", "3.5", "roughly"]),
        ("Ökonomie WÄCHST", ["ökonomie", "wächst"]),
    ],
)
def test_tokenize_fixtures(text, expected):
    assert tokenize(text) == expected


def test_concept_list_rules(tmp_path):
    with pytest.raises(CorpusError, match="only unigrams and bigrams"):
        ConceptList(["gross domestic product"])
    with pytest.raises(CorpusError, match="duplicate"):
        ConceptList(["gdp", "GDP"])
    with pytest.raises(CorpusError, match="empty"):
        ConceptList([])
    p = tmp_path / "c.txt"
    p.write_text("# header\nEconomy\n\neconomic growth\n")
    c = ConceptList.load(p)
    assert list(c) == ["economic growth", "economy"]


def test_filter_economic_examples():
    concepts = ConceptList(["unemployment", "economic growth"])
    kept = list(filter_economic([rec("Unemployment rose sharply"), rec("The weather was pleasant"),
                                 rec("Economic growth slowed"), rec("Growth was economic")], concepts))
    assert [r.matched_concepts for r in kept] == [frozenset({"unemployment"}), frozenset({"economic growth"})]


sentence_lists = st.lists(
    st.lists(st.sampled_from(["gdp", "economic", "growth", "rain", "the", "sun"]), min_size=1, max_size=6), max_size=20
)


@given(sentence_lists)
def test_filter_subset_and_idempotent(token_lists):
    concepts = ConceptList(["gdp", "economic growth"])
    records = [SentenceRecord(str(i), dt.date(2000, 1, 1), tuple(t), " ".join(t)) for i, t in enumerate(token_lists)]
    once = list(filter_economic(records, concepts))
    twice = list(filter_economic(once, concepts))
    assert once == twice
    assert {r.doc_id for r in once} <= {r.doc_id for r in records}
    assert all(len(r.matched_concepts) >= 1 and r.matched_concepts <= concepts.entries for r in once)


def _write_jsonl(path, rows):
    path.write_text("".join((r if isinstance(r, str) else json.dumps(r)) + "\n" for r in rows))


def _row(i, date="2001-02-03", **extra):
    return {"id": f"d{i}", "date": date, "source": "s", "title": "t", "body": "GDP fell.", **extra}


def test_ingest_valid_and_empty(tmp_path):
    p = tmp_path / "c.jsonl"
    _write_jsonl(p, [_row(1), _row(2), _row(3)])
    stats = IngestStats()
    docs = list(ingest(p, stats=stats))
    assert [d.id for d in docs] == ["d1", "d2", "d3"] and stats.read == 3
    e = tmp_path / "e.jsonl"
    e.write_text("")
    stats = IngestStats()
    assert list(ingest(e, stats=stats)) == [] and stats.read == 0


def test_ingest_bad_date_strict_names_line(tmp_path):
    p = tmp_path / "c.jsonl"
    _write_jsonl(p, [_row(1), _row(2, date="2001-13-40"), _row(3)])
    with pytest.raises(CorpusError, match=r"c\.jsonl:2:"):
        list(ingest(p, strict=True))
    stats = IngestStats()
    assert [d.id for d in ingest(p, stats=stats)] == ["d1", "d3"]
    assert stats.skipped == 1 and stats.read == 2


def test_ingest_rejects_duplicates_future_and_garbage(tmp_path):
    p = tmp_path / "c.jsonl"
    future = (dt.date.today() + dt.timedelta(days=2)).isoformat()
    _write_jsonl(p, [_row(1), _row(1), _row(2, date=future), _row(3, date="1899-12-31"), "{not json", _row(4)])
    stats = IngestStats()
    assert [d.id for d in ingest(p, stats=stats)] == ["d1", "d4"]
    assert stats.skipped == 4


def test_ingest_exclude_topic(tmp_path):
    p = tmp_path / "c.jsonl"
    _write_jsonl(p, [_row(1, topic="sport"), _row(2, topic="economy"), _row(3)])
    stats = IngestStats()
    assert [d.id for d in ingest(p, exclude_topic="sport", stats=stats)] == ["d2", "d3"]
    assert stats.excluded == 1


def test_sentences_of_drops_empty():
    out = sentences_of(doc("GDP fell. !!! Markets rallied."))
    assert [r.tokens for r in out] == [("gdp", "fell"), ("markets", "rallied")]


def test_monthly_counts_examples():
    a = rec("one two", dt.date(1990, 1, 5))
    b = rec("three four five", dt.date(1990, 1, 20))
    assert monthly_counts([a, b]) == {"1990-01": (2, 5)}
    c = rec("six", dt.date(1990, 2, 1))
    assert monthly_counts([a, c]) == {"1990-01": (1, 2), "1990-02": (1, 1)}
    assert monthly_counts([]) == {}
    assert period_key(dt.date(1990, 1, 5), "daily") == "1990-01-05"


@given(st.lists(st.tuples(st.integers(0, 40), st.integers(1, 9)), max_size=40), st.randoms())
def test_monthly_counts_totals_and_merge_order(items, rnd):
    records = [
        SentenceRecord(str(i), dt.date(2000 + m // 12, m % 12 + 1, 1), ("w",) * n, "")
        for i, (m, n) in enumerate(items)
    ]
    counts = monthly_counts(records)
    assert sum(s for s, _ in counts.values()) == len(records)
    assert sum(t for _, t in counts.values()) == sum(n for _, n in items)
    parts = [monthly_counts(records[i::3]) for i in range(3)]
    shuffled = parts[:]
    rnd.shuffle(shuffled)
    assert merge_counts(*parts) == merge_counts(*shuffled) == counts


def test_tokenize_deterministic():
    text = "The U.S.-based economy's long-term growth, e.g. exports, fell 2.5%."
    assert tokenize(text) == tokenize(text) == [
        "the", "u.s.-based", "economy's", "long-term", "growth", "e.g.", "exports", "fell", "2.5",
    ]
