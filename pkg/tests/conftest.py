import datetime as dt
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from econlex.corpus import SentenceRecord  # noqa: E402
from econlex.lexicon import Granularity, Lexicon  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "econlex" / "data"

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record a named acceptance criterion outcome for the end-of-run summary."""

    def record(name: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def data_dir():
    return DATA


VOCAB = ["growth", "fell", "rose", "slump", "recovery", "the", "economy", "weak", "strong", "of", "rates",
         "credit", "crunch", "jobs", "flat", "steady", "and", "in", "prices", "boom"]


def synthetic_lexicon() -> Lexicon:
    return Lexicon(
        "SYN",
        {
            "fell": -0.6, "slump": -0.9, "weak": -0.4, "rose": 0.5, "recovery": 0.7, "strong": 0.3,
            "boom": 1.0, "flat": 0.0, "steady": 0.1, "credit crunch": -0.8, "jobs": 0.2,
        },
        Granularity.FINE_GRAINED,
    )


def synthetic_records(seed=7, n_sentences=1000, n_months=24, start=(2010, 1)):
    rng = np.random.default_rng(seed)
    records = []
    for i in range(n_sentences):
        m = int(rng.integers(n_months))
        year = start[0] + (start[1] - 1 + m) // 12
        month = (start[1] - 1 + m) % 12 + 1
        n_tok = int(rng.integers(3, 15))
        toks = tuple(VOCAB[j] for j in rng.integers(len(VOCAB), size=n_tok))
        records.append(
            SentenceRecord(f"d{i}", dt.date(year, month, int(rng.integers(1, 29))), toks, " ".join(toks), frozenset({"x"}))
        )
    return records


@pytest.fixture
def syn_records():
    return synthetic_records()


@pytest.fixture
def syn_lexicon():
    return synthetic_lexicon()
