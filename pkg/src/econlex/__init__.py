"""Economic sentiment lexicons: construction, comparison and evaluation."""

from .corpus import ConceptList, Document, SentenceRecord, filter_economic, ingest, monthly_counts, segment, tokenize
from .lexicon import (
    Granularity,
    Lexicon,
    SentimentClass,
    category_counts,
    compare,
    load_lexicon,
    modify_disagree,
    modify_only_el,
    to_categorical,
)
from .sentiment import EpSeries, correlate, ep_series, score_sentence, smooth, standardize

__version__ = "0.1.0"
