"""Split the gain from a reference lexicon into sign corrections and added coverage."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

import pandas as pd

from ..corpus import SentenceRecord
from ..lexicon import Lexicon, modify_disagree, modify_only_el
from ..sentiment import EpSeries, ep_series


@dataclass(frozen=True)
class Decomposition:
    base: EpSeries
    delta_disagree: EpSeries
    delta_only: EpSeries
    disagree: EpSeries
    only: EpSeries

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "ep": self.base.values,
                "delta_disagree": self.delta_disagree.values,
                "delta_only": self.delta_only.values,
            }
        )


def delta_ep_decomposition(
    records: Iterable[SentenceRecord],
    base_lex: Lexicon,
    reference_lex: Lexicon,
    mode: str = "categorical",
    freq: str = "monthly",
    denominators=None,
) -> Decomposition:
    """Pessimism on ``base_lex`` plus the changes from the two modified lexicons.

    ``delta_disagree`` is EP on the lexicon whose opposite-sign terms take the
    reference score, minus base EP. ``delta_only`` is EP after adding reference
    terms that are missing or neutral in the base, minus base EP.
    """
    records = list(records)
    kwargs = dict(mode=mode, freq=freq, denominators=denominators)
    base = ep_series(records, base_lex, **kwargs)
    dis = ep_series(records, modify_disagree(base_lex, reference_lex), **kwargs)
    only = ep_series(records, modify_only_el(base_lex, reference_lex), **kwargs)
    return Decomposition(
        base=base,
        delta_disagree=replace(base, lexicon_name=f"delta_disagree[{base_lex.name}]", values=dis.values - base.values),
        delta_only=replace(base, lexicon_name=f"delta_only[{base_lex.name}]", values=only.values - base.values),
        disagree=dis,
        only=only,
    )
