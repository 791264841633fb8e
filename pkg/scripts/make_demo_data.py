"""Regenerate the bundled demo corpus, lexicons and macro series (seeded)."""

from pathlib import Path

import numpy as np

from econlex.lexicon import write_lexicon
from econlex.synth import (
    CONCEPTS,
    alt_lexicon,
    el_lexicon,
    generate_corpus,
    generate_macro,
    latent_cycle,
    write_corpus,
    write_series,
)

SEED = 20240101
START, N_MONTHS = "2000-01", 120
OUT = Path(__file__).resolve().parents[1] / "src" / "econlex" / "data" / "demo"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    latent = latent_cycle(N_MONTHS, np.random.default_rng(SEED))
    write_corpus(generate_corpus(SEED, START, N_MONTHS, latent=latent), OUT / "corpus.jsonl")
    for name, series in generate_macro(SEED, START, N_MONTHS, latent=latent).items():
        write_series(series, OUT / f"{name}.csv")
    with open(OUT / "concepts.txt", "w", encoding="utf-8") as fh:
        fh.write("# demo economic concepts\n")
        fh.writelines(f"{c}\n" for c in CONCEPTS)
    write_lexicon(el_lexicon(), OUT / "el.csv")
    write_lexicon(alt_lexicon(), OUT / "alt.csv")


if __name__ == "__main__":
    main()
