"""Command-line entry point: ``econlex <subcommand> ...``."""

from __future__ import annotations

import argparse
import datetime as dt
import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np
import pandas as pd

from . import __version__
from .annotate import aggregate, disambiguate, flag_disagreement, read_annotations, read_review_flags
from .corpus import ConceptList, IngestStats, filter_economic, ingest, monthly_counts, period_key, sentences_of
from .depparse import (
    DEFAULT_RELATIONS,
    RelationConfig,
    extract_noun_phrases,
    harvest_candidates,
    parse_conllu,
    shortlist,
    write_candidates,
)
from .lexicon import (
    Lexicon,
    compare,
    load_lexicon,
    load_master_dictionary,
    load_word_lists,
    write_lexicon,
)
from .sentiment import ep_series, is_categorical, read_series, score_sentence, smooth, standardize

log = logging.getLogger("econlex")

CONFIG_ENV = "ECONLEX_CONFIG_DIR"


class UsageError(Exception):
    """Bad arguments detected after parsing; exits with status 2."""


# -- helpers -----------------------------------------------------------------


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def open_lexicon(spec: str, name: str | None = None) -> Lexicon:
    """Load ``PATH`` (term,score file), ``wordlists:NEG,POS`` or ``master:PATH``."""
    if spec.startswith("wordlists:"):
        neg, _, pos = spec[len("wordlists:"):].partition(",")
        return load_word_lists(neg or None, pos or None, name=name or "LMD")
    if spec.startswith("master:"):
        return load_master_dictionary(spec[len("master:"):], name=name or "LMD")
    return load_lexicon(spec, name=name)


def _lexicon_paths(spec: str) -> list[str]:
    for prefix in ("wordlists:", "master:"):
        if spec.startswith(prefix):
            return [p for p in spec[len(prefix):].split(",") if p]
    return [spec]


def _named_path(value: str) -> tuple[str, str]:
    name, sep, path = value.partition("=")
    if not sep or not name or not path:
        raise argparse.ArgumentTypeError(f"expected NAME=PATH, got {value!r}")
    return name, path


def _horizons(value: str) -> list[int]:
    if ".." in value:
        lo, hi = value.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in value.split(",")]


def _bandwidth(value: str):
    return "auto" if value == "auto" else int(value)


def _chunk_worker(payload):
    docs, concepts, keep_all, freq = payload
    kept, totals = [], {}
    for doc in docs:
        sentences = sentences_of(doc)
        if keep_all:
            for rec in sentences:
                key = period_key(rec.date, freq)
                totals[key] = totals.get(key, 0) + len(rec.tokens)
        kept.extend(filter_economic(sentences, concepts))
    return kept, totals


def load_records(args, freq: str = "monthly"):
    """Ingest, segment, tokenize and concept-filter the corpus, optionally in parallel.

    Returns the filtered records (in document order) and, when
    ``--denominator all`` is requested, per-period token totals over all
    sentences.
    """
    concepts = ConceptList.load(args.concepts)
    stats = IngestStats()
    docs = list(ingest(args.corpus, strict=args.strict, exclude_topic=args.exclude_topic, stats=stats))
    log.info("ingested %d documents (%d skipped, %d excluded)", stats.read, stats.skipped, stats.excluded)
    keep_all = getattr(args, "denominator", "filtered") == "all"
    jobs = max(1, args.jobs or os.cpu_count() or 1)
    if jobs == 1 or len(docs) < 2:
        results = [_chunk_worker((docs, concepts, keep_all, freq))]
    else:
        size = -(-len(docs) // jobs)
        chunks = [docs[i:i + size] for i in range(0, len(docs), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_chunk_worker, [(c, concepts, keep_all, freq) for c in chunks]))
    records = [r for kept, _ in results for r in kept]
    totals: dict[str, int] = {}
    for _, part in results:
        for key, n in part.items():
            totals[key] = totals.get(key, 0) + n
    return records, (totals if keep_all else None), stats


class Run:
    """Tracks inputs and outputs of one invocation and writes the manifest."""

    def __init__(self, args, out_dir: Path):
        self.args = args
        self.out_dir = out_dir
        self.inputs: list[Path] = []
        self.outputs: list[Path] = []

    def input(self, path) -> None:
        self.inputs.append(Path(path))

    def target(self, name: str) -> Path:
        path = self.out_dir / name
        if path.exists() and not self.args.force:
            raise UsageError(f"{path} exists; pass --force to overwrite")
        self.outputs.append(path)
        return path

    def finish(self) -> None:
        manifest = {
            "tool": "econlex",
            "version": __version__,
            "subcommand": self.args.command,
            "config": {
                k: (str(v) if isinstance(v, Path) else v)
                for k, v in sorted(vars(self.args).items())
                if k not in ("func", "force")
            },
            "inputs": {str(p): _sha256(p) for p in self.inputs},
            "outputs": {str(p.name): _sha256(p) for p in self.outputs if p.exists()},
            "created": dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds"),
        }
        with open(self.out_dir / "manifest.json", "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")


def _write_json(path: Path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


# -- subcommands -------------------------------------------------------------


def cmd_build_lexicon(args, run: Run) -> None:
    if not args.conllu and not args.annotations:
        raise UsageError("build-lexicon needs --conllu and/or --annotations")
    if args.conllu:
        if not args.concepts:
            raise UsageError("--conllu requires --concepts")
        concepts = ConceptList.load(args.concepts)
        relations = RelationConfig.load(args.relations) if args.relations else DEFAULT_RELATIONS
        phrases = []
        for path in args.conllu:
            run.input(path)
            for sent in parse_conllu(path):
                phrases.extend(extract_noun_phrases(sent, concepts, relations, args.count_key))
        table = harvest_candidates(phrases, args.min_count)
        write_candidates(table, run.target("candidates.tsv"))
        log.info("%d noun phrases, %d candidates with count >= %d", len(phrases), len(table), args.min_count)
        if args.votes:
            run.input(args.votes)
            votes = {}
            with open(args.votes, encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip() or line.startswith("#"):
                        continue
                    lemma, *marks = line.rstrip("\n").split(",")
                    votes[lemma] = [m.strip().lower() in ("1", "true", "t", "yes") for m in marks]
            kept = shortlist(table, votes, args.quorum)
            with open(run.target("shortlist.txt"), "w", encoding="utf-8") as fh:
                fh.writelines(f"{t}\n" for t in kept)
    if args.annotations:
        run.input(args.annotations)
        terms = [aggregate(s) for s in read_annotations(args.annotations)]
        flagged = flag_disagreement(terms, args.disagreement_threshold)
        with open(run.target("disagreement.txt"), "w", encoding="utf-8") as fh:
            fh.writelines(f"{t}\n" for t in flagged)
        flags = {}
        if args.review_flags:
            run.input(args.review_flags)
            flags = read_review_flags(args.review_flags)
        lex = disambiguate(terms, flags, args.min_flags, name=args.name)
        write_lexicon(lex, run.target("lexicon.csv"))
        log.info("%d annotated terms, %d flagged for review, %d kept", len(terms), len(flagged), len(lex))


def cmd_compare(args, run: Run) -> None:
    a = open_lexicon(args.a, args.a_name)
    b = open_lexicon(args.b, args.b_name)
    for spec in (args.a, args.b):
        for p in _lexicon_paths(spec):
            run.input(p)
    report = compare(a, b)
    _write_json(run.target("comparison.json"), report.as_dict())
    text = report.render()
    with open(run.target("comparison.txt"), "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    print(text)


def _lexicon_for_mode(args, run: Run) -> Lexicon:
    lex = open_lexicon(args.lexicon, args.lexicon_name)
    for p in _lexicon_paths(args.lexicon):
        run.input(p)
    if args.mode == "fine" and is_categorical(lex):
        log.warning("lexicon %s is categorical; fine mode uses its -1/0/+1 scores", lex.name)
    return lex


def cmd_score(args, run: Run) -> None:
    lex = _lexicon_for_mode(args, run)
    if args.mode == "categorical":
        from .lexicon import to_categorical

        lex = to_categorical(lex)
    run.input(args.corpus)
    run.input(args.concepts)
    records, _, _ = load_records(args)
    path = run.target("sentence_scores.csv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("doc_id,date,pos_count,neg_count,count_score,sum_score\n")
        for rec in records:
            s = score_sentence(rec, lex)
            fh.write(f"{rec.doc_id},{rec.date.isoformat()},{s.pos_count},{s.neg_count},{s.count_score},{s.sum_score!r}\n")


def cmd_ep_series(args, run: Run) -> None:
    lex = _lexicon_for_mode(args, run)
    run.input(args.corpus)
    run.input(args.concepts)
    records, totals, _ = load_records(args, args.freq)
    series = ep_series(records, lex, mode=args.mode, freq=args.freq, denominators=totals)
    if args.standardize:
        series = standardize(series)
    if args.smooth > 1:
        series = smooth(series, args.smooth)
    path = run.target(args.name)
    run.target(args.name + ".json")
    series.write(path)
    counts = monthly_counts(records, args.freq)
    with open(run.target("counts.csv"), "w", encoding="utf-8") as fh:
        fh.write("period,sentences,tokens\n")
        for key, (s, t) in counts.items():
            fh.write(f"{key},{s},{t}\n")


def _load_named_series(pairs, run: Run) -> dict[str, pd.Series]:
    out = {}
    for name, path in pairs:
        if name in out:
            raise UsageError(f"series name {name!r} given twice")
        run.input(path)
        out[name] = read_series(path)
    return out


def cmd_regress(args, run: Run) -> None:
    from .econ import build_design, ols_newey_west, render_table

    series = _load_named_series([args.target, *args.regressor], run)
    design = build_design(series, args.target[0], ar_lags=args.ar_lags, regressors=[n for n, _ in args.regressor])
    fit = ols_newey_west(design, args.bandwidth)
    with open(run.target("fit.json"), "w", encoding="utf-8") as fh:
        fh.write(fit.to_json())
    table = render_table([fit], title=f"OLS, Newey-West errors (bandwidth {fit.info['bandwidth']})")
    with open(run.target("table.txt"), "w", encoding="utf-8") as fh:
        fh.write(table + "\n")
    print(table)


def cmd_forecast(args, run: Run) -> None:
    from .econ import build_design, logit_mle, render_table

    series = _load_named_series([args.target, *args.regressor], run)
    design = build_design(series, args.target[0], horizon=args.horizon, regressors=[n for n, _ in args.regressor])
    fit = logit_mle(design)
    fit.info["horizon"] = args.horizon
    with open(run.target("fit.json"), "w", encoding="utf-8") as fh:
        fh.write(fit.to_json())
    table = render_table([fit], title=f"Logit, horizon {args.horizon}")
    with open(run.target("table.txt"), "w", encoding="utf-8") as fh:
        fh.write(table + "\n")
    with open(run.target("fitted.csv"), "w", encoding="utf-8") as fh:
        fh.write("month,y,probability\n")
        for key, y, p in zip(design.index, design.y, fit.fitted):
            fh.write(f"{key},{int(y)},{float(p)!r}\n")
    print(table)


def cmd_auc_test(args, run: Run) -> None:
    from .econ import auc_compare, build_design, logit_mle, roc_auc

    name_a, name_b = args.model_a[0], args.model_b[0]
    if name_a == name_b:
        raise UsageError("--model-a and --model-b need different names")
    series = _load_named_series([args.target, *args.regressor, args.model_a, args.model_b], run)
    base = [n for n, _ in args.regressor]
    rows = []
    for h in args.horizons:
        design = build_design(series, args.target[0], horizon=h, regressors=[*base, name_a, name_b])
        cols = ["const", *base]
        p_a = logit_mle(design.select([*cols, name_a])).fitted
        p_b = logit_mle(design.select([*cols, name_b])).fitted
        res = auc_compare(p_a, p_b, design.y, method=args.method, n_boot=args.n_boot, seed=args.seed)
        rows.append(
            {
                "horizon": h,
                "n_obs": design.n_obs,
                "auc_a": roc_auc(p_a, design.y).auc,
                "auc_b": roc_auc(p_b, design.y).auc,
                "z": res.z,
                "p_value": res.p_value,
            }
        )
    path = run.target("auc_test.csv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("horizon,n_obs,auc_a,auc_b,z,p_value\n")
        for r in rows:
            fh.write(f"{r['horizon']},{r['n_obs']},{r['auc_a']!r},{r['auc_b']!r},{r['z']!r},{r['p_value']!r}\n")
    print(f"H0: AUC({name_a}) >= AUC({name_b}); one-sided p-values ({args.method})")
    for r in rows:
        print(f"h={r['horizon']:>2}  auc_a={r['auc_a']:.3f}  auc_b={r['auc_b']:.3f}  p={r['p_value']:.3f}")


def cmd_decompose(args, run: Run) -> None:
    from .econ import delta_ep_decomposition

    base = _lexicon_for_mode(args, run)
    reference = open_lexicon(args.reference, args.reference_name)
    for p in _lexicon_paths(args.reference):
        run.input(p)
    run.input(args.corpus)
    run.input(args.concepts)
    records, totals, _ = load_records(args)
    dec = delta_ep_decomposition(records, base, reference, mode=args.mode, denominators=totals)
    frame = dec.frame()
    with open(run.target("decomposition.csv"), "w", encoding="utf-8") as fh:
        fh.write("month,ep,delta_disagree,delta_only\n")
        for key, row in frame.iterrows():
            vals = ["" if np.isnan(v) else repr(float(v)) for v in row]
            fh.write(f"{key},{','.join(vals)}\n")
    for column in ("ep", "delta_disagree", "delta_only"):
        with open(run.target(f"{column}.csv"), "w", encoding="utf-8") as fh:
            fh.write("month,value\n")
            for key, v in frame[column].items():
                fh.write(f"{key},{'' if np.isnan(v) else repr(float(v))}\n")


# -- parser ------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=Path("."), help="output directory (created if missing)")
    p.add_argument("--force", action="store_true", help="overwrite existing output files")
    p.add_argument("-v", "--verbose", action="store_true")


def _corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", required=True, help="JSON-lines corpus (id, date, source, title, body)")
    p.add_argument("--concepts", required=True, help="concept list, one unigram/bigram per line")
    p.add_argument("--strict", action="store_true", help="fail on the first malformed corpus line")
    p.add_argument("--exclude-topic", action="append", default=[], metavar="NAME")
    p.add_argument("--jobs", type=int, default=None, help="worker processes for corpus stages (default: all cores)")
    p.add_argument(
        "--denominator",
        choices=["filtered", "all"],
        default="filtered",
        help="count words over concept sentences only, or over every sentence",
    )


def _lexicon_args(p: argparse.ArgumentParser, flag: str = "--lexicon") -> None:
    p.add_argument(flag, required=True, help="term,score file, wordlists:NEG,POS or master:PATH")
    p.add_argument(flag + "-name", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="econlex", description=__doc__)
    parser.add_argument("--version", action="version", version=f"econlex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "build-lexicon",
        help="harvest modifier candidates and turn annotations into a lexicon",
        description="Lexicon construction: count modifier words around economic-concept noun heads in "
        "dependency-parsed text, shortlist them by reviewer votes, aggregate annotator scores by "
        "their median and drop terms flagged as ambiguous.",
    )
    p.add_argument("--conllu", action="append", default=[], help="CoNLL-U file (repeatable)")
    p.add_argument("--concepts")
    p.add_argument("--min-count", type=int, default=65)
    p.add_argument("--relations", help="JSON file overriding the admitted dependency relations")
    p.add_argument("--count-key", choices=["lemma", "form"], default="lemma")
    p.add_argument("--votes", help="CSV lemma,vote1,vote2,... of sentiment-bearing judgements")
    p.add_argument("--quorum", type=int, default=2)
    p.add_argument("--annotations", help="CSV term,annotator_id,score,phrase")
    p.add_argument("--review-flags", help="CSV term,flag_count")
    p.add_argument("--disagreement-threshold", type=float, default=0.3)
    p.add_argument("--min-flags", type=int, default=1)
    p.add_argument("--name", default="EL")
    _common(p)
    p.set_defaults(func=cmd_build_lexicon)

    p = sub.add_parser(
        "compare",
        help="word-level comparison of two lexicons",
        description="Lexicon comparison: shared terms, sign agreement by class, and terms unique to each side.",
    )
    p.add_argument("--a", required=True)
    p.add_argument("--a-name", default=None)
    p.add_argument("--b", required=True)
    p.add_argument("--b-name", default=None)
    _common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser(
        "score",
        help="score concept sentences against a lexicon",
        description="Sentence scoring: positive minus negative term counts and the sum of term scores "
        "for every sentence that mentions an economic concept.",
    )
    _corpus_args(p)
    _lexicon_args(p)
    p.add_argument("--mode", choices=["categorical", "fine"], default="categorical")
    _common(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser(
        "ep-series",
        help="economic pessimism time series",
        description="Economic pessimism: minus the score-weighted lexicon term frequency divided by the "
        "number of words in each period, optionally standardized and then smoothed.",
    )
    _corpus_args(p)
    _lexicon_args(p)
    p.add_argument("--mode", choices=["categorical", "fine"], default="categorical")
    p.add_argument("--freq", choices=["monthly", "daily"], default="monthly")
    p.add_argument("--smooth", type=int, default=1, metavar="K", help="trailing moving-average window")
    p.add_argument("--standardize", action="store_true")
    p.add_argument("--name", default="ep.csv", help="output file name")
    _common(p)
    p.set_defaults(func=cmd_ep_series)

    p = sub.add_parser(
        "regress",
        help="autoregression plus pessimism regressors with Newey-West errors",
        description="Uncertainty and consumer-sentiment regressions: OLS of a monthly target on an "
        "intercept, its own lags and regressors dated t, with Bartlett-kernel HAC standard errors.",
    )
    p.add_argument("--target", required=True, type=_named_path, metavar="NAME=PATH")
    p.add_argument("--regressor", action="append", default=[], type=_named_path, metavar="NAME=PATH")
    p.add_argument("--ar-lags", type=int, default=2)
    p.add_argument("--bandwidth", type=_bandwidth, default="auto")
    _common(p)
    p.set_defaults(func=cmd_regress)

    p = sub.add_parser(
        "forecast",
        help="logistic recession forecast at horizon h",
        description="Recession forecasting: logistic regression of the recession indicator at t+h on "
        "regressors dated t, estimated by maximum likelihood.",
    )
    p.add_argument("--target", required=True, type=_named_path, metavar="NAME=PATH")
    p.add_argument("--regressor", action="append", default=[], type=_named_path, metavar="NAME=PATH")
    p.add_argument("--horizon", type=int, default=3)
    _common(p)
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser(
        "auc-test",
        help="one-sided paired AUC comparison across horizons",
        description="Forecast comparison: for each horizon fit the logistic model with pessimism "
        "measure A and with B, then test H0 AUC(A) >= AUC(B) against AUC(A) < AUC(B).",
    )
    p.add_argument("--target", required=True, type=_named_path, metavar="NAME=PATH")
    p.add_argument("--regressor", action="append", default=[], type=_named_path, metavar="NAME=PATH")
    p.add_argument("--model-a", required=True, type=_named_path, metavar="NAME=PATH")
    p.add_argument("--model-b", required=True, type=_named_path, metavar="NAME=PATH")
    p.add_argument("--horizons", type=_horizons, default=list(range(1, 13)), help="e.g. 1..12 or 1,3,6")
    p.add_argument("--method", choices=["delong", "bootstrap"], default="delong")
    p.add_argument("--n-boot", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(func=cmd_auc_test)

    p = sub.add_parser(
        "decompose",
        help="pessimism changes from sign corrections and added coverage",
        description="Lexicon decomposition: pessimism on a base lexicon, plus the change when its "
        "opposite-sign terms take the reference score and the change when reference terms missing "
        "or neutral in the base are added.",
    )
    _corpus_args(p)
    _lexicon_args(p)
    _lexicon_args(p, "--reference")
    p.add_argument("--mode", choices=["categorical", "fine"], default="categorical")
    _common(p)
    p.set_defaults(func=cmd_decompose)

    _apply_config_defaults(sub)
    return parser


def _apply_config_defaults(sub) -> None:
    """Per-subcommand defaults from ``$ECONLEX_CONFIG_DIR/defaults.json``."""
    config_dir = os.environ.get(CONFIG_ENV)
    if not config_dir:
        return
    path = Path(config_dir) / "defaults.json"
    if not path.is_file():
        return
    with open(path, encoding="utf-8") as fh:
        defaults = json.load(fh)
    for name, values in defaults.items():
        if name in sub.choices:
            sub.choices[name].set_defaults(**{k.replace("-", "_"): v for k, v in values.items()})


_PATH_ARGS = ("corpus", "concepts", "relations", "votes", "annotations", "review_flags")


def _validate_paths(args) -> None:
    paths = [getattr(args, k, None) for k in _PATH_ARGS]
    paths += getattr(args, "conllu", []) or []
    for key in ("lexicon", "reference", "a", "b"):
        spec = getattr(args, key, None)
        if spec:
            paths += _lexicon_paths(spec)
    for key in ("target", "model_a", "model_b"):
        pair = getattr(args, key, None)
        if pair:
            paths.append(pair[1])
    paths += [p for _, p in getattr(args, "regressor", []) or []]
    for p in paths:
        if p and not Path(p).is_file():
            raise UsageError(f"no such file: {p}")
    if getattr(args, "smooth", 1) < 1:
        raise UsageError("--smooth must be >= 1")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if getattr(args, "min_count", 1) < 1:
        raise UsageError("--min-count must be >= 1")


def _planned_outputs(args) -> list[str]:
    if args.command == "build-lexicon":
        names = []
        if args.conllu:
            names += ["candidates.tsv"] + (["shortlist.txt"] if args.votes else [])
        if args.annotations:
            names += ["disagreement.txt", "lexicon.csv"]
        return names
    return {
        "compare": ["comparison.json", "comparison.txt"],
        "score": ["sentence_scores.csv"],
        "ep-series": [getattr(args, "name", ""), f"{getattr(args, 'name', '')}.json", "counts.csv"],
        "regress": ["fit.json", "table.txt"],
        "forecast": ["fit.json", "table.txt", "fitted.csv"],
        "auc-test": ["auc_test.csv"],
        "decompose": ["decomposition.csv", "ep.csv", "delta_disagree.csv", "delta_only.csv"],
    }[args.command]


def _check_overwrite(args) -> None:
    if args.force:
        return
    clash = [n for n in _planned_outputs(args) if (args.out / n).exists()]
    if clash:
        raise UsageError(f"{', '.join(clash)} already exist in {args.out}; pass --force to overwrite")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        _validate_paths(args)
        _check_overwrite(args)
        args.out.mkdir(parents=True, exist_ok=True)
        run = Run(args, args.out)
        args.func(args, run)
        run.finish()
    except UsageError as exc:
        print(f"econlex {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - report and exit 1
        log.debug("failure", exc_info=True)
        print(f"econlex {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
