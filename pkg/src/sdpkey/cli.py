"""Command-line interface.

Subcommands: score a single reference/hypothesis pair, evaluate a corpus,
annotate raw sentences through the service client, and run a baseline
metric on a pair. Settings layer as flags > environment > config file >
defaults; the config file is TOML with flat keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .annotator import MODES, AnnotationCache, AnnotationClient, AnnotatorConfig
from .baselines import bleu, vsm_cosine
from .errors import MetricError, UsageError
from .ingest import (
    DEFAULT_DENYLIST,
    RelationDenylist,
    emit_keywords_json,
    emit_sdp_json,
    load_annotation,
    load_corpus,
)
from .model import AnnotatedSentence, ScoreBreakdown
from .pipeline import (
    METRICS,
    emit_report_csv,
    emit_report_json,
    evaluate_corpus,
    metric_label,
    score_pair,
)
from .wordsim import (
    ExactMatchProvider,
    FusionProvider,
    WordSimilarity,
    load_embeddings,
    load_lexicon,
)

__all__ = ["entry_point", "main"]

ENV_ENDPOINT = "SDPKEY_ENDPOINT"
ENV_TOKEN = "SDPKEY_TOKEN"

_PROVIDERS = ("exact", "lexicon", "embedding", "fusion")

_DEFAULTS: dict[str, Any] = {
    "provider": "exact",
    "lexicon": None,
    "embeddings": None,
    "denylist": "mPunc",
    "endpoint": "",
    "token": "",
    "timeout": 10.0,
    "max_retries": 3,
    "cache": None,
}

_CONFIG_KEYS = frozenset(_DEFAULTS)


def _load_config_file(path: str) -> dict[str, Any]:
    try:
        with open(path, "rb") as handle:
            doc = tomllib.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"config file {path} is not valid TOML: {exc}") from exc
    unknown = set(doc) - _CONFIG_KEYS
    if unknown:
        raise UsageError(
            f"config file {path} has unknown keys: {', '.join(sorted(unknown))}"
        )
    return doc


def _settings(args: argparse.Namespace) -> dict[str, Any]:
    """Layer defaults, config file, environment, and flags."""
    settings = dict(_DEFAULTS)
    config_path = getattr(args, "config", None)
    if config_path:
        settings.update(_load_config_file(config_path))
    if os.environ.get(ENV_ENDPOINT):
        settings["endpoint"] = os.environ[ENV_ENDPOINT]
    if os.environ.get(ENV_TOKEN):
        settings["token"] = os.environ[ENV_TOKEN]
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _denylist(settings: dict[str, Any]) -> RelationDenylist:
    raw = settings["denylist"]
    if isinstance(raw, str):
        labels = [label.strip() for label in raw.split(",")]
    elif isinstance(raw, list) and all(isinstance(label, str) for label in raw):
        labels = [label.strip() for label in raw]
    else:
        raise UsageError("denylist must be a comma-separated string or list of labels")
    return RelationDenylist.of(*[label for label in labels if label])


def _provider(settings: dict[str, Any]) -> WordSimilarity:
    name = settings["provider"]
    if name == "exact":
        return ExactMatchProvider()
    if name == "lexicon":
        if not settings["lexicon"]:
            raise UsageError("provider 'lexicon' requires --lexicon PATH")
        return load_lexicon(settings["lexicon"])
    if name == "embedding":
        if not settings["embeddings"]:
            raise UsageError("provider 'embedding' requires --embeddings PATH")
        return load_embeddings(settings["embeddings"])
    if name == "fusion":
        parts: list[tuple[WordSimilarity, float]] = []
        if settings["lexicon"]:
            parts.append((load_lexicon(settings["lexicon"]), 1.0))
        if settings["embeddings"]:
            parts.append((load_embeddings(settings["embeddings"]), 1.0))
        if not parts:
            raise UsageError("provider 'fusion' requires --lexicon and/or --embeddings")
        return FusionProvider(parts)
    raise UsageError(f"unknown provider {name!r} (expected one of {', '.join(_PROVIDERS)})")


def _breakdown_obj(breakdown: ScoreBreakdown) -> dict:
    return {
        "sim_de": breakdown.sim_de,
        "sim_kw": breakdown.sim_kw,
        "final": breakdown.final,
        "forward_relations": dict(breakdown.forward_relation_scores),
        "backward_relations": dict(breakdown.backward_relation_scores),
        "matched_keywords": [
            {
                "ref": match.ref_word,
                "hyp": match.hyp_word,
                "similarity": match.similarity,
                "weight": match.weight,
            }
            for match in breakdown.matched_keyword_pairs
        ],
    }


def _baseline_tokens(sentence: AnnotatedSentence) -> tuple[str, ...]:
    if sentence.graph.tokens:
        return sentence.graph.surfaces
    return tuple(sentence.text.split())


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_score(args: argparse.Namespace) -> int:
    settings = _settings(args)
    provider = _provider(settings)
    denylist = _denylist(settings)
    reference = load_annotation(args.reference)
    hypothesis = load_annotation(args.hypothesis)
    breakdown = score_pair(
        provider, reference, hypothesis, denylist, use_keywords=not args.no_keywords
    )
    print(json.dumps(_breakdown_obj(breakdown), ensure_ascii=False, indent=2))
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    settings = _settings(args)
    provider = _provider(settings)
    denylist = _denylist(settings)
    groups = load_corpus(args.corpus)
    report = evaluate_corpus(
        provider,
        groups,
        denylist,
        use_keywords=not args.no_keywords,
        jobs=args.jobs,
    )
    metric = args.metric
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.json").write_text(emit_report_json(report, metric), encoding="utf-8")
    (out_dir / "report.csv").write_text(emit_report_csv(report, metric), encoding="utf-8")
    for shown in [metric] + [m for m in ("sdpkey", "sdp") if m != metric]:
        print(f"{metric_label(shown)} P={report.precision_by_metric[shown]:.4f}")
    print()
    print("system  groups  final mean/var  sim_de mean/var  sim_kw mean/var")
    for system in sorted(report.per_system):
        stats = report.per_system[system]
        if stats.sim_kw_mean is None:
            kw_cell = "-"
        else:
            kw_cell = f"{stats.sim_kw_mean:.4f}/{stats.sim_kw_variance:.4f}"
        print(
            f"{system}  {stats.count}  "
            f"{stats.final_mean:.4f}/{stats.final_variance:.4f}  "
            f"{stats.sim_de_mean:.4f}/{stats.sim_de_variance:.4f}  "
            f"{kw_cell}"
        )
    return 0


def cmd_annotate(args: argparse.Namespace) -> int:
    settings = _settings(args)
    cache_dir = settings["cache"]
    if args.mode in ("record", "replay") and not cache_dir:
        raise UsageError(f"{args.mode} mode requires --cache DIR")
    config = AnnotatorConfig(
        endpoint=settings["endpoint"],
        token=settings["token"],
        timeout=float(settings["timeout"]),
        max_retries=int(settings["max_retries"]),
        mode=args.mode,
    )
    if args.mode == "live" and not config.endpoint:
        raise UsageError(
            "live mode requires an endpoint (flag, config file, or environment)"
        )
    cache = AnnotationCache(cache_dir) if cache_dir else None
    client = AnnotationClient(config, cache)
    try:
        lines = Path(args.input).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read input file {args.input}: {exc}") from exc
    sentences = [line.strip() for line in lines if line.strip()]
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for position, text in enumerate(sentences, start=1):
        annotated = client.annotate(text)
        stem = f"{position:04d}"
        (out_dir / f"{stem}.sdp.json").write_text(
            emit_sdp_json(annotated.graph), encoding="utf-8"
        )
        (out_dir / f"{stem}.keywords.json").write_text(
            emit_keywords_json(annotated.keywords), encoding="utf-8"
        )
    print(f"annotated {len(sentences)} sentences -> {out_dir}")
    return 0


def cmd_baseline(args: argparse.Namespace) -> int:
    reference = load_annotation(args.reference)
    hypothesis = load_annotation(args.hypothesis)
    ref_tokens = _baseline_tokens(reference)
    hyp_tokens = _baseline_tokens(hypothesis)
    if args.metric == "bleu":
        score = bleu(ref_tokens, hyp_tokens)
    else:
        score = vsm_cosine(ref_tokens, hyp_tokens)
    print(json.dumps({"metric": args.metric, "score": score}))
    return 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="TOML config file")

    providers = argparse.ArgumentParser(add_help=False)
    providers.add_argument(
        "--provider",
        choices=_PROVIDERS,
        default=None,
        help="word similarity backend (default exact)",
    )
    providers.add_argument("--lexicon", metavar="PATH", help="thesaurus-code TSV")
    providers.add_argument("--embeddings", metavar="PATH", help="word-vector text file")
    providers.add_argument(
        "--denylist",
        metavar="LABELS",
        default=None,
        help="comma-separated relation labels to drop (default mPunc)",
    )
    providers.add_argument(
        "--no-keywords",
        action="store_true",
        help="score with the dependency component only",
    )

    parser = argparse.ArgumentParser(
        prog="sdpkey",
        description="Machine translation scoring from semantic dependency graphs and keywords",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser(
        "score",
        parents=[common, providers],
        help="score one hypothesis against one reference",
    )
    p_score.add_argument("reference", help="reference annotation JSON")
    p_score.add_argument("hypothesis", help="hypothesis annotation JSON")
    p_score.set_defaults(func=cmd_score)

    p_eval = sub.add_parser(
        "evaluate",
        parents=[common, providers],
        help="evaluate a corpus and write report.json/report.csv",
    )
    p_eval.add_argument("corpus", help="corpus JSONL file")
    p_eval.add_argument("--metric", choices=METRICS, default="sdpkey")
    p_eval.add_argument("--jobs", type=int, default=1, metavar="N")
    p_eval.add_argument("--out", default=".", metavar="DIR")
    p_eval.add_argument(
        "--mode",
        choices=MODES,
        default="replay",
        help="annotation mode; corpora carry their annotations, so no network is used",
    )
    p_eval.set_defaults(func=cmd_evaluate)

    p_ann = sub.add_parser(
        "annotate",
        parents=[common],
        help="annotate raw sentences through the service client",
    )
    p_ann.add_argument("input", help="text file, one sentence per line")
    p_ann.add_argument("--mode", choices=MODES, default="replay")
    p_ann.add_argument("--cache", metavar="DIR", default=None)
    p_ann.add_argument("--out", default="annotations", metavar="DIR")
    p_ann.add_argument("--endpoint", metavar="URL", default=None)
    p_ann.add_argument("--token", metavar="TOKEN", default=None)
    p_ann.add_argument("--timeout", type=float, default=None, metavar="SECONDS")
    p_ann.add_argument("--max-retries", dest="max_retries", type=int, default=None, metavar="N")
    p_ann.set_defaults(func=cmd_annotate)

    p_base = sub.add_parser(
        "baseline",
        parents=[common],
        help="run a baseline metric on one annotated pair",
    )
    p_base.add_argument("reference", help="reference annotation JSON")
    p_base.add_argument("hypothesis", help="hypothesis annotation JSON")
    p_base.add_argument("--metric", choices=("bleu", "vsm"), default="bleu")
    p_base.set_defaults(func=cmd_baseline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MetricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())
