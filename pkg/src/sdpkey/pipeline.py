"""Sentence-pair scoring, corpus evaluation, and report emission.

A corpus is a list of groups, each pairing one reference with several
system outputs and a human-marked best system. Every system is scored
against the reference; the system with the highest score is the metric's
pick, and precision is the fraction of groups where pick and human agree.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

from .baselines import bleu, vsm_cosine
from .errors import UsageError
from .ingest import DEFAULT_DENYLIST, RelationDenylist
from .keywords import KeywordScore, keyword_similarity
from .model import AnnotatedSentence, CorpusGroup, ScoreBreakdown
from .semdep import compare_graphs
from .wordsim import WordSimilarity

__all__ = [
    "EvaluationReport",
    "GroupResult",
    "METRICS",
    "SystemScore",
    "SystemStats",
    "emit_report_csv",
    "emit_report_json",
    "evaluate_corpus",
    "final_score",
    "metric_label",
    "report_to_obj",
    "score_pair",
]

# Selection metrics a report knows how to rank systems by. "sdpkey" is the
# combined score, "sdp" the graph component alone.
METRICS = ("sdpkey", "sdp", "bleu", "vsm")

_METRIC_LABELS = {"sdpkey": "sdp+key", "sdp": "sdp", "bleu": "bleu", "vsm": "vsm"}


def metric_label(metric: str) -> str:
    """Human-facing name of a selection metric."""
    return _METRIC_LABELS[metric]


def final_score(sim_de: float, sim_kw: float | None) -> float:
    """Mean of the two components; the graph score alone when the keyword
    component is absent."""
    if sim_kw is None:
        return sim_de
    return (sim_de + sim_kw) / 2.0


def score_pair(
    provider: WordSimilarity,
    reference: AnnotatedSentence,
    hypothesis: AnnotatedSentence,
    denylist: RelationDenylist = DEFAULT_DENYLIST,
    use_keywords: bool = True,
) -> ScoreBreakdown:
    """Score a hypothesis against a reference, keeping all the evidence."""
    dep = compare_graphs(provider, reference.graph, hypothesis.graph, denylist)
    if use_keywords:
        kw = keyword_similarity(provider, reference.keywords, hypothesis.keywords)
    else:
        kw = KeywordScore(value=None, matches=())
    return ScoreBreakdown(
        sim_de=dep.value,
        sim_kw=kw.value,
        final=final_score(dep.value, kw.value),
        forward_relation_scores=dep.forward_relations,
        backward_relation_scores=dep.backward_relations,
        matched_keyword_pairs=kw.matches,
    )


@dataclass(frozen=True)
class SystemScore:
    """One system's scores against its group's reference."""

    system: str
    breakdown: ScoreBreakdown
    bleu: float
    vsm: float

    def by_metric(self, metric: str) -> float:
        if metric == "sdpkey":
            return self.breakdown.final
        if metric == "sdp":
            return self.breakdown.sim_de
        if metric == "bleu":
            return self.bleu
        if metric == "vsm":
            return self.vsm
        raise ValueError(f"unknown metric {metric!r}")


@dataclass(frozen=True)
class GroupResult:
    """Scores and selections for one corpus group."""

    group_id: str
    human_best: str
    scores: tuple[SystemScore, ...]
    selected_system: str
    selected_by_metric: Mapping[str, str]

    @property
    def matched(self) -> bool:
        return self.selected_system == self.human_best


@dataclass(frozen=True)
class SystemStats:
    """Population mean/variance of one system's scores across all groups.

    Keyword statistics cover only the groups where the component was
    present; they are None when it never was.
    """

    count: int
    final_mean: float
    final_variance: float
    sim_de_mean: float
    sim_de_variance: float
    sim_kw_mean: float | None
    sim_kw_variance: float | None


@dataclass(frozen=True)
class EvaluationReport:
    """Everything a corpus run produced."""

    groups: tuple[GroupResult, ...]
    precision: float
    precision_by_metric: Mapping[str, float]
    per_system: Mapping[str, SystemStats]


def _score_group(
    provider: WordSimilarity,
    group: CorpusGroup,
    denylist: RelationDenylist,
    use_keywords: bool,
) -> GroupResult:
    scores = []
    ref_tokens = _baseline_tokens(group.reference)
    for system in group.systems:
        breakdown = score_pair(provider, group.reference, system.sentence, denylist, use_keywords)
        hyp_tokens = _baseline_tokens(system.sentence)
        scores.append(
            SystemScore(
                system=system.name,
                breakdown=breakdown,
                bleu=bleu(ref_tokens, hyp_tokens),
                vsm=vsm_cosine(ref_tokens, hyp_tokens),
            )
        )
    selected_by_metric = {
        metric: _select_best(scores, metric) for metric in METRICS
    }
    return GroupResult(
        group_id=group.id,
        human_best=group.human_best,
        scores=tuple(scores),
        selected_system=selected_by_metric["sdpkey"],
        selected_by_metric=selected_by_metric,
    )


def _baseline_tokens(sentence: AnnotatedSentence) -> tuple[str, ...]:
    # Baselines reuse the annotation's segmentation; fall back to
    # whitespace for sentences without a parse.
    if sentence.graph.tokens:
        return sentence.graph.surfaces
    return tuple(sentence.text.split())


def _select_best(scores: Sequence[SystemScore], metric: str) -> str:
    # Strictly-greater scan keeps the earliest system on ties.
    best = scores[0]
    for candidate in scores[1:]:
        if candidate.by_metric(metric) > best.by_metric(metric):
            best = candidate
    return best.system


def evaluate_corpus(
    provider: WordSimilarity,
    groups: Sequence[CorpusGroup],
    denylist: RelationDenylist = DEFAULT_DENYLIST,
    use_keywords: bool = True,
    jobs: int = 1,
) -> EvaluationReport:
    """Score every group, pick winners, and aggregate statistics.

    Groups are independent; ``jobs`` > 1 fans their scoring out over a
    thread pool without changing the result order.
    """
    if not groups:
        raise UsageError("corpus has no groups")
    if jobs < 1:
        raise UsageError("jobs must be at least 1")
    if jobs == 1:
        results = [
            _score_group(provider, group, denylist, use_keywords) for group in groups
        ]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    lambda group: _score_group(provider, group, denylist, use_keywords),
                    groups,
                )
            )
    precision_by_metric = {
        metric: sum(
            1 for result in results if result.selected_by_metric[metric] == result.human_best
        )
        / len(results)
        for metric in METRICS
    }
    return EvaluationReport(
        groups=tuple(results),
        precision=precision_by_metric["sdpkey"],
        precision_by_metric=precision_by_metric,
        per_system=_system_stats(results),
    )


def _system_stats(results: Sequence[GroupResult]) -> dict[str, SystemStats]:
    finals: dict[str, list[float]] = {}
    sim_des: dict[str, list[float]] = {}
    sim_kws: dict[str, list[float]] = {}
    for result in results:
        for score in result.scores:
            finals.setdefault(score.system, []).append(score.breakdown.final)
            sim_des.setdefault(score.system, []).append(score.breakdown.sim_de)
            if score.breakdown.sim_kw is not None:
                sim_kws.setdefault(score.system, []).append(score.breakdown.sim_kw)
    stats = {}
    for system in finals:
        kw_values = sim_kws.get(system, [])
        stats[system] = SystemStats(
            count=len(finals[system]),
            final_mean=statistics.fmean(finals[system]),
            final_variance=statistics.pvariance(finals[system]),
            sim_de_mean=statistics.fmean(sim_des[system]),
            sim_de_variance=statistics.pvariance(sim_des[system]),
            sim_kw_mean=statistics.fmean(kw_values) if kw_values else None,
            sim_kw_variance=statistics.pvariance(kw_values) if kw_values else None,
        )
    return stats


# ---------------------------------------------------------------------------
# Report emission
# ---------------------------------------------------------------------------

def report_to_obj(report: EvaluationReport, metric: str = "sdpkey") -> dict:
    """JSON-ready view of a report; floats keep full precision."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    return {
        "metric": metric,
        "precision": report.precision_by_metric[metric],
        "precision_by_metric": dict(report.precision_by_metric),
        "groups": [
            {
                "id": result.group_id,
                "human_best": result.human_best,
                "selected": result.selected_by_metric[metric],
                "selected_by_metric": dict(result.selected_by_metric),
                "systems": [
                    {
                        "name": score.system,
                        "sim_de": score.breakdown.sim_de,
                        "sim_kw": score.breakdown.sim_kw,
                        "final": score.breakdown.final,
                        "bleu": score.bleu,
                        "vsm": score.vsm,
                    }
                    for score in result.scores
                ],
            }
            for result in report.groups
        ],
        "per_system": {
            system: {
                "count": stats.count,
                "final": {"mean": stats.final_mean, "variance": stats.final_variance},
                "sim_de": {"mean": stats.sim_de_mean, "variance": stats.sim_de_variance},
                "sim_kw": (
                    None
                    if stats.sim_kw_mean is None
                    else {"mean": stats.sim_kw_mean, "variance": stats.sim_kw_variance}
                ),
            }
            for system, stats in sorted(report.per_system.items())
        },
    }


def emit_report_json(report: EvaluationReport, metric: str = "sdpkey") -> str:
    return json.dumps(report_to_obj(report, metric), ensure_ascii=False, indent=2) + "\n"


def emit_report_csv(report: EvaluationReport, metric: str = "sdpkey") -> str:
    """One row per (group, system) with fixed columns and 4-decimal scores.

    The selected column names the group's winner under the requested
    metric; the score columns always show the combined metric's parts.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["group_id", "system", "sim_de", "sim_kw", "final", "selected", "human_best"]
    )
    for result in report.groups:
        selected = result.selected_by_metric[metric]
        for score in result.scores:
            writer.writerow(
                [
                    result.group_id,
                    score.system,
                    f"{score.breakdown.sim_de:.4f}",
                    "" if score.breakdown.sim_kw is None else f"{score.breakdown.sim_kw:.4f}",
                    f"{score.breakdown.final:.4f}",
                    selected,
                    result.human_best,
                ]
            )
    return out.getvalue()
