"""Sentence similarity over semantic dependency graphs.

Two graphs are compared through their relation groups. Within one
direction, each source pair is matched to the best same-relation pair on
the target side (targets may be reused), pair scores average into a
relation score, and relation scores average into the directional score.
The final value is the mean of both directions, so adding material to
either sentence lowers the score even when the other direction is perfect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .ingest import DEFAULT_DENYLIST, RelationDenylist, extract_relation_groups
from .model import AssociationPair, RelationGroups, SemGraph
from .wordsim import WordSimilarity, sw

__all__ = [
    "DependencyScore",
    "compare_graphs",
    "compare_groups",
    "directional_scores",
    "pair_similarity",
    "relation_score",
    "sim_de",
]


@dataclass(frozen=True)
class DependencyScore:
    """Bidirectional graph similarity with its per-relation evidence.

    ``forward`` scans reference pairs against the hypothesis (coverage of
    the reference), ``backward`` scans hypothesis pairs against the
    reference (precision of the hypothesis); ``value`` is their mean.
    """

    forward: float
    backward: float
    value: float
    forward_relations: Mapping[str, float]
    backward_relations: Mapping[str, float]


def pair_similarity(
    provider: WordSimilarity, first: AssociationPair, second: AssociationPair
) -> float:
    """Mean of governor-to-governor and dependent-to-dependent similarity."""
    return (
        sw(provider, first.head, second.head) + sw(provider, first.dep, second.dep)
    ) / 2.0


def relation_score(
    provider: WordSimilarity,
    source_pairs: Sequence[AssociationPair],
    target_pairs: Sequence[AssociationPair],
) -> float:
    """Mean over source pairs of the best match among the target pairs.

    Target pairs may serve several source pairs; this is not an assignment.
    """
    if not source_pairs:
        raise ValueError("source relation group must not be empty")
    if not target_pairs:
        return 0.0
    total = 0.0
    for source in source_pairs:
        total += max(pair_similarity(provider, source, target) for target in target_pairs)
    return total / len(source_pairs)


def directional_scores(
    provider: WordSimilarity, source: RelationGroups, target: RelationGroups
) -> dict[str, float]:
    """Score every source relation against the target side.

    A relation with no counterpart on the target side scores 0.0.
    """
    scores: dict[str, float] = {}
    for relation, pairs in source.items():
        scores[relation] = relation_score(provider, pairs, target.get(relation, ()))
    return scores


def _directional_value(scores: Mapping[str, float]) -> float:
    if not scores:
        return 0.0
    return sum(scores.values()) / len(scores)


def compare_groups(
    provider: WordSimilarity, reference: RelationGroups, hypothesis: RelationGroups
) -> DependencyScore:
    """Score two relation groupings bidirectionally.

    Two empty sides are identical by convention (1.0); one empty side has
    nothing in common with the other (0.0).
    """
    if not reference and not hypothesis:
        return DependencyScore(
            forward=1.0,
            backward=1.0,
            value=1.0,
            forward_relations={},
            backward_relations={},
        )
    forward_relations = directional_scores(provider, reference, hypothesis)
    backward_relations = directional_scores(provider, hypothesis, reference)
    forward = _directional_value(forward_relations)
    backward = _directional_value(backward_relations)
    return DependencyScore(
        forward=forward,
        backward=backward,
        value=(forward + backward) / 2.0,
        forward_relations=forward_relations,
        backward_relations=backward_relations,
    )


def compare_graphs(
    provider: WordSimilarity,
    reference: SemGraph,
    hypothesis: SemGraph,
    denylist: RelationDenylist = DEFAULT_DENYLIST,
) -> DependencyScore:
    """Extract relation groups from both graphs and score them."""
    return compare_groups(
        provider,
        extract_relation_groups(reference, denylist),
        extract_relation_groups(hypothesis, denylist),
    )


def sim_de(
    provider: WordSimilarity,
    reference: SemGraph,
    hypothesis: SemGraph,
    denylist: RelationDenylist = DEFAULT_DENYLIST,
) -> float:
    """Bidirectional dependency similarity of two graphs, in [0, 1]."""
    return compare_graphs(provider, reference, hypothesis, denylist).value
