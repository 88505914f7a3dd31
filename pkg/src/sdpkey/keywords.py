"""Weighted keyword-set similarity.

Keywords from both sentences span a similarity matrix; pairs are picked by
repeatedly taking the global maximum and retiring its row and column, so
each keyword matches at most once. Matched pairs are averaged with weights
drawn from the keywords' own extraction scores. Leftover keywords on the
longer side do not contribute.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import KeywordSet, MatchedKeyword
from .wordsim import WordSimilarity, sw

__all__ = [
    "KeywordScore",
    "keyword_similarity",
    "match_keywords",
    "similarity_matrix",
]


@dataclass(frozen=True)
class KeywordScore:
    """Keyword similarity plus the matching that produced it.

    ``value`` is None when both sentences lack keywords, in which case the
    component is absent rather than zero.
    """

    value: float | None
    matches: tuple[MatchedKeyword, ...]


def similarity_matrix(
    provider: WordSimilarity, reference: KeywordSet, hypothesis: KeywordSet
) -> np.ndarray:
    """n x m word-similarity matrix, reference rows by hypothesis columns."""
    return np.array(
        [
            [sw(provider, ref.word, hyp.word) for hyp in hypothesis]
            for ref in reference
        ],
        dtype=float,
    ).reshape(len(reference), len(hypothesis))


def match_keywords(
    provider: WordSimilarity, reference: KeywordSet, hypothesis: KeywordSet
) -> tuple[MatchedKeyword, ...]:
    """Greedy max-first matching of two keyword sets.

    Each of the min(n, m) steps takes the largest remaining cell (ties go
    to the smallest row, then column) and deletes its row and column. The
    pair's weight is the mean of the two extraction scores.
    """
    matrix = similarity_matrix(provider, reference, hypothesis)
    n, m = matrix.shape
    steps = min(n, m)
    if steps == 0:
        return ()
    live = matrix.copy()
    ref_entries = list(reference)
    hyp_entries = list(hypothesis)
    matches = []
    for _ in range(steps):
        row, col = np.unravel_index(int(np.argmax(live)), live.shape)
        matches.append(
            MatchedKeyword(
                ref_word=ref_entries[row].word,
                hyp_word=hyp_entries[col].word,
                similarity=float(matrix[row, col]),
                weight=(ref_entries[row].weight + hyp_entries[col].weight) / 2.0,
            )
        )
        live[row, :] = -1.0
        live[:, col] = -1.0
    return tuple(matches)


def keyword_similarity(
    provider: WordSimilarity, reference: KeywordSet, hypothesis: KeywordSet
) -> KeywordScore:
    """Weighted mean similarity of the greedily matched keyword pairs.

    Both sets empty yields an absent value (None); exactly one empty set
    yields 0.0. A degenerate all-zero weighting falls back to the plain
    mean of the matched similarities.
    """
    if not reference and not hypothesis:
        return KeywordScore(value=None, matches=())
    if not reference or not hypothesis:
        return KeywordScore(value=0.0, matches=())
    matches = match_keywords(provider, reference, hypothesis)
    total_weight = sum(match.weight for match in matches)
    if total_weight > 0.0:
        value = sum(match.weight * match.similarity for match in matches) / total_weight
    else:
        value = sum(match.similarity for match in matches) / len(matches)
    return KeywordScore(value=min(1.0, max(0.0, value)), matches=matches)
