"""Reference metrics to compare the graph-based score against.

Both operate on pre-segmented token sequences so that every metric in a
report sees the same tokenization.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Sequence

__all__ = ["bleu", "ngram_counts", "vsm_cosine"]


def ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    """Multiset of the n-grams of a token sequence."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(ref_tokens: Sequence[str], hyp_tokens: Sequence[str], max_n: int = 4) -> float:
    """Sentence-level BLEU with uniform weights and add-one smoothing.

    Modified n-gram precisions are clipped against the reference counts.
    Orders two and up are smoothed as (matches + 1) / (total + 1); a zero
    unigram precision short-circuits to 0.0, as does an empty hypothesis.
    The brevity penalty exp(1 - r/c) applies when the hypothesis is
    shorter than the reference.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    ref_tokens = list(ref_tokens)
    hyp_tokens = list(hyp_tokens)
    if not hyp_tokens:
        return 0.0
    log_sum = 0.0
    for n in range(1, max_n + 1):
        hyp_grams = ngram_counts(hyp_tokens, n)
        ref_grams = ngram_counts(ref_tokens, n)
        total = sum(hyp_grams.values())
        matched = sum(min(count, ref_grams[gram]) for gram, count in hyp_grams.items())
        if n == 1:
            if matched == 0:
                return 0.0
            precision = matched / total
        else:
            precision = (matched + 1) / (total + 1)
        log_sum += math.log(precision)
    score = math.exp(log_sum / max_n)
    c, r = len(hyp_tokens), len(ref_tokens)
    penalty = 1.0 if c >= r else math.exp(1.0 - r / c)
    return min(1.0, penalty * score)


def vsm_cosine(ref_tokens: Sequence[str], hyp_tokens: Sequence[str]) -> float:
    """Cosine of term-frequency vectors over the shared vocabulary.

    Counts stay integers until the final division, so identical multisets
    score exactly 1.0. Either side empty scores 0.0.
    """
    if not ref_tokens or not hyp_tokens:
        return 0.0
    ref_counts = Counter(ref_tokens)
    hyp_counts = Counter(hyp_tokens)
    dot = sum(ref_counts[word] * hyp_counts[word] for word in ref_counts.keys() & hyp_counts.keys())
    if dot == 0:
        return 0.0
    ref_sq = sum(count * count for count in ref_counts.values())
    hyp_sq = sum(count * count for count in hyp_counts.values())
    return dot / math.sqrt(ref_sq * hyp_sq)
