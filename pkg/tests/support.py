"""Shared test utilities: fabricated providers, random-input generators,
and independent reference implementations used as oracles.

The reference implementations deliberately avoid the library's own code
paths (plain loops, no numpy) so agreement is evidence, not tautology.
"""

from __future__ import annotations

import hashlib
from itertools import permutations

import numpy as np

from sdpkey.model import AssociationPair, KeywordSet, SemEdge, SemGraph, Token

VOCAB = ("猫", "狗", "鱼", "鸟", "写", "读", "信", "书", "飞", "爬")
RELATIONS = ("Agt", "Pat", "Exp", "Time", "Loc", "mDepd")


class MatrixProvider:
    """Similarity read from an explicit (word, word) table, both orders."""

    def __init__(self, table: dict[tuple[str, str], float]):
        self.table = dict(table)
        for (a, b), value in list(table.items()):
            self.table.setdefault((b, a), value)

    def knows(self, word: str) -> bool:
        return True

    def similarity(self, first: str, second: str) -> float:
        if first == second:
            return 1.0
        return self.table.get((first, second), 0.0)


class HashSimProvider:
    """Deterministic pseudo-random symmetric similarity in [0, 1].

    The value depends only on the unordered word pair and the seed, so
    runs are reproducible and cells for distinct pairs collide with
    negligible probability.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed

    def knows(self, word: str) -> bool:
        return True

    def similarity(self, first: str, second: str) -> float:
        if first == second:
            return 1.0
        low, high = sorted((first, second))
        digest = hashlib.sha256(f"{self.seed}|{low}|{high}".encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "big") / 2**64


def random_graph(rng: np.random.Generator, max_tokens: int = 6) -> SemGraph:
    """Small random graph with a root edge and occasional mPunc noise."""
    n = int(rng.integers(1, max_tokens + 1))
    words = rng.choice(VOCAB, size=n, replace=True)
    tokens = tuple(
        Token(index=i + 1, surface=str(words[i]), pos="n") for i in range(n)
    )
    root = int(rng.integers(1, n + 1))
    edges = [SemEdge(head=0, dep=root, relation="Root")]
    seen = {(0, root, "Root")}
    for _ in range(int(rng.integers(0, 2 * n))):
        head = int(rng.integers(1, n + 1))
        dep = int(rng.integers(1, n + 1))
        if head == dep:
            continue
        relation = str(rng.choice(RELATIONS + ("mPunc",)))
        if (head, dep, relation) in seen:
            continue
        seen.add((head, dep, relation))
        edges.append(SemEdge(head=head, dep=dep, relation=relation))
    return SemGraph(tokens=tokens, edges=tuple(edges), sentence="".join(map(str, words)))


def random_groups(
    rng: np.random.Generator, max_relations: int = 3, max_pairs: int = 4
) -> dict[str, tuple[AssociationPair, ...]]:
    """Random relation grouping with up to max_pairs pairs per relation."""
    count = int(rng.integers(0, max_relations + 1))
    relations = rng.choice(RELATIONS, size=count, replace=False)
    groups = {}
    for relation in relations:
        pairs = tuple(
            AssociationPair(
                head=str(rng.choice(VOCAB)),
                dep=str(rng.choice(VOCAB)),
                relation=str(relation),
            )
            for _ in range(int(rng.integers(1, max_pairs + 1)))
        )
        groups[str(relation)] = pairs
    return groups


def random_keywords(rng: np.random.Generator, max_size: int = 5) -> KeywordSet:
    size = int(rng.integers(0, max_size + 1))
    words = rng.choice(VOCAB, size=size, replace=False)
    return KeywordSet.from_pairs(
        [(str(word), round(float(rng.random()), 3)) for word in words]
    )


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def greedy_reference(matrix: list[list[float]]) -> list[tuple[int, int]]:
    """Max-delete matching by exhaustive scan; ties to smallest (row, col)."""
    n = len(matrix)
    m = len(matrix[0]) if n else 0
    rows = list(range(n))
    cols = list(range(m))
    picks = []
    for _ in range(min(n, m)):
        best = None
        for i in rows:
            for j in cols:
                if best is None or matrix[i][j] > best[0]:
                    best = (matrix[i][j], i, j)
        _, i, j = best
        picks.append((i, j))
        rows.remove(i)
        cols.remove(j)
    return picks


def optimal_assignment_sum(matrix: list[list[float]]) -> float:
    """Best achievable sum of min(n, m) cells, one per row and column."""
    n = len(matrix)
    m = len(matrix[0]) if n else 0
    if min(n, m) == 0:
        return 0.0
    if n <= m:
        return max(
            sum(matrix[i][perm[i]] for i in range(n))
            for perm in permutations(range(m), n)
        )
    return max(
        sum(matrix[perm[j]][j] for j in range(m))
        for perm in permutations(range(n), m)
    )


def brute_force_directional(provider, source, target) -> dict[str, float]:
    """Plain-loop re-derivation of the one-direction relation scores."""
    scores = {}
    for relation, pairs in source.items():
        opponents = target.get(relation, ())
        if not opponents:
            scores[relation] = 0.0
            continue
        total = 0.0
        for pair in pairs:
            best = 0.0
            for other in opponents:
                head_sim = _total_sim(provider, pair.head, other.head)
                dep_sim = _total_sim(provider, pair.dep, other.dep)
                candidate = (head_sim + dep_sim) / 2.0
                if candidate > best:
                    best = candidate
            total += best
        scores[relation] = total / len(pairs)
    return scores


def _total_sim(provider, first: str, second: str) -> float:
    if first == second:
        return 1.0
    if provider.knows(first) and provider.knows(second):
        value = provider.similarity(first, second)
        return min(1.0, max(0.0, value))
    return 0.0
