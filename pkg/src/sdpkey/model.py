"""Core data model: tokens, dependency graphs, association pairs, keyword
sets, score breakdowns, and evaluation corpus groups.

Everything here is immutable after construction and validates its invariants
eagerly, so scoring code can assume well-formed values and share them freely
across concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import GraphError

__all__ = [
    "AnnotatedSentence",
    "AssociationPair",
    "CorpusGroup",
    "KeywordEntry",
    "KeywordSet",
    "MatchedKeyword",
    "RelationGroups",
    "ScoreBreakdown",
    "SemEdge",
    "SemGraph",
    "SystemOutput",
    "Token",
    "canonicalize_pair",
    "is_root_label",
]


def is_root_label(relation: str) -> bool:
    """True for labels that mark the virtual-root attachment of a sentence."""
    return relation.lower() == "root"


@dataclass(frozen=True)
class Token:
    """One segmented word: 1-based position, surface form, POS tag.

    The POS tag is opaque and may be empty; it is carried for case-study
    reports only, the metric itself never reads it.
    """

    index: int
    surface: str
    pos: str = ""

    def __post_init__(self):
        if self.index < 1:
            raise GraphError(f"token index must be >= 1, got {self.index}")
        if not self.surface:
            raise GraphError(f"token {self.index} has an empty surface form")


@dataclass(frozen=True)
class SemEdge:
    """A labeled dependency from governor to dependent token index.

    Head index 0 denotes the virtual root and is only legal together with a
    root label; the same goes for self-loops, which some annotation services
    emit as root artifacts.
    """

    head: int
    dep: int
    relation: str

    def __post_init__(self):
        if not self.relation:
            raise GraphError("edge relation label must be non-empty")
        if self.dep < 1:
            raise GraphError(f"edge dependent index must be >= 1, got {self.dep}")
        if self.head < 0:
            raise GraphError(f"edge head index must be >= 0, got {self.head}")
        if self.head == 0 and not is_root_label(self.relation):
            raise GraphError(
                f"virtual-root edge must carry a root label, got {self.relation!r}"
            )
        if self.head == self.dep and not is_root_label(self.relation):
            raise GraphError(
                f"self-loop {self.head}->{self.dep} with non-root relation {self.relation!r}"
            )

    @property
    def is_root(self) -> bool:
        """Root artifact: attaches the virtual root, filtered before scoring."""
        return self.head == 0 or is_root_label(self.relation)


@dataclass(frozen=True)
class SemGraph:
    """Tokens plus labeled semantic dependency edges of one sentence.

    Token indices run contiguously from 1 in list order; edge endpoints must
    refer to existing tokens (head 0 = virtual root); duplicate
    (head, dep, relation) triples are rejected.
    """

    tokens: tuple[Token, ...] = ()
    edges: tuple[SemEdge, ...] = ()
    sentence: str = ""

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "edges", tuple(self.edges))
        for position, token in enumerate(self.tokens, start=1):
            if token.index != position:
                raise GraphError(
                    f"token indices must be contiguous from 1; found index "
                    f"{token.index} at position {position}"
                )
        n = len(self.tokens)
        seen: set[tuple[int, int, str]] = set()
        for edge in self.edges:
            if edge.head > n:
                raise GraphError(f"edge head {edge.head} out of range for {n}-token graph")
            if edge.dep > n:
                raise GraphError(f"edge dep {edge.dep} out of range for {n}-token graph")
            key = (edge.head, edge.dep, edge.relation)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)

    def token_at(self, index: int) -> Token:
        if 1 <= index <= len(self.tokens):
            return self.tokens[index - 1]
        raise GraphError(f"no token with index {index} in {len(self.tokens)}-token graph")

    @property
    def surfaces(self) -> tuple[str, ...]:
        """Surface forms in sentence order (the shared tokenization)."""
        return tuple(token.surface for token in self.tokens)

    def semantic_edges(self) -> tuple[SemEdge, ...]:
        """Edges minus virtual-root attachments."""
        return tuple(edge for edge in self.edges if not edge.is_root)


@dataclass(frozen=True)
class AssociationPair:
    """(governor surface, dependent surface, relation) for one scorable edge.

    The governor always occupies the first slot regardless of how the source
    format ordered the words.
    """

    head: str
    dep: str
    relation: str


# Scorable pairs of one sentence grouped by relation label, in
# first-appearance order. Group values are never empty.
RelationGroups = Mapping[str, tuple[AssociationPair, ...]]


def canonicalize_pair(edge: SemEdge, graph: SemGraph) -> AssociationPair:
    """Project an edge onto surface forms in fixed (governor, dependent) order.

    Raises GraphError when an endpoint does not resolve to a token, which
    includes virtual-root edges (head 0); filter those out first.
    """
    return AssociationPair(
        head=graph.token_at(edge.head).surface,
        dep=graph.token_at(edge.dep).surface,
        relation=edge.relation,
    )


@dataclass(frozen=True)
class KeywordEntry:
    """A keyword with its extraction weight in [0, 1]."""

    word: str
    weight: float

    def __post_init__(self):
        if not self.word:
            raise ValueError("keyword word must be non-empty")
        if not 0.0 <= self.weight <= 1.0:
            raise ValueError(f"keyword weight must be in [0, 1], got {self.weight}")


@dataclass(frozen=True)
class KeywordSet:
    """Keywords of one sentence, ordered by non-increasing weight, no
    duplicate words."""

    entries: tuple[KeywordEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        seen: set[str] = set()
        previous: float | None = None
        for entry in self.entries:
            if entry.word in seen:
                raise ValueError(f"duplicate keyword {entry.word!r}")
            seen.add(entry.word)
            if previous is not None and entry.weight > previous:
                raise ValueError("keyword weights must be non-increasing")
            previous = entry.weight

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, float]]) -> "KeywordSet":
        """Build from (word, weight) pairs, sorted by descending weight.

        The sort is stable, so ties keep their input order.
        """
        entries = [KeywordEntry(word, weight) for word, weight in pairs]
        entries.sort(key=lambda entry: -entry.weight)
        return cls(tuple(entries))

    def words(self) -> tuple[str, ...]:
        return tuple(entry.word for entry in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[KeywordEntry]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(frozen=True)
class MatchedKeyword:
    """One keyword match: reference word, hypothesis word, similarity, and
    the averaged weight of the two entries."""

    ref_word: str
    hyp_word: str
    similarity: float
    weight: float


@dataclass(frozen=True)
class ScoreBreakdown:
    """All scores for one (reference, hypothesis) sentence pair.

    sim_kw is None when both keyword sets were empty (or keyword scoring was
    disabled); final then equals sim_de, otherwise the mean of the two.
    """

    sim_de: float
    sim_kw: float | None
    final: float
    forward_relation_scores: Mapping[str, float] = field(default_factory=dict)
    backward_relation_scores: Mapping[str, float] = field(default_factory=dict)
    matched_keyword_pairs: tuple[MatchedKeyword, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "matched_keyword_pairs", tuple(self.matched_keyword_pairs)
        )
        expected = self.sim_de if self.sim_kw is None else (self.sim_de + self.sim_kw) / 2.0
        if not math.isclose(self.final, expected, rel_tol=0.0, abs_tol=1e-9):
            raise ValueError(
                f"final score {self.final} inconsistent with components "
                f"sim_de={self.sim_de}, sim_kw={self.sim_kw}"
            )


@dataclass(frozen=True)
class AnnotatedSentence:
    """A sentence together with its graph and keyword annotations."""

    text: str
    graph: SemGraph
    keywords: KeywordSet = KeywordSet()


@dataclass(frozen=True)
class SystemOutput:
    """One system's annotated translation of a corpus group's source."""

    name: str
    sentence: AnnotatedSentence


@dataclass(frozen=True)
class CorpusGroup:
    """One evaluation item: source sentence, annotated reference, annotated
    system outputs in file order, and the human-marked best system."""

    id: str
    source_text: str
    reference: AnnotatedSentence
    systems: tuple[SystemOutput, ...]
    human_best: str

    def __post_init__(self):
        object.__setattr__(self, "systems", tuple(self.systems))
        if not self.systems:
            raise ValueError(f"group {self.id!r} has no systems")
        names = [system.name for system in self.systems]
        if len(set(names)) != len(names):
            raise ValueError(f"group {self.id!r} has duplicate system names")
        if self.human_best not in names:
            raise ValueError(
                f"group {self.id!r}: human_best {self.human_best!r} is not among "
                f"systems {names}"
            )

    def system_names(self) -> tuple[str, ...]:
        return tuple(system.name for system in self.systems)
