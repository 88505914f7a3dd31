"""Word-to-word similarity providers.

All scoring goes through :func:`sw`, which makes any provider total:
identical surfaces score 1.0 outright, and word pairs the provider has no
knowledge of fall back to exact string match. Providers therefore only need
to answer for words they actually cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Protocol, Sequence

import numpy as np

from .errors import LoadError

__all__ = [
    "EmbeddingProvider",
    "ExactMatchProvider",
    "FusionProvider",
    "LexiconProvider",
    "WordSimilarity",
    "load_embeddings",
    "load_lexicon",
    "sw",
]

# Hierarchy level widths of a thesaurus sense code, e.g. Aa01Aa = A/a/01/A/a.
_CODE_WIDTHS = (1, 1, 2, 1, 1)
_CODE_LENGTH = sum(_CODE_WIDTHS)


class WordSimilarity(Protocol):
    """Scores a pair of words in [0, 1]."""

    def similarity(self, first: str, second: str) -> float:
        ...

    def knows(self, word: str) -> bool:
        ...


def sw(provider: WordSimilarity, first: str, second: str) -> float:
    """Total word similarity: provider score with exact-match fallback.

    Identical words are 1.0 regardless of the provider, which keeps
    reflexivity exact even for noisy embedding backends.
    """
    if first == second:
        return 1.0
    if provider.knows(first) and provider.knows(second):
        return min(1.0, max(0.0, provider.similarity(first, second)))
    return 0.0


class ExactMatchProvider:
    """Binary similarity: 1.0 for identical surfaces, else 0.0."""

    def similarity(self, first: str, second: str) -> float:
        return 1.0 if first == second else 0.0

    def knows(self, word: str) -> bool:
        return True


@dataclass(frozen=True)
class LexiconProvider:
    """Thesaurus-code similarity.

    Each word maps to one or more sense codes laid out in hierarchy levels
    of widths (1, 1, 2, 1, 1). A pair scores the best shared-prefix depth
    over all code combinations, divided by the level count.
    """

    codes: Mapping[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        for word, word_codes in self.codes.items():
            if not word_codes:
                raise ValueError(f"word {word!r} has no sense codes")
            for code in word_codes:
                if len(code) != _CODE_LENGTH:
                    raise ValueError(
                        f"sense code {code!r} for {word!r} is not "
                        f"{_CODE_LENGTH} characters"
                    )

    def knows(self, word: str) -> bool:
        return word in self.codes

    def similarity(self, first: str, second: str) -> float:
        best = 0
        for code_a in self.codes.get(first, ()):
            for code_b in self.codes.get(second, ()):
                best = max(best, _shared_levels(code_a, code_b))
        return best / len(_CODE_WIDTHS)

    @classmethod
    def from_tsv(cls, text: str) -> "LexiconProvider":
        """Parse lines of "word<TAB>code[<TAB>code...]"; # starts a comment."""
        codes: dict[str, tuple[str, ...]] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) < 2:
                raise LoadError(f"lexicon line {lineno}: expected a word and at least one code")
            word, word_codes = fields[0], tuple(fields[1:])
            for code in word_codes:
                if len(code) != _CODE_LENGTH:
                    raise LoadError(
                        f"lexicon line {lineno}: code {code!r} is not "
                        f"{_CODE_LENGTH} characters"
                    )
            if word in codes:
                codes[word] = codes[word] + word_codes
            else:
                codes[word] = word_codes
        return cls(codes=codes)


def _shared_levels(code_a: str, code_b: str) -> int:
    depth = 0
    offset = 0
    for width in _CODE_WIDTHS:
        if code_a[offset:offset + width] != code_b[offset:offset + width]:
            break
        depth += 1
        offset += width
    return depth


class EmbeddingProvider:
    """Vector-space similarity mapped from cosine into [0, 1].

    Scores (cos + 1) / 2, so orthogonal vectors land on 0.5 and opposite
    vectors on 0.0. Zero-norm vectors are treated as unknown words.
    """

    def __init__(self, vectors: Mapping[str, Sequence[float]]):
        self._vectors: dict[str, np.ndarray] = {}
        self._norms: dict[str, float] = {}
        for word, values in vectors.items():
            vector = np.asarray(values, dtype=float)
            if vector.ndim != 1 or vector.size == 0:
                raise ValueError(f"vector for {word!r} must be a non-empty 1-d array")
            norm = float(np.linalg.norm(vector))
            if norm > 0.0:
                self._vectors[word] = vector
                self._norms[word] = norm

    def knows(self, word: str) -> bool:
        return word in self._vectors

    def similarity(self, first: str, second: str) -> float:
        if first == second:
            return 1.0
        try:
            a, b = self._vectors[first], self._vectors[second]
        except KeyError:
            return 0.0
        if a.shape != b.shape:
            return 0.0
        cosine = float(np.dot(a, b)) / (self._norms[first] * self._norms[second])
        return min(1.0, max(0.0, (cosine + 1.0) / 2.0))

    @classmethod
    def from_text(cls, text: str) -> "EmbeddingProvider":
        """Parse word2vec-style text: optional "count dim" header, then one
        "word v1 v2 ..." line per word."""
        vectors: dict[str, list[float]] = {}
        lines = text.splitlines()
        start = 0
        if lines:
            fields = lines[0].split()
            if len(fields) == 2 and all(_is_int(field) for field in fields):
                start = 1
        dim: int | None = None
        for lineno, line in enumerate(lines[start:], start=start + 1):
            if not line.strip():
                continue
            fields = line.split()
            if len(fields) < 2:
                raise LoadError(
                    f"embeddings line {lineno}: expected a word and vector components"
                )
            word = fields[0]
            try:
                values = [float(field) for field in fields[1:]]
            except ValueError as exc:
                raise LoadError(f"embeddings line {lineno}: {exc}") from None
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise LoadError(
                    f"embeddings line {lineno}: expected {dim} components, "
                    f"got {len(values)}"
                )
            vectors[word] = values
        return cls(vectors)


def _is_int(text: str) -> bool:
    try:
        int(text)
    except ValueError:
        return False
    return True


class FusionProvider:
    """Weighted blend of other providers.

    Each constituent is consulted through :func:`sw`, so unknown pairs
    contribute their exact-match fallback rather than silence. Weights are
    normalized to sum to one; a constituent with weight zero is inert, and
    weights (1, 0, ...) reproduce the first constituent's sw exactly.
    """

    def __init__(self, parts: Sequence[tuple[WordSimilarity, float]]):
        if not parts:
            raise ValueError("fusion needs at least one constituent")
        weights = [weight for _, weight in parts]
        if any(weight < 0 for weight in weights):
            raise ValueError("fusion weights must be non-negative")
        total = sum(weights)
        if total <= 0:
            raise ValueError("fusion weights must not all be zero")
        self._parts = [(provider, weight / total) for provider, weight in parts]

    def knows(self, word: str) -> bool:
        return True

    def similarity(self, first: str, second: str) -> float:
        blended = sum(
            weight * sw(provider, first, second)
            for provider, weight in self._parts
            if weight > 0.0
        )
        return min(1.0, max(0.0, blended))


def load_lexicon(path: str | Path) -> LexiconProvider:
    return LexiconProvider.from_tsv(_read(path, "lexicon"))


def load_embeddings(path: str | Path) -> EmbeddingProvider:
    return EmbeddingProvider.from_text(_read(path, "embeddings"))


def _read(path: str | Path, what: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read {what} file {path}: {exc}") from exc
