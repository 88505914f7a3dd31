"""Parsers and emitters for dependency graphs, keyword sets, and corpora.

The canonical interchange format is JSON; the tab-separated column format is
a convenience importer/emitter for hand-authored fixtures and debugging.
Corpus files are JSONL, one group per line, with annotations either inline
or as relative file references.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .errors import ConsistencyError, LoadError, ParseError, SchemaError
from .model import (
    AnnotatedSentence,
    AssociationPair,
    CorpusGroup,
    KeywordSet,
    RelationGroups,
    SemEdge,
    SemGraph,
    SystemOutput,
    Token,
    canonicalize_pair,
)
from .errors import GraphError

__all__ = [
    "DEFAULT_DENYLIST",
    "RelationDenylist",
    "emit_conll",
    "emit_keywords_json",
    "emit_sdp_json",
    "extract_relation_groups",
    "graph_from_obj",
    "graph_to_obj",
    "keywords_from_obj",
    "keywords_to_obj",
    "load_annotation",
    "load_corpus",
    "parse_keywords",
    "parse_sdp_conll",
    "parse_sdp_json",
]


@dataclass(frozen=True)
class RelationDenylist:
    """Relation labels dropped before scoring.

    The default holds the punctuation-attachment label only; pass your own
    set to widen or clear it.
    """

    labels: frozenset[str] = frozenset({"mPunc"})

    @classmethod
    def of(cls, *labels: str) -> "RelationDenylist":
        return cls(frozenset(labels))

    def __contains__(self, label: str) -> bool:
        return label in self.labels


DEFAULT_DENYLIST = RelationDenylist()


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    return data


def _load_json(data: bytes | str, what: str) -> Any:
    try:
        return json.loads(_as_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid {what} JSON: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from exc


# ---------------------------------------------------------------------------
# Graph JSON
# ---------------------------------------------------------------------------

def graph_from_obj(doc: Any) -> SemGraph:
    """Build a SemGraph from a decoded graph document.

    Schema: {"sentence": str, "tokens": [{"index", "surface", "pos"}],
    "edges": [{"head", "dep", "rel"}]}. "sentence" and "pos" may be omitted.
    """
    if not isinstance(doc, dict):
        raise SchemaError("graph document must be a JSON object")
    sentence = doc.get("sentence", "")
    if not isinstance(sentence, str):
        raise SchemaError("field 'sentence' must be a string")
    raw_tokens = doc.get("tokens")
    if not isinstance(raw_tokens, list):
        raise SchemaError("field 'tokens' missing or not a list")
    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise SchemaError("field 'edges' missing or not a list")

    tokens = []
    for position, item in enumerate(raw_tokens):
        where = f"tokens[{position}]"
        if not isinstance(item, dict):
            raise SchemaError(f"field '{where}' must be an object")
        index = item.get("index")
        if not isinstance(index, int) or isinstance(index, bool):
            raise SchemaError(f"field '{where}.index' must be an integer")
        surface = item.get("surface")
        if not isinstance(surface, str) or not surface:
            raise SchemaError(f"field '{where}.surface' must be a non-empty string")
        pos = item.get("pos", "")
        if not isinstance(pos, str):
            raise SchemaError(f"field '{where}.pos' must be a string")
        tokens.append(Token(index=index, surface=surface, pos=pos))
    tokens.sort(key=lambda token: token.index)

    edges = []
    for position, item in enumerate(raw_edges):
        where = f"edges[{position}]"
        if not isinstance(item, dict):
            raise SchemaError(f"field '{where}' must be an object")
        for key in ("head", "dep"):
            value = item.get(key)
            if not isinstance(value, int) or isinstance(value, bool):
                raise SchemaError(f"field '{where}.{key}' must be an integer")
        relation = item.get("rel")
        if not isinstance(relation, str) or not relation:
            raise SchemaError(f"field '{where}.rel' must be a non-empty string")
        edges.append((where, item["head"], item["dep"], relation))

    n = len(tokens)
    built_edges = []
    for where, head, dep, relation in edges:
        if not 0 <= head <= n:
            raise SchemaError(f"field '{where}.head' = {head} does not name a token")
        if not 1 <= dep <= n:
            raise SchemaError(f"field '{where}.dep' = {dep} does not name a token")
        built_edges.append(SemEdge(head=head, dep=dep, relation=relation))

    try:
        return SemGraph(tokens=tuple(tokens), edges=tuple(built_edges), sentence=sentence)
    except GraphError as exc:
        raise SchemaError(str(exc)) from exc


def parse_sdp_json(data: bytes | str) -> SemGraph:
    """Parse the canonical graph JSON format."""
    return graph_from_obj(_load_json(data, "graph"))


def graph_to_obj(graph: SemGraph) -> dict:
    return {
        "sentence": graph.sentence,
        "tokens": [
            {"index": token.index, "surface": token.surface, "pos": token.pos}
            for token in graph.tokens
        ],
        "edges": [
            {"head": edge.head, "dep": edge.dep, "rel": edge.relation}
            for edge in graph.edges
        ],
    }


def emit_sdp_json(graph: SemGraph) -> str:
    """Serialize a graph to canonical JSON; parse_sdp_json round-trips it."""
    return json.dumps(graph_to_obj(graph), ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Column (CoNLL-style) format
# ---------------------------------------------------------------------------

_COLUMNS = ("ID", "FORM", "POS", "HEAD", "DEPREL")


def parse_sdp_conll(text: str) -> list[SemGraph]:
    """Parse the tab-separated column format into one graph per block.

    Columns are ID, FORM, POS, HEAD, DEPREL; a token id may repeat across
    rows to express multiple governors; blank lines separate sentences.
    HEAD 0 marks the virtual root. A row with HEAD and DEPREL of "_"
    declares a token without any edge; "_" in the POS column means an empty
    tag. A leading "# text = ..." comment carries the original sentence.
    """
    graphs: list[SemGraph] = []
    block_rows: list[tuple[int, int, str, str, int | None, str]] = []
    block_text: str | None = None
    last_line = 0

    def flush(end_line: int) -> None:
        nonlocal block_rows, block_text
        if not block_rows and block_text is None:
            return
        graphs.append(_build_conll_graph(block_rows, block_text, end_line))
        block_rows = []
        block_text = None

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw_line.rstrip("\n")
        if not line.strip():
            flush(lineno)
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("text ="):
                block_text = comment[len("text ="):].strip()
            continue
        columns = line.split("\t")
        if len(columns) != len(_COLUMNS):
            raise ParseError(
                f"expected {len(_COLUMNS)} tab-separated columns, got {len(columns)}",
                line=lineno,
            )
        raw_id, form, pos, raw_head, deprel = columns
        try:
            token_id = int(raw_id)
        except ValueError:
            raise ParseError(f"ID {raw_id!r} is not an integer", line=lineno) from None
        if not form:
            raise ParseError("FORM must be non-empty", line=lineno)
        if raw_head == "_":
            if deprel != "_":
                raise ParseError(
                    f"HEAD '_' requires DEPREL '_', got {deprel!r}", line=lineno
                )
            head: int | None = None
        else:
            try:
                head = int(raw_head)
            except ValueError:
                raise ParseError(
                    f"HEAD {raw_head!r} is not an integer", line=lineno
                ) from None
            if deprel == "_" or not deprel:
                raise ParseError("DEPREL must name a relation", line=lineno)
        block_rows.append((lineno, token_id, form, "" if pos == "_" else pos, head, deprel))

    flush(last_line + 1)
    return graphs


def _build_conll_graph(
    rows: Sequence[tuple[int, int, str, str, int | None, str]],
    text: str | None,
    end_line: int,
) -> SemGraph:
    token_info: dict[int, tuple[str, str, int]] = {}
    edges: list[SemEdge] = []
    for lineno, token_id, form, pos, head, deprel in rows:
        known = token_info.get(token_id)
        if known is None:
            token_info[token_id] = (form, pos, lineno)
        elif known[0] != form or known[1] != pos:
            raise ConsistencyError(
                f"line {lineno}: token {token_id} redefined as "
                f"{form!r}/{pos!r}, first seen as {known[0]!r}/{known[1]!r} "
                f"on line {known[2]}"
            )
        if head is not None:
            edges.append(SemEdge(head=head, dep=token_id, relation=deprel))
    tokens = tuple(
        Token(index=token_id, surface=form, pos=pos)
        for token_id, (form, pos, _) in sorted(token_info.items())
    )
    sentence = text if text is not None else "".join(token.surface for token in tokens)
    try:
        return SemGraph(tokens=tokens, edges=tuple(edges), sentence=sentence)
    except GraphError as exc:
        raise SchemaError(f"sentence block ending at line {end_line}: {exc}") from exc


def emit_conll(graphs: SemGraph | Sequence[SemGraph]) -> str:
    """Serialize graphs to the column format; parse_sdp_conll round-trips it.

    Tokens without incoming edges are emitted first as edge-less rows, then
    one row per edge in graph order.
    """
    if isinstance(graphs, SemGraph):
        graphs = [graphs]
    blocks = []
    for graph in graphs:
        lines = [f"# text = {graph.sentence}"]
        with_edge = {edge.dep for edge in graph.edges}
        for token in graph.tokens:
            if token.index not in with_edge:
                lines.append(_conll_row(token, None, None))
        for edge in graph.edges:
            lines.append(_conll_row(graph.token_at(edge.dep), edge.head, edge.relation))
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def _conll_row(token: Token, head: int | None, deprel: str | None) -> str:
    return "\t".join(
        (
            str(token.index),
            token.surface,
            token.pos or "_",
            "_" if head is None else str(head),
            deprel if deprel is not None else "_",
        )
    )


# ---------------------------------------------------------------------------
# Relation grouping
# ---------------------------------------------------------------------------

def extract_relation_groups(
    graph: SemGraph, denylist: RelationDenylist = DEFAULT_DENYLIST
) -> RelationGroups:
    """Group the scorable edges of a graph by relation label.

    Virtual-root and denylisted edges are dropped; the survivors are
    projected onto canonical (governor, dependent) surface pairs and keyed
    by relation in first-appearance order. Groups are never empty.
    """
    grouped: dict[str, list[AssociationPair]] = {}
    for edge in graph.edges:
        if edge.is_root or edge.relation in denylist:
            continue
        grouped.setdefault(edge.relation, []).append(canonicalize_pair(edge, graph))
    return {relation: tuple(pairs) for relation, pairs in grouped.items()}


# ---------------------------------------------------------------------------
# Keyword JSON
# ---------------------------------------------------------------------------

def keywords_from_obj(doc: Any) -> KeywordSet:
    """Build a KeywordSet from a decoded keyword document.

    Schema: {"keywords": [{"word": str, "score": number}]}. Scores may be
    numeric strings like "0.649", which annotation services are fond of.
    Entries come out sorted by descending weight.
    """
    if not isinstance(doc, dict):
        raise SchemaError("keyword document must be a JSON object")
    raw = doc.get("keywords")
    if not isinstance(raw, list):
        raise SchemaError("field 'keywords' missing or not a list")
    pairs: list[tuple[str, float]] = []
    seen: set[str] = set()
    for position, item in enumerate(raw):
        where = f"keywords[{position}]"
        if not isinstance(item, dict):
            raise SchemaError(f"field '{where}' must be an object")
        word = item.get("word")
        if not isinstance(word, str) or not word:
            raise SchemaError(f"field '{where}.word' must be a non-empty string")
        score = item.get("score")
        if isinstance(score, str):
            try:
                score = float(score)
            except ValueError:
                raise SchemaError(f"field '{where}.score' is not numeric: {score!r}") from None
        if not isinstance(score, (int, float)) or isinstance(score, bool):
            raise SchemaError(f"field '{where}.score' must be a number")
        score = float(score)
        if not 0.0 <= score <= 1.0:
            raise SchemaError(f"field '{where}.score' = {score} outside [0, 1]")
        if word in seen:
            raise SchemaError(f"field '{where}.word' duplicates keyword {word!r}")
        seen.add(word)
        pairs.append((word, score))
    return KeywordSet.from_pairs(pairs)


def parse_keywords(data: bytes | str) -> KeywordSet:
    """Parse the keyword JSON format."""
    return keywords_from_obj(_load_json(data, "keyword"))


def keywords_to_obj(keywords: KeywordSet) -> dict:
    return {
        "keywords": [
            {"word": entry.word, "score": entry.weight} for entry in keywords
        ]
    }


def emit_keywords_json(keywords: KeywordSet) -> str:
    return json.dumps(keywords_to_obj(keywords), ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Corpus and annotation bundles
# ---------------------------------------------------------------------------

def _resolve_node(node: Any, base: Path, context: str) -> Any:
    """Resolve {"file": relative-path} references against the corpus dir."""
    if isinstance(node, dict) and set(node.keys()) == {"file"}:
        ref = node["file"]
        if not isinstance(ref, str) or not ref:
            raise SchemaError(f"{context}: file reference must be a non-empty string")
        path = base / ref
        try:
            data = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise LoadError(f"{context}: cannot read referenced file {path}: {exc}") from exc
        return _load_json(data, context)
    return node


def _annotated_sentence(doc: Any, base: Path, context: str) -> AnnotatedSentence:
    if not isinstance(doc, dict):
        raise SchemaError(f"{context}: annotated sentence must be an object")
    text = doc.get("text")
    if not isinstance(text, str):
        raise SchemaError(f"{context}: field 'text' must be a string")
    if "sdp" not in doc:
        raise SchemaError(f"{context}: field 'sdp' is missing")
    if "keywords" not in doc:
        raise SchemaError(f"{context}: field 'keywords' is missing")
    graph = graph_from_obj(_resolve_node(doc["sdp"], base, f"{context}.sdp"))
    kw_node = _resolve_node(doc["keywords"], base, f"{context}.keywords")
    # Keyword annotations may be the bare list or the wrapped document.
    if isinstance(kw_node, list):
        kw_node = {"keywords": kw_node}
    keywords = keywords_from_obj(kw_node)
    return AnnotatedSentence(text=text, graph=graph, keywords=keywords)


def load_annotation(path: str | Path) -> AnnotatedSentence:
    """Load one annotation bundle {"text", "sdp", "keywords"}.

    The sdp/keywords values may be inline documents or {"file": path}
    references relative to the bundle's directory.
    """
    path = Path(path)
    doc = _load_json(path.read_text(encoding="utf-8"), "annotation")
    return _annotated_sentence(doc, path.parent, str(path))


def load_corpus(path: str | Path) -> list[CorpusGroup]:
    """Load a JSONL corpus, one group per line, referenced files included.

    Line schema: {"id", "source", "reference": {"text", "sdp", "keywords"},
    "systems": [{"name", "text", "sdp", "keywords"}], "human_best"}.
    """
    path = Path(path)
    base = path.parent
    groups: list[CorpusGroup] = []
    with path.open("r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            context = f"corpus line {lineno}"
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{context}: {exc.msg}", line=lineno) from exc
            groups.append(_group_from_obj(doc, base, context))
    return groups


def _group_from_obj(doc: Any, base: Path, context: str) -> CorpusGroup:
    if not isinstance(doc, dict):
        raise SchemaError(f"{context}: group must be an object")
    group_id = doc.get("id")
    if not isinstance(group_id, str) or not group_id:
        raise SchemaError(f"{context}: field 'id' must be a non-empty string")
    source = doc.get("source")
    if not isinstance(source, str):
        raise SchemaError(f"{context}: field 'source' must be a string")
    human_best = doc.get("human_best")
    if not isinstance(human_best, str) or not human_best:
        raise SchemaError(f"{context}: field 'human_best' must be a non-empty string")
    reference = _annotated_sentence(doc.get("reference"), base, f"{context}.reference")
    raw_systems = doc.get("systems")
    if not isinstance(raw_systems, list) or not raw_systems:
        raise SchemaError(f"{context}: field 'systems' must be a non-empty list")
    systems = []
    for position, item in enumerate(raw_systems):
        where = f"{context}.systems[{position}]"
        if not isinstance(item, dict):
            raise SchemaError(f"{where}: system must be an object")
        name = item.get("name")
        if not isinstance(name, str) or not name:
            raise SchemaError(f"{where}: field 'name' must be a non-empty string")
        systems.append(SystemOutput(name=name, sentence=_annotated_sentence(item, base, where)))
    try:
        return CorpusGroup(
            id=group_id,
            source_text=source,
            reference=reference,
            systems=tuple(systems),
            human_best=human_best,
        )
    except ValueError as exc:
        raise SchemaError(f"{context}: {exc}") from exc
