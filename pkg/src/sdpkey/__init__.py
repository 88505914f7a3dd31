"""Machine translation scoring from semantic dependency graphs and keywords.

A hypothesis translation is compared with a reference translation on two
channels: the overlap of their semantic dependency structure and the
agreement of their weighted keywords. The mean of the two is the sentence
score; a corpus harness turns per-group argmax selections into a precision
figure against human judgements. BLEU and a term-frequency cosine are
included as baselines.
"""

from .baselines import bleu, vsm_cosine
from .errors import (
    AdapterError,
    CacheMiss,
    ConsistencyError,
    GraphError,
    LoadError,
    MetricError,
    ParseError,
    SchemaError,
    ServiceError,
    UsageError,
)
from .ingest import (
    DEFAULT_DENYLIST,
    RelationDenylist,
    emit_conll,
    emit_keywords_json,
    emit_sdp_json,
    extract_relation_groups,
    load_annotation,
    load_corpus,
    parse_keywords,
    parse_sdp_conll,
    parse_sdp_json,
)
from .keywords import (
    KeywordScore,
    keyword_similarity,
    match_keywords,
    similarity_matrix,
)
from .model import (
    AnnotatedSentence,
    AssociationPair,
    CorpusGroup,
    KeywordEntry,
    KeywordSet,
    MatchedKeyword,
    ScoreBreakdown,
    SemEdge,
    SemGraph,
    SystemOutput,
    Token,
    canonicalize_pair,
)
from .pipeline import (
    EvaluationReport,
    GroupResult,
    SystemScore,
    SystemStats,
    emit_report_csv,
    emit_report_json,
    evaluate_corpus,
    final_score,
    score_pair,
)
from .semdep import DependencyScore, compare_graphs, compare_groups, sim_de
from .annotator import (
    AnnotationCache,
    AnnotationClient,
    AnnotatorConfig,
)
from .wordsim import (
    EmbeddingProvider,
    ExactMatchProvider,
    FusionProvider,
    LexiconProvider,
    WordSimilarity,
    load_embeddings,
    load_lexicon,
    sw,
)

__version__ = "0.1.0"

__all__ = [
    "AdapterError",
    "AnnotatedSentence",
    "AnnotationCache",
    "AnnotationClient",
    "AnnotatorConfig",
    "AssociationPair",
    "CacheMiss",
    "ConsistencyError",
    "CorpusGroup",
    "DEFAULT_DENYLIST",
    "DependencyScore",
    "EmbeddingProvider",
    "EvaluationReport",
    "ExactMatchProvider",
    "FusionProvider",
    "GraphError",
    "GroupResult",
    "KeywordEntry",
    "KeywordScore",
    "KeywordSet",
    "LexiconProvider",
    "LoadError",
    "MatchedKeyword",
    "MetricError",
    "ParseError",
    "RelationDenylist",
    "SchemaError",
    "ScoreBreakdown",
    "SemEdge",
    "SemGraph",
    "ServiceError",
    "SystemOutput",
    "SystemScore",
    "SystemStats",
    "Token",
    "UsageError",
    "WordSimilarity",
    "bleu",
    "canonicalize_pair",
    "compare_graphs",
    "compare_groups",
    "emit_conll",
    "emit_keywords_json",
    "emit_report_csv",
    "emit_report_json",
    "emit_sdp_json",
    "evaluate_corpus",
    "extract_relation_groups",
    "final_score",
    "keyword_similarity",
    "load_annotation",
    "load_corpus",
    "load_embeddings",
    "load_lexicon",
    "match_keywords",
    "parse_keywords",
    "parse_sdp_conll",
    "parse_sdp_json",
    "score_pair",
    "sim_de",
    "similarity_matrix",
    "sw",
    "vsm_cosine",
]
