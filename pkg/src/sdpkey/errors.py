"""Exception types shared across the package."""


class MetricError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(MetricError):
    """A semantic dependency graph violates a structural invariant."""


class ParseError(MetricError):
    """Input text could not be parsed; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{message} ({where})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(MetricError):
    """Parsed input does not satisfy the expected document schema."""


class ConsistencyError(SchemaError):
    """Rows belonging to one logical record disagree with each other."""


class LoadError(MetricError):
    """A resource file (lexicon, embeddings, corpus annotation) failed to load."""


class CacheMiss(MetricError):
    """Replay-mode annotation request with no recorded response."""


class AdapterError(MetricError):
    """Annotation service response does not match the adapter's contract."""


class ServiceError(MetricError):
    """Annotation service transport failure (network error or HTTP status)."""


class UsageError(MetricError):
    """Invalid invocation: bad flag combination, empty corpus, missing config."""
