"""Client for a remote annotation service with an on-disk response cache.

The service exposes two tasks over one POST endpoint: semantic dependency
parsing ("sdp") and keyword extraction ("keywords"). Responses are adapted
from the provider's wire shape into the canonical formats of
:mod:`sdpkey.ingest`, so a different provider only needs a new adapter.

Three modes: "live" always calls the service, "record" calls on cache miss
and stores validated responses, "replay" serves the cache only and treats a
miss as an error. Replay runs are therefore deterministic and network-free.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import threading
import time
import unicodedata
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable

import requests

from .errors import AdapterError, CacheMiss, ServiceError, UsageError
from .ingest import graph_from_obj, keywords_from_obj
from .model import AnnotatedSentence, KeywordSet, SemGraph
from .errors import SchemaError

__all__ = [
    "AnnotationCache",
    "AnnotationClient",
    "AnnotatorConfig",
    "Transport",
    "adapt_keywords_response",
    "adapt_sdp_response",
    "cache_key",
    "default_transport",
]

log = logging.getLogger(__name__)

MODES = ("live", "record", "replay")
TASKS = ("sdp", "keywords")

# (url, payload, headers, timeout) -> (status code, body bytes)
Transport = Callable[[str, dict, dict, float], tuple[int, bytes]]

_RETRY_BASE_SECONDS = 0.5
_RETRY_FACTOR = 2.0


@dataclass(frozen=True)
class AnnotatorConfig:
    endpoint: str = ""
    token: str = ""
    timeout: float = 10.0
    max_retries: int = 3
    mode: str = "replay"
    max_inflight: int = 4

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.max_retries < 0:
            raise ValueError("max_retries must not be negative")
        if self.max_inflight < 1:
            raise ValueError("max_inflight must be at least 1")


def cache_key(task: str, text: str) -> str:
    """Hash identifying one (task, sentence) request.

    Text is normalized to NFC and trimmed; anything beyond that is assumed
    to matter to the service.
    """
    if task not in TASKS:
        raise ValueError(f"task must be one of {TASKS}, got {task!r}")
    normalized = unicodedata.normalize("NFC", text).strip()
    return hashlib.sha256(f"{task}\n{normalized}".encode("utf-8")).hexdigest()


class AnnotationCache:
    """One file per response, named by the request hash.

    Each file holds a one-line JSON metadata header (task, timestamp,
    endpoint) followed by the raw response bytes. Entries are written
    atomically and never rewritten, so a hit always returns the bytes that
    were recorded first.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def path_for(self, task: str, text: str) -> Path:
        return self.directory / cache_key(task, text)

    def get(self, task: str, text: str) -> bytes | None:
        """Recorded response bytes, or None on a miss."""
        path = self.path_for(task, text)
        try:
            blob = path.read_bytes()
        except FileNotFoundError:
            return None
        header, sep, payload = blob.partition(b"\n")
        if not sep:
            raise CacheMiss(f"cache entry {path} is malformed (no header line)")
        return payload

    def put(self, task: str, text: str, payload: bytes, endpoint: str = "") -> Path:
        """Record a response atomically; an existing entry is kept as-is."""
        path = self.path_for(task, text)
        if path.exists():
            return path
        self.directory.mkdir(parents=True, exist_ok=True)
        header = json.dumps(
            {
                "task": task,
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "endpoint": endpoint,
            },
            ensure_ascii=False,
        ).encode("utf-8")
        fd, tmp_name = tempfile.mkstemp(dir=self.directory, prefix=".tmp-")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(header + b"\n" + payload)
            os.replace(tmp_name, path)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise
        return path


def default_transport(url: str, payload: dict, headers: dict, timeout: float) -> tuple[int, bytes]:
    response = requests.post(url, json=payload, headers=headers, timeout=timeout)
    return response.status_code, response.content


class AnnotationClient:
    """Mode-aware annotation fetcher.

    A custom transport stands in for the network in tests; a replay-mode
    client never touches it at all.
    """

    def __init__(
        self,
        config: AnnotatorConfig,
        cache: AnnotationCache | None = None,
        transport: Transport | None = None,
        sleep: Callable[[float], None] = time.sleep,
    ):
        if config.mode != "live" and cache is None:
            raise UsageError(f"{config.mode} mode requires a cache directory")
        self.config = config
        self.cache = cache
        self.transport = transport if transport is not None else default_transport
        self._sleep = sleep
        self._inflight = threading.Semaphore(config.max_inflight)

    def annotate_sdp(self, text: str) -> SemGraph:
        payload = self._fetch("sdp", text, lambda body: adapt_sdp_response(body, text))
        return adapt_sdp_response(payload, text)

    def annotate_keywords(self, text: str) -> KeywordSet:
        payload = self._fetch("keywords", text, adapt_keywords_response)
        return adapt_keywords_response(payload)

    def annotate(self, text: str) -> AnnotatedSentence:
        return AnnotatedSentence(
            text=text,
            graph=self.annotate_sdp(text),
            keywords=self.annotate_keywords(text),
        )

    def _fetch(self, task: str, text: str, validate: Callable[[bytes], object]) -> bytes:
        if not text.strip():
            raise ValueError("text must be non-empty")
        mode = self.config.mode
        if mode in ("replay", "record") and self.cache is not None:
            cached = self.cache.get(task, text)
            if cached is not None:
                return cached
            if mode == "replay":
                raise CacheMiss(
                    f"no cached {task} response for hash {cache_key(task, text)}"
                )
        payload = self._call(task, text)
        if mode == "record" and self.cache is not None:
            # Validate first so a garbage response never poisons the cache.
            validate(payload)
            self.cache.put(task, text, payload, endpoint=self.config.endpoint)
        return payload

    def _call(self, task: str, text: str) -> bytes:
        if not self.config.endpoint:
            raise UsageError(
                "no service endpoint configured (flag, config file, or environment)"
            )
        headers = {"Content-Type": "application/json"}
        if self.config.token:
            headers["Authorization"] = f"Bearer {self.config.token}"
        body = {"text": text, "task": task}
        attempts = self.config.max_retries + 1
        last_error = ""
        for attempt in range(attempts):
            if attempt:
                delay = _RETRY_BASE_SECONDS * _RETRY_FACTOR ** (attempt - 1)
                log.debug("retrying %s after %.1fs: %s", task, delay, last_error)
                self._sleep(delay)
            try:
                with self._inflight:
                    status, payload = self.transport(
                        self.config.endpoint, body, headers, self.config.timeout
                    )
            except (requests.Timeout, requests.ConnectionError, TimeoutError, ConnectionError) as exc:
                last_error = f"transport failure: {exc}"
                continue
            if status == 200:
                return payload
            excerpt = payload[:200].decode("utf-8", errors="replace")
            if status == 429 or 500 <= status < 600:
                last_error = f"HTTP {status}: {excerpt}"
                continue
            raise ServiceError(f"annotation service returned HTTP {status}: {excerpt}")
        raise ServiceError(
            f"annotation service unreachable after {attempts} attempts ({last_error})"
        )


# ---------------------------------------------------------------------------
# Response adapters
# ---------------------------------------------------------------------------

def _decode_response(payload: bytes) -> Any:
    try:
        doc = json.loads(payload.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise AdapterError(f"response is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise AdapterError("response must be a JSON object")
    status = doc.get("status")
    if status != 0:
        message = doc.get("message", "")
        raise AdapterError(f"service reported status {status!r}: {message}")
    if not isinstance(doc.get("result"), list):
        raise AdapterError("field 'result' missing or not a list")
    return doc["result"]


def adapt_sdp_response(payload: bytes, text: str) -> SemGraph:
    """Convert a parse response into a graph.

    Wire shape: {"status": 0, "result": [{"id": int, "word": str,
    "pos": str, "heads": [{"head": int, "relation": str}]}]}, ids 1-based,
    head 0 for the virtual root.
    """
    result = _decode_response(payload)
    tokens = []
    edges = []
    for position, item in enumerate(result):
        where = f"result[{position}]"
        if not isinstance(item, dict):
            raise AdapterError(f"field '{where}' must be an object")
        token_id = item.get("id")
        if not isinstance(token_id, int) or isinstance(token_id, bool):
            raise AdapterError(f"field '{where}.id' must be an integer")
        word = item.get("word")
        if not isinstance(word, str) or not word:
            raise AdapterError(f"field '{where}.word' must be a non-empty string")
        pos = item.get("pos", "")
        if not isinstance(pos, str):
            raise AdapterError(f"field '{where}.pos' must be a string")
        heads = item.get("heads", [])
        if not isinstance(heads, list):
            raise AdapterError(f"field '{where}.heads' must be a list")
        tokens.append({"index": token_id, "surface": word, "pos": pos})
        for sub, head_item in enumerate(heads):
            sub_where = f"{where}.heads[{sub}]"
            if not isinstance(head_item, dict):
                raise AdapterError(f"field '{sub_where}' must be an object")
            head = head_item.get("head")
            if not isinstance(head, int) or isinstance(head, bool):
                raise AdapterError(f"field '{sub_where}.head' must be an integer")
            relation = head_item.get("relation")
            if not isinstance(relation, str) or not relation:
                raise AdapterError(f"field '{sub_where}.relation' must be a non-empty string")
            edges.append({"head": head, "dep": token_id, "rel": relation})
    try:
        return graph_from_obj({"sentence": text, "tokens": tokens, "edges": edges})
    except SchemaError as exc:
        raise AdapterError(f"response does not assemble into a graph: {exc}") from exc


def adapt_keywords_response(payload: bytes) -> KeywordSet:
    """Convert a keyword response into a KeywordSet.

    Wire shape: {"status": 0, "result": [{"word": str, "score": number}]};
    scores arrive as numbers or numeric strings.
    """
    result = _decode_response(payload)
    try:
        return keywords_from_obj({"keywords": result})
    except SchemaError as exc:
        raise AdapterError(f"malformed keyword response: {exc}") from exc
