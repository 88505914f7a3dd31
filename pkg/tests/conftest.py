from __future__ import annotations

from pathlib import Path

import pytest

from sdpkey import AnnotatedSentence, load_annotation
from sdpkey.wordsim import ExactMatchProvider

FIXTURES = Path(__file__).parent / "fixtures"

# Every authored sentence bundle; the identity suite runs over all of them.
BUNDLE_NAMES = (
    "gangkou",
    "airfreight",
    "aloof",
    "platforms",
    "tv_ref",
    "tv_hyp",
    "scoff_ref",
    "scoff_hyp",
)


@pytest.fixture(scope="session")
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def exact() -> ExactMatchProvider:
    return ExactMatchProvider()


@pytest.fixture(scope="session")
def bundles() -> dict[str, AnnotatedSentence]:
    return {
        name: load_annotation(FIXTURES / f"{name}.annotation.json")
        for name in BUNDLE_NAMES
    }
