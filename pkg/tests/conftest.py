import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tools"))

from exkh.corpus import load_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Entries within the oracle range used by the acceptance criteria."""
    return [e for e in corpus if e.expected["n"] <= 12]
