import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphgeom.canon import enumerate_connected_upto  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def small_corpus():
    """Every connected graph on at most 7 vertices (996 graphs)."""
    return enumerate_connected_upto(7)


@pytest.fixture(scope="session")
def small_corpus_nontrivial(small_corpus):
    return [g for g in small_corpus if g.n > 1]


@pytest.fixture
def data_dir():
    return DATA
