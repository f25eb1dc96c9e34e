import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdgraph import build_group  # noqa: E402


@lru_cache(maxsize=None)
def grp(spec: str):
    """Shared group instances; memoized engine state is reused across tests."""
    return build_group(spec)


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    mp = pytest.MonkeyPatch()
    mp.setenv("CDGRAPH_CACHE_DIR", str(tmp_path_factory.mktemp("cache")))
    yield
    mp.undo()
