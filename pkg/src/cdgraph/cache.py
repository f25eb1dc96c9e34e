"""On-disk cache of class-profile summaries.

Entries are keyed by (group spec, engine version) and hold class sizes,
representatives (cycle notation and generator words) and the orders of the
normal subgroups.  The directory comes from ``CDGRAPH_CACHE_DIR``, falling
back to ``~/.cache/cdgraph``.  Writes go through a temporary file and an
atomic rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .classes import conjugacy_classes
from .group import PermutationGroup
from .subgroups import normal_lattice
from .verify import element_word

__all__ = ["ENGINE_VERSION", "ProfileCache", "profile_summary", "cache_dir"]

ENGINE_VERSION = "cdgraph-0.1.0/1"


def cache_dir() -> Path:
    env = os.environ.get("CDGRAPH_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "cdgraph"


def profile_summary(G: PermutationGroup, spec: str) -> dict:
    """JSON-ready summary of the classes and normal subgroups of ``G``."""
    prof = conjugacy_classes(G)
    return {
        "spec": spec,
        "order": G.order(),
        "degree": G.degree,
        "class_sizes": prof.sizes(),
        "element_orders": [c.order_of_elements for c in prof.classes],
        "representatives": [str(c.representative) for c in prof.classes],
        "representative_words": [element_word(G, c.representative) for c in prof.classes],
        "lattice_orders": normal_lattice(G).orders(),
    }


class ProfileCache:
    def __init__(self, directory: str | Path | None = None, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else cache_dir()
        self.enabled = enabled

    def _path(self, spec: str) -> Path:
        key = json.dumps([spec, ENGINE_VERSION])
        return self.directory / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def get(self, spec: str) -> dict | None:
        if not self.enabled:
            return None
        path = self._path(spec)
        try:
            entry = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if entry.get("engine_version") != ENGINE_VERSION or entry.get("summary", {}).get("spec") != spec:
            return None
        return entry["summary"]

    def put(self, spec: str, summary: dict) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        data = json.dumps({"engine_version": ENGINE_VERSION, "summary": summary}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(data)
            os.replace(tmp, self._path(spec))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def summary(self, G: PermutationGroup, spec: str) -> dict:
        """Cached summary, computing and storing it on a miss."""
        hit = self.get(spec)
        if hit is not None:
            return hit
        s = profile_summary(G, spec)
        self.put(spec, s)
        return s
