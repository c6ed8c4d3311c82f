"""On-disk cache of face posets, keyed by (kind, n, schema version, code version)."""
from __future__ import annotations

import logging
import os
import pickle
import tempfile
from pathlib import Path

from . import __version__
from .trees import SCHEMA_VERSION, FacePoset, TreeError

log = logging.getLogger(__name__)

ENV_VAR = "ANSPACES_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "anspaces"


def cache_path(cache_dir: Path, kind: str, n: int) -> Path:
    return Path(cache_dir) / f"{kind}{n}.v{SCHEMA_VERSION}-{__version__}.pkl"


def _load(path: Path, kind: str, n: int) -> FacePoset | None:
    try:
        with open(path, "rb") as fh:
            doc = pickle.load(fh)
        if (doc.get("kind"), doc.get("n"), doc.get("code_version")) != (kind, n, __version__):
            raise TreeError("cache key mismatch")
        return FacePoset.from_json(doc)
    except FileNotFoundError:
        return None
    except Exception as exc:  # corrupt or stale cache: rebuild
        log.warning("ignoring unreadable cache file %s (%s); rebuilding", path, exc)
        return None


def _store(path: Path, poset: FacePoset) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = poset.to_json()
    doc["code_version"] = __version__
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            pickle.dump(doc, fh, protocol=pickle.HIGHEST_PROTOCOL)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def load_or_build(kind: str, n: int, cache_dir: Path | None, cap: int | None = None) -> FacePoset:
    """Return the face poset of K_n / J_n, using the cache when ``cache_dir`` is set."""
    if cache_dir is None:
        return FacePoset.build(kind, n) if cap is None else FacePoset.build(kind, n, cap)
    path = cache_path(cache_dir, kind, n)
    poset = _load(path, kind, n)
    if poset is None:
        poset = FacePoset.build(kind, n) if cap is None else FacePoset.build(kind, n, cap)
        _store(path, poset)
    return poset
