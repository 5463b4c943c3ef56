"""Memo table for K-polynomials, with an optional content-addressed disk spill."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from pathlib import Path

from .polynomial import IntPolynomial


def canonical_key(gens: tuple[tuple[int, ...], ...]) -> str:
    return ";".join(",".join(map(str, g)) for g in gens)


class KPolynomialCache:
    """In-memory map from canonical generator tuples to K-polynomials.

    Concurrent writers always store identical values, so plain dict
    assignment (last writer wins) is sufficient.  When ``disk_dir`` is set,
    top-level results are also written there as ``<sha256>.json``.
    """

    def __init__(self, disk_dir: str | os.PathLike | None = None) -> None:
        self.memory: dict[tuple, IntPolynomial] = {}
        self.disk_dir = Path(disk_dir) if disk_dir else None
        self.hits = 0
        self.disk_hits = 0
        self._lock = threading.Lock()

    def get(self, key: tuple) -> IntPolynomial | None:
        val = self.memory.get(key)
        if val is not None:
            self.hits += 1
        return val

    def put(self, key: tuple, value: IntPolynomial) -> None:
        self.memory[key] = value

    def clear(self) -> None:
        self.memory.clear()

    def _path(self, gens: tuple) -> Path:
        assert self.disk_dir is not None
        digest = hashlib.sha256(canonical_key(gens).encode()).hexdigest()
        return self.disk_dir / f"{digest}.json"

    def load(self, gens: tuple) -> IntPolynomial | None:
        if self.disk_dir is None:
            return None
        path = self._path(gens)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("key") != canonical_key(gens):
            return None
        self.disk_hits += 1
        return IntPolynomial(tuple(data["coeffs"]))

    def store(self, gens: tuple, value: IntPolynomial) -> None:
        if self.disk_dir is None:
            return
        with self._lock:
            self.disk_dir.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"key": canonical_key(gens), "coeffs": value.to_json()})
        fd, tmp = tempfile.mkstemp(dir=self.disk_dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, self._path(gens))


DEFAULT_CACHE = KPolynomialCache()
