"""Run configuration: command-line flags override a JSON file, which overrides defaults."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

CONFIG_ENV = "PATHIDEAL_LAB_CONFIG"
CACHE_DIR_ENV = "PATHIDEAL_LAB_CACHE_DIR"


def _default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or str(Path.home() / ".cache")
    return str(Path(base) / "pathideal-lab")


@dataclass(frozen=True)
class Config:
    jobs: int = 0  # 0 means one worker per logical core
    cache_dir: str | None = None
    no_cache: bool = False
    oracle: bool = False
    ntf_s_max: int = 3

    @property
    def workers(self) -> int:
        return self.jobs if self.jobs > 0 else (os.cpu_count() or 1)

    @property
    def disk_cache(self) -> str | None:
        if self.no_cache:
            return None
        return self.cache_dir or _default_cache_dir()


def _from_file(path: str) -> dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValueError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"config {path} must hold a JSON object")
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def load_config(overrides: dict[str, Any] | None = None,
                environ: dict[str, str] | None = None) -> Config:
    """Resolve the configuration.  ``overrides`` holds flag values; ``None``
    entries mean the flag was not given."""
    env = os.environ if environ is None else environ
    cfg = Config()
    path = env.get(CONFIG_ENV)
    if path:
        cfg = replace(cfg, **_from_file(path))
    if env.get(CACHE_DIR_ENV):
        cfg = replace(cfg, cache_dir=env[CACHE_DIR_ENV])
    given = {k: v for k, v in (overrides or {}).items() if v is not None}
    return replace(cfg, **given)
