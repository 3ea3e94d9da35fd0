# sqfreg/reg_cache.py
"""
reg_cache.py
------------
Advisory on-disk cache of regularity values for sweeps.

The cache is a flat append-only JSONL file, one entry per line:

    {"key": "<graph6>|<s>|<p>", "reg": <int>}

Unparsable lines are ignored on load, so a truncated or hand-edited file never
breaks a run; the cache is never authoritative, only a shortcut. New entries
are held in memory and appended by ``flush``.

Environment variables respected:
- SQFR_CACHE   (default: unset, no cache)
"""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple

from . import config

logger = logging.getLogger(__name__)


def cache_key(graph6: str, s: int, p: int) -> str:
    return f"{graph6}|{s}|{p}"


@dataclass
class RegularityCache:
    path: Optional[str] = field(default_factory=lambda: config.DEFAULT_CACHE)
    _entries: Dict[str, int] = field(default_factory=dict, init=False, repr=False)
    _pending: Dict[str, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.path:
            self._entries.update(self._load())

    def _load(self) -> Dict[str, int]:
        if not self.path or not os.path.exists(self.path):
            return {}
        out: Dict[str, int] = {}
        bad = 0
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                for line in f:
                    if not line.strip():
                        continue
                    try:
                        data = json.loads(line)
                        key, reg = str(data["key"]), data["reg"]
                        if not isinstance(reg, int) or isinstance(reg, bool):
                            raise ValueError(reg)
                        out[key] = reg
                    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                        bad += 1
                        continue
        except OSError as e:
            logger.warning("[reg_cache] error reading %s: %r", self.path, e)
        if bad:
            logger.warning("[reg_cache] ignored %d unparsable line(s) in %s", bad, self.path)
        return out

    @property
    def enabled(self) -> bool:
        return bool(self.path)

    def __len__(self) -> int:
        return len(self._entries)

    def merge(self, items: Iterable[Tuple[str, int]]) -> None:
        """Absorb ``(key, reg)`` pairs computed elsewhere (e.g. in a worker process)."""
        for key, reg in items:
            if self._entries.get(key) != reg:
                self._entries[key] = reg
                self._pending[key] = reg

    def snapshot(self) -> Dict[str, int]:
        return dict(self._entries)

    def flush(self) -> int:
        """Append pending entries; returns how many were written."""
        if not self.path or not self._pending:
            self._pending.clear()
            return 0
        written = 0
        try:
            Path(self.path).parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                for key in sorted(self._pending):
                    f.write(json.dumps({"key": key, "reg": self._pending[key]}, sort_keys=True) + "\n")
                    written += 1
        except OSError as e:
            logger.warning("[reg_cache] could not append to %s: %r", self.path, e)
            return 0
        self._pending.clear()
        return written
