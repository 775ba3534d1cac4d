"""Append-only JSON-lines store of computed counts, so long sweeps can resume."""

from __future__ import annotations

import json
import os
from pathlib import Path

CACHE_ENV = "PATTERNCOUNT_CACHE_DIR"
CACHE_FILE = "counts.jsonl"


def _key(n: int, r: int, pattern_code: str, host: str) -> tuple:
    return (n, r, pattern_code, host)


class ResultCache:
    """Records ``{n, r, pattern_code, parts | graph6, count}`` one per line.

    ``count`` is stored as a decimal string.  Unreadable lines are skipped.
    """

    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self.path = self.dir / CACHE_FILE
        self._data: dict[tuple, int] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                try:
                    rec = json.loads(line)
                    self._data[self._record_key(rec)] = int(rec["count"])
                except (ValueError, KeyError, TypeError):
                    continue

    @classmethod
    def from_env(cls, directory: str | None = None) -> "ResultCache | None":
        directory = directory or os.environ.get(CACHE_ENV)
        return cls(directory) if directory else None

    @staticmethod
    def _host(parts=None, graph6=None) -> str:
        if (parts is None) == (graph6 is None):
            raise ValueError("exactly one of parts and graph6 is required")
        return "parts:" + ",".join(map(str, parts)) if parts is not None else "g6:" + graph6

    def _record_key(self, rec: dict) -> tuple:
        host = self._host(rec.get("parts"), rec.get("graph6"))
        return _key(int(rec["n"]), int(rec["r"]), rec["pattern_code"], host)

    def get(self, n: int, r: int, pattern_code: str, *, parts=None, graph6=None) -> int | None:
        return self._data.get(_key(n, r, pattern_code, self._host(parts, graph6)))

    def put(self, n: int, r: int, pattern_code: str, count: int, *, parts=None, graph6=None) -> None:
        key = _key(n, r, pattern_code, self._host(parts, graph6))
        if self._data.get(key) == count:
            return
        self._data[key] = count
        rec = {"n": n, "r": r, "pattern_code": pattern_code}
        if parts is not None:
            rec["parts"] = list(parts)
        else:
            rec["graph6"] = graph6
        rec["count"] = str(count)
        self.dir.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    def __len__(self) -> int:
        return len(self._data)
