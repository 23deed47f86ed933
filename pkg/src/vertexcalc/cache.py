"""Append-only JSON-lines store of vertex amplitudes."""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .exact_algebra import DomainError
from .partitions import decode_triple, encode_triple
from .serialization import qrational_from_json, qrational_to_json
from .vertex import FLAVORS, memo_items, seed_memo

VERSION = 1
log = logging.getLogger(__name__)


class AmplitudeCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._known: set[tuple[str, str]] = set()

    def load(self) -> list:
        """Read every valid record; unknown versions are ignored, corrupt lines skipped."""
        records = []
        if not self.path.exists():
            return records
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    if obj.get("version") != VERSION:
                        continue
                    flavor = obj["flavor"]
                    if flavor not in FLAVORS:
                        raise DomainError(f"unknown flavor {flavor!r}")
                    triple = decode_triple(obj["triple"])
                    value = qrational_from_json(obj["value"])
                except (ValueError, KeyError, TypeError, AttributeError, DomainError) as exc:
                    log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, exc)
                    continue
                records.append((flavor, triple, value))
                self._known.add((flavor, encode_triple(triple)))
        return records

    def seed(self) -> int:
        return seed_memo(self.load())

    def append(self, records) -> int:
        """Write records not already on disk; returns how many were written."""
        fresh = []
        for flavor, triple, value in records:
            key = (flavor, encode_triple(triple))
            if key in self._known:
                continue
            self._known.add(key)
            fresh.append(
                json.dumps(
                    {"flavor": flavor, "triple": key[1], "value": qrational_to_json(value), "version": VERSION},
                    sort_keys=True,
                )
            )
        if fresh:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write("\n".join(fresh) + "\n")
        return len(fresh)

    def flush_memo(self) -> int:
        return self.append(sorted(memo_items(), key=lambda r: (r[0], r[1])))
