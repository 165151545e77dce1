"""Persistent beta cache: a small line-oriented text file.

    # fermat-mld beta-cache v1
    mu,nu,beta
    ...

Rows are sorted by (nu, mu). Files carrying any other header are refused.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from .errors import CacheFormatError

HEADER = "# fermat-mld beta-cache v1"


class BetaCache:
    def __init__(self, path=None, entries: Optional[dict] = None):
        self.path = Path(path) if path is not None else None
        self.entries: dict[tuple[int, int], int] = dict(entries or {})
        self.dirty = False

    @classmethod
    def load(cls, path) -> BetaCache:
        path = Path(path)
        if not path.exists():
            return cls(path)
        lines = path.read_text().splitlines()
        if not lines or lines[0].strip() != HEADER:
            found = lines[0].strip() if lines else "<empty file>"
            raise CacheFormatError(f"{path}: unsupported cache header {found!r}")
        entries = {}
        for lineno, line in enumerate(lines[1:], start=2):
            line = line.strip()
            if not line:
                continue
            try:
                mu, nu, beta = (int(x) for x in line.split(","))
            except ValueError:
                raise CacheFormatError(f"{path}:{lineno}: malformed row {line!r}") from None
            entries[(mu, nu)] = beta
        return cls(path, entries)

    def get(self, key: tuple[int, int]) -> Optional[int]:
        return self.entries.get(key)

    def put(self, mu: int, nu: int, value: int) -> None:
        old = self.entries.get((mu, nu))
        if old is not None and old != value:
            raise CacheFormatError(f"cached beta({mu},{nu}) = {old} disagrees with computed {value}")
        if old is None:
            self.entries[(mu, nu)] = value
            self.dirty = True

    def __len__(self) -> int:
        return len(self.entries)

    def dumps(self) -> str:
        rows = sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        return "\n".join([HEADER] + [f"{mu},{nu},{v}" for (mu, nu), v in rows]) + "\n"

    def save(self, path=None) -> None:
        path = Path(path) if path is not None else self.path
        if path is None:
            raise ValueError("no cache path")
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(self.dumps())
        os.replace(tmp, path)
        self.dirty = False
