"""Persistent JSON cache for triangle rows and sequence values.

The cache is an optimization, never a source of truth: on load, three random
triangle rows are revalidated against the recurrence (using the cached
neighbor row) and three random sequence entries are recomputed from scratch;
any discrepancy, malformed document, or unknown format_version discards the
whole file and everything is recomputed. The sampling is seeded so repeated
runs stay byte-identical.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from .exact import rational_from_text, rational_to_text
from .polycauchy import level2_by_formula
from .stirling import level2_by_recurrence

__all__ = ["CACHE_FORMAT_VERSION", "CacheSession"]

CACHE_FORMAT_VERSION = 1
_REVALIDATION_SEED = 1729
_SPOT_CHECKS = 3


def _rows_are_plausible(rows: list) -> bool:
    if not isinstance(rows, list):
        return False
    for n, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n + 1:
            return False
        if not all(isinstance(v, int) for v in row):
            return False
    return True


def _row_follows_recurrence(rows: list[list[int]], n: int) -> bool:
    if n == 0:
        return rows[0] == [1]
    prev = rows[n - 1]

    def prev_at(m: int) -> int:
        return prev[m] if 0 <= m < len(prev) else 0

    return all(
        rows[n][m] == prev_at(m - 1) + (n - 1) ** 2 * prev_at(m) for m in range(n + 1)
    )


class CacheSession:
    """One open cache: load, serve, record, save. ``path=None`` disables it."""

    def __init__(self, path=None):
        self.path = Path(path) if path is not None else None
        self.hits = 0
        self.misses = 0
        self.revalidated = 0
        self._rows = []
        self._values = {}
        self._dirty = False
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        try:
            document = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return
        if not isinstance(document, dict):
            return
        if document.get("format_version") != CACHE_FORMAT_VERSION:
            return
        rows = document.get("triangle_rows", [])
        entries = document.get("polycauchy_entries", [])
        if not _rows_are_plausible(rows):
            return
        values: dict[tuple[int, int], Fraction] = {}
        try:
            for n, k, text in entries:
                values[(int(n), int(k))] = rational_from_text(text)
        except (TypeError, ValueError):
            return
        if not self._spot_check(rows, values):
            return
        self._rows = rows
        self._values = values

    def _spot_check(self, rows: list[list[int]], values: dict[tuple[int, int], Fraction]) -> bool:
        rng = random.Random(_REVALIDATION_SEED)
        if rows:
            picks = range(len(rows)) if len(rows) <= _SPOT_CHECKS else sorted(
                rng.sample(range(len(rows)), _SPOT_CHECKS)
            )
            for n in picks:
                self.revalidated += 1
                if not _row_follows_recurrence(rows, n):
                    self.revalidated = 0
                    return False
        if values:
            keys = sorted(values)
            picks = keys if len(keys) <= _SPOT_CHECKS else sorted(rng.sample(keys, _SPOT_CHECKS))
            triangle = level2_by_recurrence(max(n for n, _ in picks))
            for n, k in picks:
                self.revalidated += 1
                if values[(n, k)] != level2_by_formula(n, k, triangle):
                    self.revalidated = 0
                    return False
        return True

    # -- triangle rows ------------------------------------------------------

    def get_triangle_rows(self, nmax: int) -> list[list[int]] | None:
        if len(self._rows) > nmax:
            self.hits += nmax + 1
            return [row[:] for row in self._rows[: nmax + 1]]
        self.misses += nmax + 1
        return None

    def put_triangle_rows(self, rows: list[list[int]]) -> None:
        if self.path is not None and len(rows) > len(self._rows):
            self._rows = [list(row) for row in rows]
            self._dirty = True

    # -- sequence values ----------------------------------------------------

    def get_values(self, k: int, nmax: int) -> list[Fraction] | None:
        if all((n, k) in self._values for n in range(nmax + 1)):
            self.hits += nmax + 1
            return [self._values[(n, k)] for n in range(nmax + 1)]
        self.misses += nmax + 1
        return None

    def put_values(self, k: int, values: list[Fraction]) -> None:
        if self.path is None:
            return
        for n, value in enumerate(values):
            if self._values.get((n, k)) != value:
                self._values[(n, k)] = value
                self._dirty = True

    # -- persistence ----------------------------------------------------------

    def save(self) -> None:
        if self.path is None or not self._dirty:
            return
        document = {
            "format_version": CACHE_FORMAT_VERSION,
            "triangle_rows": self._rows,
            "polycauchy_entries": [
                [n, k, rational_to_text(self._values[(n, k)])]
                for n, k in sorted(self._values)
            ],
        }
        self.path.write_text(json.dumps(document) + "\n")
        self._dirty = False

    def stats_line(self) -> str:
        if self.path is None:
            return "cache: off"
        return f"cache: hits={self.hits} misses={self.misses} revalidated={self.revalidated}"
