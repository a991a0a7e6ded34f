"""Exact harmonic, hyperharmonic, binomial, Pochhammer and Stirling quantities.

All values are :class:`fractions.Fraction` or ``int``; nothing here rounds.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import List

from .errors import DomainError

__all__ = [
    "HyperharmonicMemo",
    "binomial",
    "harmonic",
    "hyperharmonic",
    "hyperharmonic_closed",
    "pochhammer",
    "r_stirling_cycle",
    "stirling_cycle",
]


class HyperharmonicMemo:
    """Row cache for H_n^(r).

    ``rows[r - 1][n - 1]`` holds H_n^(r). A row is always a full prefix
    because the recurrence for order r consumes every k <= n of order r - 1.
    Requests beyond ``max_n`` or ``max_r`` are computed in scratch rows and
    not stored. Readers never see a partially extended row: rows are
    replaced, not mutated, under the write lock.
    """

    def __init__(self, max_n: int = 4096, max_r: int = 32):
        self.max_n = max_n
        self.max_r = max_r
        self._rows: List[List[Fraction]] = []
        self._lock = threading.Lock()

    def value(self, n: int, r: int) -> Fraction:
        return self.row(r, n)[n - 1]

    def row(self, r: int, n: int) -> List[Fraction]:
        """Return a list whose first ``n`` entries are H_1^(r), ..., H_n^(r)."""
        if n > self.max_n or r > self.max_r:
            return _build_rows(r, n)[-1]
        rows = self._rows
        if len(rows) >= r and len(rows[r - 1]) >= n:
            return rows[r - 1]
        with self._lock:
            rows = self._rows
            if len(rows) >= r and len(rows[r - 1]) >= n:
                return rows[r - 1]
            width = len(rows[0]) if rows else 0
            if n > width:
                # grow geometrically so a sweep over n stays linear
                width = min(self.max_n, max(n, 2 * width, 16))
            self._rows = _extend_rows(rows, max(r, len(rows)), width)
            return self._rows[r - 1]

    def clear(self) -> None:
        with self._lock:
            self._rows = []


def _build_rows(r: int, n: int) -> List[List[Fraction]]:
    return _extend_rows([], r, n)


def _extend_rows(rows: List[List[Fraction]], r: int, n: int) -> List[List[Fraction]]:
    """New row lists covering orders 1..r and indices 1..n, reusing ``rows`` as prefixes."""
    out: List[List[Fraction]] = []
    for order in range(1, r + 1):
        row = list(rows[order - 1]) if order <= len(rows) else []
        acc = row[-1] if row else Fraction(0)
        for k in range(len(row) + 1, n + 1):
            acc += Fraction(1, k) if order == 1 else out[-1][k - 1]
            row.append(acc)
        out.append(row)
    return out


_MEMO = HyperharmonicMemo()


def _check_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise DomainError(f"{name} must be >= 1, got {value}")


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, exactly. ``harmonic(0)`` is a domain error."""
    _check_positive(n=n)
    return _MEMO.value(n, 1)


def _harmonic0(n: int) -> Fraction:
    # H_0 = 0 so the binomial closed form also covers r = 1
    return Fraction(0) if n == 0 else harmonic(n)


def hyperharmonic(n: int, r: int, memo: HyperharmonicMemo | None = None) -> Fraction:
    """H_n^(r) from the iterated partial-sum recurrence."""
    _check_positive(n=n, r=r)
    return (memo or _MEMO).value(n, r)


def hyperharmonic_closed(n: int, r: int) -> Fraction:
    """H_n^(r) = C(n+r-1, r-1) * (H_{n+r-1} - H_{r-1})."""
    _check_positive(n=n, r=r)
    return binomial(n + r - 1, r - 1) * (_harmonic0(n + r - 1) - _harmonic0(r - 1))


def pochhammer(x: Fraction | int, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1); the empty product is 1."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError("binomial arguments must be nonnegative")
    return math.comb(n, k)


_STIRLING_ROWS: List[List[int]] = [[1]]
_STIRLING_LOCK = threading.Lock()


def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k)."""
    if n < 0 or k < 0:
        raise DomainError("stirling_cycle arguments must be nonnegative")
    if k > n:
        return 0
    if n >= len(_STIRLING_ROWS):
        with _STIRLING_LOCK:
            while len(_STIRLING_ROWS) <= n:
                prev = _STIRLING_ROWS[-1]
                i = len(_STIRLING_ROWS)
                # c(i, j) = (i-1) c(i-1, j) + c(i-1, j-1)
                row = [0] * (i + 1)
                for j in range(1, i + 1):
                    row[j] = (prev[j] * (i - 1) if j < i else 0) + prev[j - 1]
                _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][k]


def r_stirling_cycle(n: int, k: int, r: int) -> int:
    """r-Stirling cycle number: permutations of {1..n} with k cycles, 1..r in distinct cycles.

    Uses the cycle-restricted recurrence seeded at n = r, where only the
    identity arrangement with k = r is admissible.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if n < r:
        raise DomainError(f"r_stirling_cycle needs n >= r, got n={n}, r={r}")
    if k < 0 or k > n:
        return 0
    row = [0] * (n + 1)
    row[r] = 1
    for i in range(r + 1, n + 1):
        new = [0] * (n + 1)
        for j in range(r, i + 1):
            new[j] = (i - 1) * row[j] + row[j - 1]
        row = new
    return row[k]
