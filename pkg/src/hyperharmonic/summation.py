"""Closed forms of S(r, m) = sum_{n>=1} H_n^(r) / n^m as zeta combinations.

The reduction used by :func:`s_rm`::

    S(r, m) = S(1, m) + sum_{k=1}^{r-1} (1/k) [S(k, m-1) - B(k, m)]

with the Euler sum S(1, m) as base case and

    B(k, m) = (1/k!) sum_{n>=1} (n)_k / n^m = (1/k!) sum_j c(k, j) zeta(m - j),

the second form coming from expanding the rising factorial in powers of n
with unsigned Stirling numbers of the first kind.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .combinatorics import stirling_cycle
from .errors import AccuracyError, DivergenceError, DomainError
from .zeta_algebra import ZetaExpr

__all__ = [
    "SumKey",
    "b_km",
    "b_km_hypergeometric",
    "convergent",
    "euler_s1",
    "s_rm",
]


class SumKey(NamedTuple):
    r: int
    m: int


def convergent(r: int, m: int) -> bool:
    """True iff S(r, m) converges, i.e. m >= r + 1."""
    if r < 1 or m < 1:
        raise DomainError(f"need r >= 1 and m >= 1, got r={r}, m={m}")
    return m >= r + 1


def _require_convergent(r: int, m: int) -> None:
    if r < 1:
        raise DomainError(f"order r must be >= 1, got {r}")
    if m < r + 1:
        raise DivergenceError(f"divergent: S({r},{m}) requires m >= r+1", r=r, m=m)


@lru_cache(maxsize=None)
def euler_s1(m: int) -> ZetaExpr:
    """S(1, m) = ((m+2)/2) zeta(m+1) - (1/2) sum_{k=1}^{m-2} zeta(m-k) zeta(k+1)."""
    _require_convergent(1, m)
    out = ZetaExpr.z(m + 1, coeff=Fraction(m + 2, 2))
    for k in range(1, m - 1):
        out -= ZetaExpr.z(m - k).scale(Fraction(1, 2)) * ZetaExpr.z(k + 1)
    return out


@lru_cache(maxsize=None)
def b_km(k: int, m: int) -> ZetaExpr:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if m < k + 2:
        raise DivergenceError(f"divergent: B({k},{m}) requires m >= k+2", r=k, m=m)
    scale = Fraction(1, math.factorial(k))
    return ZetaExpr({(m - j,): scale * stirling_cycle(k, j) for j in range(1, k + 1)})


def b_km_hypergeometric(
    k: int,
    m: int,
    tol: float = 1e-12,
    start: int = 64,
    max_doublings: int = 14,
) -> tuple[float, float]:
    """B(k, m) summed straight from its hypergeometric terms.

    The terms binom(n+k, k) / (n+1)^m are generated by their ratio. Partial
    sums at N = start * 2^i are Richardson-extrapolated; for a rational term
    the tail expands in integer powers of 1/N, so each level removes one
    power. Returns ``(value, error_estimate)``; raises AccuracyError when the
    estimate is still above ``tol`` after ``max_doublings`` doublings.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if m < k + 2:
        raise DivergenceError(f"divergent: B({k},{m}) requires m >= k+2", r=k, m=m)

    partials: list[float] = []
    table: list[list[float]] = []
    chunk: list[float] = []
    running: list[float] = []
    coeff = 1.0
    n = 0
    target = start
    best = (math.nan, math.inf)
    for level in range(max_doublings + 1):
        while n < target:
            if n:
                coeff *= (n + k) / n
            chunk.append(coeff / (n + 1) ** m)
            n += 1
        running.append(math.fsum(chunk))
        chunk = []
        partials.append(math.fsum(running))
        row = [partials[-1]]
        for j in range(1, level + 1):
            f = 2.0**j
            row.append(row[j - 1] + (row[j - 1] - table[-1][j - 1]) / (f - 1.0))
        table.append(row)
        if level >= 2:
            err = abs(row[-1] - table[-2][-1])
            if err < best[1]:
                best = (row[-1], err)
            if err <= tol:
                return row[-1], err
        target *= 2
    raise AccuracyError(
        f"B({k},{m}) hypergeometric sum reached error {best[1]:.3g} > tol {tol:.3g}"
    )


@lru_cache(maxsize=None)
def _s_rm_cached(r: int, m: int) -> ZetaExpr:
    return _reduction_step(r, m, _s_rm_cached)


def _s_rm_plain(r: int, m: int) -> ZetaExpr:
    return _reduction_step(r, m, _s_rm_plain)


def _reduction_step(r: int, m: int, recurse) -> ZetaExpr:
    if r == 1:
        return euler_s1(m)
    out = euler_s1(m)
    for k in range(1, r):
        out += (recurse(k, m - 1) - b_km(k, m)).scale(Fraction(1, k))
    return out


def s_rm(r: int, m: int, *, memoize: bool = True) -> ZetaExpr:
    """Exact closed form of S(r, m) for m >= r + 1."""
    _require_convergent(r, m)
    return _s_rm_cached(r, m) if memoize else _s_rm_plain(r, m)
