"""Independent checks for the closed forms.

Nothing here goes through the zeta-combination machinery except
:func:`report`, which compares the two routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence

from .combinatorics import harmonic, hyperharmonic, stirling_cycle
from .errors import DivergenceError, DomainError
from .summation import SumKey, s_rm
from .zeta import zeta
from .zeta_algebra import ZetaExpr

__all__ = [
    "EULER_GAMMA",
    "HyperharmonicStream",
    "PowerSeries",
    "SumReport",
    "accelerated_sum",
    "crude_bounds",
    "crude_bounds_check",
    "dilog",
    "direct_sum",
    "exact_partial_sum",
    "gf_hyperharmonic_coeffs",
    "gf_stirling_coeffs",
    "harmonic_float",
    "hn_bounds_check",
    "lemma1_ratio",
    "lemma2_antiderivative",
    "lemma2_check",
    "report",
    "tail_estimate",
]

EULER_GAMMA = 0.5772156649015329


class _Neumaier:
    """Running compensated sum."""

    __slots__ = ("s", "c")

    def __init__(self, start: float = 0.0):
        self.s = start
        self.c = 0.0

    def add(self, x: float) -> None:
        s = self.s
        t = s + x
        if abs(s) >= abs(x):
            self.c += (s - t) + x
        else:
            self.c += (x - t) + s
        self.s = t

    @property
    def value(self) -> float:
        return self.s + self.c


class HyperharmonicStream:
    """Yields H_1^(r), H_2^(r), ... in floating point.

    Each step multiplies the integer binomial C(n+r-1, r-1) by (n+r-1)/n
    (exact in Python integers) and adds 1/(n+r-1) to a compensated running
    harmonic number, so the emitted value carries only a few roundings no
    matter how far the stream has advanced.
    """

    def __init__(self, r: int):
        if r < 1:
            raise DomainError(f"order r must be >= 1, got {r}")
        self.r = r
        self.n = 0
        self._binom = 1
        self._h = _Neumaier()
        for k in range(1, r):
            self._h.add(1.0 / k)
        self._h_base = float(sum(Fraction(1, k) for k in range(1, r)))

    def __iter__(self) -> Iterator[float]:
        return self

    def __next__(self) -> float:
        self.n += 1
        n, r = self.n, self.r
        top = n + r - 1
        self._binom = self._binom * top // n
        self._h.add(1.0 / top)
        # C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}); subtract the compensated parts separately
        diff = (self._h.s - self._h_base) + self._h.c
        return float(self._binom) * diff


def direct_sum(r: int, m: int, n_terms: int) -> float:
    """sum_{n=1}^{N} H_n^(r) / n^m in ascending n with compensated accumulation."""
    if n_terms < 1:
        raise DomainError(f"N must be >= 1, got {n_terms}")
    acc = _Neumaier()
    stream = HyperharmonicStream(r)
    add = acc.add
    n = 0
    for h in stream:
        n += 1
        add(h / float(n) ** m)
        if n == n_terms:
            break
    return acc.value


def exact_partial_sum(r: int, m: int, n_terms: int) -> Fraction:
    return sum((hyperharmonic(n, r) / Fraction(n) ** m for n in range(1, n_terms + 1)), Fraction(0))


def tail_estimate(r: int, m: int, n_terms: int) -> float:
    """Approximate sum_{n>N} H_n^(r) / n^m.

    Uses H_n^(r) ~ n^(r-1) (ln n + gamma - H_{r-1}) / (r-1)!; the constant
    is the next order beyond the pure n^(r-1) ln n growth. Integrating from
    N with a = m - r + 1 gives

        ((ln N + gamma - H_{r-1})/(a-1) + 1/(a-1)^2) N^(1-a) / (r-1)!.

    This is an estimate, not a bound.
    """
    if m < r + 1:
        raise DivergenceError(f"divergent: S({r},{m}) requires m >= r+1", r=r, m=m)
    if n_terms < 2:
        raise DomainError(f"N must be >= 2, got {n_terms}")
    a1 = m - r  # a - 1
    shift = EULER_GAMMA - float(sum(Fraction(1, k) for k in range(1, r)))
    lead = (math.log(n_terms) + shift) / a1 + 1.0 / a1**2
    return lead * n_terms ** (-a1) / math.factorial(r - 1)


def accelerated_sum(r: int, m: int, n_terms: int) -> float:
    if m < r + 1:
        raise DivergenceError(f"divergent: S({r},{m}) requires m >= r+1", r=r, m=m)
    return direct_sum(r, m, n_terms) + tail_estimate(r, m, n_terms)


@dataclass(frozen=True)
class SumReport:
    key: SumKey
    closed_form: ZetaExpr
    closed_value: float
    oracle_value: float
    discrepancy: float
    terms_used: int


def report(r: int, m: int, n_terms: int) -> SumReport:
    expr = s_rm(r, m)
    closed = expr.evaluate()
    oracle = accelerated_sum(r, m, n_terms)
    return SumReport(SumKey(r, m), expr, closed, oracle, abs(closed - oracle), n_terms)


# -- formal power series -----------------------------------------------------


class PowerSeries:
    """Power series with exact rational coefficients, truncated after z^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int], order: int | None = None):
        if order is None:
            order = len(coeffs) - 1
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.coeffs: List[Fraction] = c

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def neg_log_one_minus_z(cls, order: int) -> PowerSeries:
        """-ln(1 - z) = sum z^n / n."""
        return cls([0] + [Fraction(1, n) for n in range(1, order + 1)], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]})"

    def _common(self, other: PowerSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = self._common(other)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = self._common(other)
        return PowerSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other: PowerSeries | Fraction | int) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs])
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        return PowerSeries([sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other: PowerSeries | Fraction | int) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        b = other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("power series division needs a unit (nonzero constant term)")
        n = self._common(other)
        out: List[Fraction] = []
        for k in range(n + 1):
            s = self.coeffs[k] - sum((out[i] * b[k - i] for i in range(k)), Fraction(0))
            out.append(s / b[0])
        return PowerSeries(out)

    def __pow__(self, e: int) -> PowerSeries:
        out = PowerSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> PowerSeries:
        return PowerSeries([n * self.coeffs[n] for n in range(1, len(self.coeffs))])

    def integrate_over_z(self) -> PowerSeries:
        """Antiderivative of f(z)/z vanishing at 0: a_n -> a_n / n. Needs a_0 = 0."""
        if self.coeffs[0] != 0:
            raise DomainError("f(z)/z has a pole at 0 unless the constant term vanishes")
        return PowerSeries([0] + [self.coeffs[n] / n for n in range(1, len(self.coeffs))])


def gf_hyperharmonic_coeffs(r: int, order: int) -> PowerSeries:
    """Expansion of -ln(1-z) / (1-z)^r through z^order."""
    if r < 1 or order < 1:
        raise DomainError("need r >= 1 and order >= 1")
    series = PowerSeries.neg_log_one_minus_z(order)
    one_minus_z = PowerSeries([1, -1], order)
    for _ in range(r):
        series = series / one_minus_z
    return series


def gf_stirling_coeffs(m: int, order: int) -> PowerSeries:
    """Expansion of (-ln(1-z))^m / m! through z^order."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return (PowerSeries.neg_log_one_minus_z(order) ** m) / math.factorial(m)


# -- inequalities and asymptotics -------------------------------------------


def harmonic_float(n: int) -> float:
    return math.fsum(1.0 / k for k in range(1, n + 1))


_EXACT_HARMONIC_LIMIT = 2000


def hn_bounds_check(n: int) -> bool:
    """1/(2(n+1)) + ln n + gamma < H_n < 1/(2n) + ln n + gamma."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n <= _EXACT_HARMONIC_LIMIT:
        h = float(harmonic(n))
    else:
        h = harmonic_float(n)
    # compare H_n - ln n - gamma against the two 1/(2n)-type terms
    excess = (h - math.log(n)) - EULER_GAMMA
    return 1.0 / (2 * (n + 1)) < excess < 1.0 / (2 * n)


def crude_bounds(r: int, s: int) -> tuple[float, float]:
    """zeta(s+1)/r! and (3/2) (2r)^r / (r-1)! zeta(s)."""
    lower = zeta(s + 1) / math.factorial(r)
    upper = 1.5 * (2 * r) ** r / math.factorial(r - 1) * zeta(s)
    return lower, upper


def crude_bounds_check(r: int, s: int, n_terms: int) -> bool:
    if r < 2 or s < 2:
        raise DomainError(f"need r >= 2 and s >= 2, got r={r}, s={s}")
    lower, upper = crude_bounds(r, s)
    value = accelerated_sum(r, r + s, n_terms)
    return lower < value < upper


def lemma1_ratio(r: int, n: int) -> float:
    """H_n^(r) divided by n^(r-1) ln(n) / (r-1)!; tends to 1."""
    if r < 2 or n < 2:
        raise DomainError(f"need r >= 2 and n >= 2, got r={r}, n={n}")
    stream = HyperharmonicStream(r)
    h = 0.0
    for _ in range(n):
        h = next(stream)
    return h / (n ** (r - 1) * math.log(n) / math.factorial(r - 1))


# -- dilogarithm antiderivative ---------------------------------------------


def dilog(x: float) -> float:
    """Li_2(x) for 0 <= x <= 1: series up to 1/2, reflection above."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"dilog implemented on [0, 1], got {x}")
    if x > 0.5:
        if x == 1.0:
            return math.pi**2 / 6
        return math.pi**2 / 6 - math.log(x) * math.log1p(-x) - dilog(1.0 - x)
    terms = []
    p = x
    k = 1
    while True:
        t = p / (k * k)
        terms.append(t)
        if t < 1e-18:
            break
        k += 1
        p *= x
    return math.fsum(terms)


def lemma2_antiderivative(r: int, z: float) -> float:
    """Li_2(1-z) + ln^2(z)/2 - sum_{k<r} (ln z / (k z^k) + 1 / (k^2 z^k))."""
    lz = math.log(z)
    parts = [dilog(1.0 - z), 0.5 * lz * lz]
    for k in range(1, r):
        zk = z**k
        parts.append(-lz / (k * zk))
        parts.append(-1.0 / (k * k * zk))
    return math.fsum(parts)


def lemma2_integrand(r: int, z: float) -> float:
    return math.log(z) / ((1.0 - z) * z**r)


def lemma2_check(r: int, z: float) -> float:
    """|d/dz antiderivative - integrand| by a five-point central difference."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if not 0.05 < z < 0.95:
        raise DomainError(f"z must lie in (0.05, 0.95), got {z}")
    h = 1e-3 * z
    f = lambda x: lemma2_antiderivative(r, x)  # noqa: E731
    deriv = (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h)
    return abs(deriv - lemma2_integrand(r, z))
