"""Named property checks run by ``hyperharmonic verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Tuple, Union

from . import combinatorics as cb
from . import oracle, summation
from .errors import DivergenceError
from .zeta import zeta, zeta_eta, zeta_euler_maclaurin, zeta_even_exact

# table keys of the published S(2,m), S(3,m), S(4,m) tables
TABLE_KEYS = (
    [(2, m) for m in range(3, 11)]
    + [(3, m) for m in range(4, 9)]
    + [(4, m) for m in range(5, 9)]
)


@dataclass
class Check:
    name: str
    run: Callable[[], Union[bool, Tuple[bool, str]]]


@dataclass
class Outcome:
    name: str
    passed: bool
    detail: str = ""


def _hyperharmonic_identity(n_max: int, r_max: int) -> bool:
    return all(
        cb.hyperharmonic(n, r) == cb.hyperharmonic_closed(n, r)
        for n in range(1, n_max + 1)
        for r in range(1, r_max + 1)
    )


def _stirling_harmonic(n_max: int) -> bool:
    return all(
        cb.stirling_cycle(n + 1, 2) == math.factorial(n) * cb.harmonic(n) for n in range(1, n_max + 1)
    )


def _r_stirling(n_max: int, r_max: int) -> bool:
    return all(
        cb.r_stirling_cycle(n + r, r + 1, r) == math.factorial(n) * cb.hyperharmonic(n, r)
        for n in range(1, n_max + 1)
        for r in range(1, r_max + 1)
    )


def _gf_coeffs(order: int, r_max: int) -> bool:
    for r in range(1, r_max + 1):
        series = oracle.gf_hyperharmonic_coeffs(r, order)
        if any(series[n] != cb.hyperharmonic(n, r) for n in range(1, order + 1)):
            return False
    return True


def _gf_stirling(order: int, m_max: int) -> bool:
    for m in range(1, m_max + 1):
        series = oracle.gf_stirling_coeffs(m, order)
        if any(series[n] * math.factorial(n) != cb.stirling_cycle(n, m) for n in range(1, order + 1)):
            return False
    return True


def _zeta_routes(m_max: int) -> bool:
    return all(abs(zeta_eta(m) - zeta_euler_maclaurin(m)) < 1e-13 for m in range(2, m_max + 1))


def _zeta_even(m_max: int) -> bool:
    for m in range(2, m_max + 1, 2):
        c, p = zeta_even_exact(m)
        if abs(float(c) * math.pi**p - zeta(m)) >= 1e-13:
            return False
    return True


def _bkm(k_max: int, m_max: int) -> bool:
    for k in range(1, k_max + 1):
        for m in range(k + 2, m_max + 1):
            value, _ = summation.b_km_hypergeometric(k, m, tol=1e-10)
            if abs(value - summation.b_km(k, m).evaluate()) >= 1e-8:
                return False
    return True


def _oracle_concordance(keys, n_terms: int, tol: float) -> bool:
    return all(oracle.report(r, m, n_terms).discrepancy < tol for r, m in keys)


def _exact_vs_float(n_terms: int) -> bool:
    for r, m in [(1, 2), (2, 3), (3, 4), (4, 5)]:
        exact = float(oracle.exact_partial_sum(r, m, n_terms))
        if abs(oracle.direct_sum(r, m, n_terms) - exact) > 1e-12 * abs(exact):
            return False
    return True


def _euler_correction(n_terms: int) -> bool:
    value = summation.euler_s1(3).evaluate()
    return abs(value - oracle.accelerated_sum(1, 3, n_terms)) < 1e-6 and abs(value - math.pi**4 / 72) < 1e-12


def _divergence_guard(r_max: int, m_max: int) -> bool:
    for r in range(1, r_max + 1):
        for m in range(1, m_max + 1):
            try:
                summation.s_rm(r, m)
                accepted = True
            except DivergenceError:
                accepted = False
            if accepted != (m >= r + 1):
                return False
    return True


def _antiderivatives() -> bool:
    return all(
        oracle.lemma2_check(r, z) < 1e-5 for r in (1, 2, 3, 4) for z in (0.1, 0.25, 0.5, 0.75, 0.9)
    )


def _growth_ratio() -> bool:
    r2, r3 = oracle.lemma1_ratio(2, 10**6), oracle.lemma1_ratio(3, 10**6)
    return (
        0.9 <= r2 <= 1.1
        and 0.85 <= r3 <= 1.1
        and abs(r2 - 1) < abs(oracle.lemma1_ratio(2, 10**3) - 1)
        and abs(r3 - 1) < abs(oracle.lemma1_ratio(3, 10**3) - 1)
    )


def _benchmark() -> Tuple[bool, str]:
    value = oracle.direct_sum(4, 5, 10**5)
    return abs(value - 1.310972037) < 1e-9, f"got {value:.12f}, expected 1.310972037 +- 1e-9"


def checks(level: str) -> List[Check]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    quick = level == "quick"
    out = [
        Check("hyperharmonic recurrence = binomial closed form",
              lambda: _hyperharmonic_identity(20 if quick else 50, 6)),
        Check("stirling c(n+1,2) = n! H_n", lambda: _stirling_harmonic(30)),
        Check("r-stirling identity", lambda: _r_stirling(10 if quick else 20, 4)),
        Check("generating function -ln(1-z)/(1-z)^r", lambda: _gf_coeffs(15 if quick else 30, 5)),
        Check("generating function (-ln(1-z))^m/m!", lambda: _gf_stirling(12 if quick else 25, 4)),
        Check("zeta eta vs euler-maclaurin", lambda: _zeta_routes(16)),
        Check("zeta even exact forms", lambda: _zeta_even(20)),
        Check("B(k,m) closed vs hypergeometric", lambda: _bkm(3 if quick else 5, 8 if quick else 12)),
        Check("exact vs float partial sums", lambda: _exact_vs_float(30 if quick else 100)),
        Check("euler S(1,3) correction", lambda: _euler_correction(10**4 if quick else 10**6)),
        Check("divergence guard", lambda: _divergence_guard(6, 14)),
        Check("H_n inequality", lambda: all(oracle.hn_bounds_check(n) for n in range(1, 1001))),
        Check("dilogarithm antiderivatives", _antiderivatives),
    ]
    if quick:
        out.append(Check("oracle concordance (10^4 terms, 1e-5)",
                         lambda: _oracle_concordance([(2, 3), (3, 4), (4, 5)], 10**4, 1e-5)))
        out.append(Check("crude sandwich bounds", lambda: all(
            oracle.crude_bounds_check(r, s, 10**3) for r in (2, 3, 4) for s in (2, 3))))
    else:
        out.append(Check("oracle concordance (10^6 terms, 1e-6)",
                         lambda: _oracle_concordance(TABLE_KEYS, 10**6, 1e-6)))
        out.append(Check("crude sandwich bounds", lambda: all(
            oracle.crude_bounds_check(r, s, 10**5) for r in (2, 3, 4) for s in (2, 3))))
        out.append(Check("H_n inequality at 10^4, 10^5, 10^6",
                         lambda: all(oracle.hn_bounds_check(n) for n in (10**4, 10**5, 10**6))))
        out.append(Check("hyperharmonic growth ratio", _growth_ratio))
        out.append(Check("direct_sum((4,5), 10^5) = 1.310972037", _benchmark))
    return out


def run(level: str) -> List[Outcome]:
    outcomes = []
    for check in checks(level):
        try:
            result = check.run()
            if isinstance(result, tuple):
                ok, detail = result
            else:
                ok, detail = result, ""
            outcomes.append(Outcome(check.name, bool(ok), "" if ok else detail))
        except Exception as exc:  # a crashing check is a failed check
            outcomes.append(Outcome(check.name, False, f"{type(exc).__name__}: {exc}"))
    return outcomes


__all__ = ["Check", "Outcome", "TABLE_KEYS", "checks", "run"]
