"""Rational linear combinations of 1, zeta(a) and zeta(a)zeta(b).

A monomial is a sorted tuple of zeta arguments of length 0, 1 or 2; the
empty tuple is the constant 1. :class:`ZetaExpr` is immutable and stores no
zero coefficients, so structural equality is equality of formal
combinations. No relations between zeta constants are applied.
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import CapacityError, DomainError
from .zeta import zeta, zeta_even_exact

__all__ = [
    "Monomial",
    "ZetaExpr",
    "monomial",
    "zx_add",
    "zx_eval",
    "zx_mul",
    "zx_render",
    "zx_scale",
]

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

MAX_DEGREE = 2
STYLES = ("pi-power", "zeta-only")


def monomial(*args: int) -> Monomial:
    if len(args) > MAX_DEGREE:
        raise CapacityError(f"zeta monomial of degree {len(args)} exceeds {MAX_DEGREE}")
    for a in args:
        if a < 2:
            raise DomainError(f"zeta argument must be >= 2, got {a}")
    return tuple(sorted(args))


class ZetaExpr:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[Tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Monomial, Fraction] = {}
        for mono, c in items:
            key = monomial(*mono)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self._terms = MappingProxyType({k: v for k, v in acc.items() if v != 0})
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> ZetaExpr:
        return cls({(): c})

    @classmethod
    def z(cls, *args: int, coeff: Scalar = 1) -> ZetaExpr:
        """``ZetaExpr.z(3)`` is zeta(3); ``ZetaExpr.z(3, 5)`` is zeta(3)zeta(5)."""
        return cls({monomial(*args): coeff})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    @property
    def degree(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def coeff(self, *args: int) -> Fraction:
        return self._terms.get(tuple(sorted(args)), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ZetaExpr.const(other)
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: ZetaExpr | Scalar) -> ZetaExpr:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ZetaExpr(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> ZetaExpr:
        return ZetaExpr({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: ZetaExpr | Scalar) -> ZetaExpr:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> ZetaExpr:
        return (-self) + other

    def __mul__(self, other: ZetaExpr | Scalar) -> ZetaExpr:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        out = []
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                if len(ka) + len(kb) > MAX_DEGREE:
                    raise CapacityError(
                        f"product {_zeta_only_mono(ka)} * {_zeta_only_mono(kb)} has degree > {MAX_DEGREE}"
                    )
                out.append((ka + kb, ca * cb))
        return ZetaExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> ZetaExpr:
        return self.scale(1 / Fraction(c))

    def scale(self, c: Scalar) -> ZetaExpr:
        c = Fraction(c)
        return ZetaExpr({k: v * c for k, v in self._terms.items()})

    def evaluate(self) -> float:
        parts = []
        for mono, c in self._terms.items():
            value = float(c)
            for a in mono:
                value *= zeta(a)
            parts.append(value)
        return math.fsum(parts)

    __float__ = evaluate

    def render(self, style: str = "zeta-only") -> str:
        if style == "zeta-only":
            return _render_zeta_only(self)
        if style == "pi-power":
            return _render_pi_power(self)
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")

    def __str__(self) -> str:
        return self.render("zeta-only")

    def __repr__(self) -> str:
        return f"ZetaExpr({self.render('zeta-only')!r})"


def _coerce(x):
    if isinstance(x, ZetaExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return ZetaExpr.const(x)
    return NotImplemented


def zx_add(a: ZetaExpr, b: ZetaExpr) -> ZetaExpr:
    return a + b


def zx_scale(a: ZetaExpr, c: Scalar) -> ZetaExpr:
    return a.scale(c)


def zx_mul(a: ZetaExpr, b: ZetaExpr) -> ZetaExpr:
    return a * b


def zx_eval(a: ZetaExpr) -> float:
    return a.evaluate()


def zx_render(a: ZetaExpr, style: str = "pi-power") -> str:
    return a.render(style)


# -- rendering ---------------------------------------------------------------


def _zeta_only_mono(mono: Monomial) -> str:
    if len(mono) == 2 and mono[0] == mono[1]:
        return f"ζ({mono[0]})^2"
    return "".join(f"ζ({a})" for a in mono)


def _signed_join(pieces: list[tuple[Fraction, str]], fmt) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (c, body) in enumerate(pieces):
        text = fmt(abs(c), body)
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


def _coeff_prefix(c: Fraction, body: str) -> str:
    if not body:
        return str(c)
    if c == 1:
        return body
    if c.denominator == 1:
        return f"{c.numerator}{body}"
    return f"({c}){body}"


def _render_zeta_only(expr: ZetaExpr) -> str:
    keys = sorted(expr.terms, key=lambda k: (-sum(k), k))
    return _signed_join([(expr.terms[k], _zeta_only_mono(k)) for k in keys], _coeff_prefix)


def _pi_form(expr: ZetaExpr) -> Dict[Tuple[int, Monomial], Fraction]:
    # (pi power, remaining odd zeta args) -> coefficient
    out: Dict[Tuple[int, Monomial], Fraction] = {}
    for mono, c in expr.terms.items():
        power = 0
        odd = []
        for a in mono:
            if a % 2 == 0:
                ce, _ = zeta_even_exact(a)
                c *= ce
                power += a
            else:
                odd.append(a)
        key = (power, tuple(odd))
        out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def _pi_body(power: int, odd: Monomial) -> str:
    pi = "" if power == 0 else ("π" if power == 1 else f"π^{power}")
    return pi + _zeta_only_mono(odd)


def _pi_coeff(c: Fraction, key: Tuple[int, Monomial]) -> str:
    power, odd = key
    body = _pi_body(power, odd)
    if power and not odd and c.denominator != 1:
        num = "" if c.numerator == 1 else str(c.numerator)
        return f"{num}{body}/{c.denominator}"
    return _coeff_prefix(c, body)


def _render_pi_power(expr: ZetaExpr) -> str:
    form = _pi_form(expr)
    keys = sorted(form, key=lambda k: (-(k[0] + sum(k[1])), k[1], -k[0]))
    pieces = [(form[k], k) for k in keys]
    return _signed_join(pieces, _pi_coeff)
