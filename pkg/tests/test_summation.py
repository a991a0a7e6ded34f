import math
from fractions import Fraction

import pytest

from hyperharmonic.errors import DivergenceError
from hyperharmonic.summation import (
    SumKey,
    b_km,
    b_km_hypergeometric,
    convergent,
    euler_s1,
    s_rm,
)
from hyperharmonic.zeta import zeta
from hyperharmonic.zeta_algebra import ZetaExpr

Z = ZetaExpr.z


def test_convergent_examples():
    assert convergent(2, 3)
    assert not convergent(2, 2)
    assert convergent(4, 5)
    assert convergent(1, 2) and not convergent(1, 1)
    assert convergent(*SumKey(3, 4))


def test_euler_s1_examples():
    assert euler_s1(2) == Z(3, coeff=2)
    assert euler_s1(3) == Z(4, coeff=Fraction(5, 2)) - Z(2, 2, coeff=Fraction(1, 2))
    assert abs(euler_s1(3).evaluate() - math.pi**4 / 72) < 1e-14
    assert euler_s1(4) == Z(5, coeff=3) - Z(2, 3)
    # sum H_n / n^4 = 1.13347891512... (30-digit mpmath reference)
    assert abs(euler_s1(4).evaluate() - 1.13347891513281) < 1e-13


def test_uncorrected_euler_formula_is_refuted():
    # printed form without the 1/2 on the product sum gives 0 at m = 3
    printed = Z(4, coeff=Fraction(5, 2)) - Z(2, 2)
    assert abs(printed.evaluate()) < 1e-14
    assert abs(euler_s1(3).evaluate() - 1.3529040421389) < 1e-12


def test_euler_s1_domain():
    with pytest.raises(DivergenceError):
        euler_s1(1)


@pytest.mark.parametrize("m", range(3, 12))
def test_b_km_listed_forms(m):
    assert b_km(1, m) == Z(m - 1)
    if m >= 4:
        assert b_km(2, m) == (Z(m - 1) + Z(m - 2)).scale(Fraction(1, 2))
    if m >= 5:
        assert b_km(3, m) == Z(m - 3, coeff=Fraction(1, 6)) + Z(m - 2, coeff=Fraction(1, 2)) + Z(
            m - 1, coeff=Fraction(1, 3)
        )


def test_b_km_is_degree_one():
    for k in range(1, 7):
        for m in range(k + 2, 15):
            assert b_km(k, m).degree == 1


def test_b_km_domain():
    with pytest.raises(DivergenceError):
        b_km(3, 4)
    with pytest.raises(DivergenceError):
        b_km_hypergeometric(3, 4)


@pytest.mark.parametrize(
    "k, m, expected",
    [(1, 3, 1.6449340668482264), (2, 4, 1.4234954850039104), (1, 4, 1.2020569031595942)],
)
def test_b_km_hypergeometric_examples(k, m, expected):
    value, err = b_km_hypergeometric(k, m, tol=1e-10)
    assert abs(value - expected) < 1e-9
    assert err <= 1e-10


def test_b_km_routes_agree():
    for k in range(1, 6):
        for m in range(k + 2, 13):
            value, _ = b_km_hypergeometric(k, m, tol=1e-10)
            assert abs(value - b_km(k, m).evaluate()) < 1e-8, (k, m)


def test_b_km_hypergeometric_raises_when_cap_too_small():
    from hyperharmonic.errors import AccuracyError

    with pytest.raises(AccuracyError):
        b_km_hypergeometric(5, 7, tol=1e-15, start=4, max_doublings=3)


@pytest.mark.parametrize(
    "key, expected",
    [((2, 3), 2.112083781), ((3, 4), 1.628620203), ((4, 5), 1.310990854)],
)
def test_s_rm_examples(key, expected):
    assert abs(s_rm(*key).evaluate() - expected) < 1e-8


def test_s_rm_r1_is_euler():
    for m in range(2, 10):
        assert s_rm(1, m) == euler_s1(m)


def test_s_rm_reduction_identity():
    for r in range(2, 6):
        for m in range(r + 1, 12):
            rhs = euler_s1(m)
            for k in range(1, r):
                rhs += (s_rm(k, m - 1) - b_km(k, m)).scale(Fraction(1, k))
            assert s_rm(r, m) == rhs


def test_s_rm_degree_bound():
    for r in range(1, 7):
        for m in range(r + 1, 15):
            assert s_rm(r, m).degree <= 2
    for m in range(2, 15):
        assert euler_s1(m).degree <= 2


def test_s_rm_memo_matches_plain():
    for r in range(1, 6):
        for m in range(r + 1, 11):
            assert s_rm(r, m) == s_rm(r, m, memoize=False)


def test_s_rm_divergence_names_key():
    with pytest.raises(DivergenceError) as info:
        s_rm(3, 3)
    assert (info.value.r, info.value.m) == (3, 3)
    assert "S(3,3)" in str(info.value)


def test_literal_prelim_indexing_would_diverge():
    # using S(r, m-1) in the recursion asks for S(2, 2) when r=2, m=3
    assert not convergent(2, 2)
    assert convergent(1, 2)


def test_s_2_3_symbolic():
    # pi^4/72 - pi^2/6 + 2 zeta(3)
    expected = Z(4, coeff=Fraction(5, 2)) - Z(2, 2, coeff=Fraction(1, 2)) + Z(3, coeff=2) - Z(2)
    assert s_rm(2, 3) == expected
    assert s_rm(2, 3).render("pi-power") == "π^4/72 + 2ζ(3) - π^2/6"
    assert abs(s_rm(2, 3).evaluate() - (math.pi**4 / 72 - math.pi**2 / 6 + 2 * zeta(3))) < 1e-14
