import random
from fractions import Fraction

import mpmath
import pytest

from fibtype.binet import (
    binet_eval,
    binet_parts,
    binet_relative_error,
    eq1_rhs_log10,
    eq1_sides,
)
from fibtype.families import gee
from fibtype.polyarith import workprec
from fibtype.roots import maximal_root


def test_parts_at_zero():
    parts = binet_parts(0, 1)
    with workprec(128):
        assert abs(parts.alpha - 1) < mpmath.mpf(2) ** -120
        assert abs(parts.beta + 1) < mpmath.mpf(2) ** -120


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(1), Fraction(17, 8), Fraction(-2)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_parts_invariants(x, k):
    parts = binet_parts(x, k, 128)
    with workprec(128):
        eps = mpmath.mpf(2) ** -110
        assert abs(parts.alpha * parts.beta + 1) < eps
        assert abs(parts.p - parts.q + 1) < eps


def test_alpha_is_golden_ratio_at_one():
    parts = binet_parts(1, 1, 128)
    with workprec(128):
        phi = (1 + mpmath.sqrt(5)) / 2
        assert abs(parts.alpha - phi) < mpmath.mpf(2) ** -120


def test_binet_n0_is_minus_one():
    for k in (1, 2, 4):
        for x in (Fraction(1, 2), Fraction(3, 2), Fraction(2)):
            v = binet_eval(k, 0, x)
            with workprec(128):
                assert abs(v + 1) < mpmath.mpf(2) ** -110


def test_binet_matches_exact_small_case():
    # G_2 at x=2 for k=1 equals 1.
    v = binet_eval(1, 2, 2)
    with workprec(128):
        assert abs(v - 1) < mpmath.mpf(2) ** -100
    assert gee(1, 2)(Fraction(2)) == 1


def test_binet_matches_exact_k2():
    err = binet_relative_error(2, 7, Fraction(3, 2))
    assert err < 2.0**-96


def test_binet_random_grid():
    rng = random.Random(7)
    for _ in range(50):
        k = rng.randint(1, 5)
        n = rng.randint(0, 25)
        x = Fraction(rng.randint(2**20, 2**21), 2**20)
        assert binet_relative_error(k, n, x) < 2.0**-96, (k, n, x)


def test_eq1_at_golden_ratio():
    g = maximal_root(1, 2, Fraction(1, 2**120)).value(160)
    lhs, rhs = eq1_sides(1, 2, g, 128)
    assert abs(lhs - rhs) < 1e-28


def test_eq1_at_certified_k2_root():
    g = maximal_root(2, 12, Fraction(1, 2**200)).value(192)
    lhs, rhs = eq1_sides(2, 12, g, 192)
    assert abs(lhs - rhs) < 2.0**-60


def test_eq1_rhs_sign_alternates():
    g = Fraction(3, 2)
    _, rhs_even = eq1_sides(1, 4, g)
    _, rhs_odd = eq1_sides(1, 5, g)
    assert rhs_even > 0 > rhs_odd


def test_eq1_log_magnitude_consistent():
    g = Fraction(3, 2)
    _, rhs = eq1_sides(2, 10, g)
    log_direct = eq1_rhs_log10(2, 10, g)
    with workprec(128):
        assert abs(mpmath.log10(abs(rhs)) - log_direct) < 1e-20


def test_lhs_numerator_vanishes_at_xi():
    # 2(xi-1) + xi^k - sqrt(xi^2k + 4) = 0 at the certified limit root.
    from fibtype.roots import xi

    for k in (1, 2, 3):
        cert = xi(k, Fraction(1, 2**120))
        with workprec(200):
            x = cert.value(200)
            num = 2 * (x - 1) + x**k - mpmath.sqrt(x ** (2 * k) + 4)
            assert abs(num) < mpmath.mpf(2) ** -100, k
