from fractions import Fraction

import pytest

from fibtype.families import aitch, bfp1, fib, gee
from fibtype.polyarith import Polynomial
from fibtype.roots import (
    NoRealRoot,
    all_real_roots_check,
    cauchy_bound,
    count_real_roots,
    isolate_max_real_root,
    maximal_root,
    refine,
    square_free_part,
    sturm_chain,
    verify_fact1,
    xi,
)

# 40 decimal digits each; frozen cross-check oracles.
PHI = Fraction("1.618033988749894848204586834365638117720")
SQRT2 = Fraction("1.414213562373095048801688724209698078570")


def test_sturm_chain_quadratic():
    chain = sturm_chain(Polynomial((-1, -1, 1)))
    assert len(chain) == 3
    assert count_real_roots(Polynomial((-1, -1, 1))) == 2


def test_sturm_no_real_roots():
    assert count_real_roots(Polynomial((1, 0, 1))) == 0


def test_sturm_linear():
    assert count_real_roots(Polynomial((-3, 2))) == 1


def test_count_halflines():
    assert count_real_roots(aitch(2), Fraction(0), None) == 1
    assert count_real_roots(aitch(2), None, Fraction(0)) == 1
    assert count_real_roots(aitch(3), None, Fraction(0)) == 0


def test_count_deflates_root_endpoints():
    p = Polynomial((0, -1, 0, 1))  # x(x-1)(x+1)
    assert count_real_roots(p, Fraction(0), None) == 1
    assert count_real_roots(p, Fraction(-1), Fraction(1)) == 1


def test_isolate_golden_ratio():
    cert = refine(isolate_max_real_root(gee(1, 2)), Fraction(1, 2**40))
    assert cert.enclosure.width <= Fraction(1, 2**40)
    assert PHI in cert.enclosure


def test_isolate_linear_is_exact():
    cert = isolate_max_real_root(gee(1, 1))
    assert cert.is_exact and cert.enclosure.lo == 1


def test_isolate_cubic():
    # Sign change of x^3 - x^2 - 1 between 1.46 and 1.47.
    cert = refine(isolate_max_real_root(gee(1, 3)), Fraction(1, 10**8))
    assert Fraction("1.46") < cert.enclosure.lo
    assert cert.enclosure.hi < Fraction("1.47")
    root = Fraction("1.465571231876768026656731225219939108026")
    assert root in cert.enclosure


def test_no_real_root_raises():
    with pytest.raises(NoRealRoot):
        isolate_max_real_root(fib(2))


def test_refine_idempotent_and_nested():
    cert = isolate_max_real_root(gee(1, 2))
    c1 = refine(cert, Fraction(1, 2**40))
    assert refine(c1, c1.enclosure.width) == c1
    c2 = refine(c1, Fraction(1, 2**60))
    assert c1.enclosure.lo <= c2.enclosure.lo <= c2.enclosure.hi <= c1.enclosure.hi


def test_refine_sqrt2_digits():
    cert = refine(isolate_max_real_root(aitch(2)), Fraction(1, 2**60))
    assert SQRT2 in cert.enclosure


def test_certificate_soundness_recheck():
    for k, n in [(1, 2), (2, 5), (3, 8)]:
        cert = maximal_root(k, n)
        assert count_real_roots(cert.poly, cert.enclosure.lo, cert.enclosure.hi) == 1


def test_xi_exact_at_k1():
    cert = xi(1)
    assert cert.is_exact and cert.enclosure.lo == Fraction(3, 2)


def test_xi_sqrt2_at_k2():
    cert = xi(2, Fraction(1, 2**80))
    assert SQRT2 in cert.enclosure


def test_xi_k3_bracket():
    cert = xi(3)
    assert Fraction("1.3") < cert.enclosure.lo and cert.enclosure.hi < Fraction("1.4")


def test_xi_above_one():
    for k in range(1, 9):
        assert xi(k).enclosure.lo > 1


@pytest.mark.parametrize("k", range(1, 9))
def test_fact6_fact7_root_counts(k):
    cnt_pos = count_real_roots(aitch(k), Fraction(0), None)
    cnt_neg = count_real_roots(aitch(k), None, Fraction(0))
    assert cnt_pos == 1
    assert cnt_neg == (1 if k % 2 == 0 else 0)
    assert count_real_roots(aitch(k), Fraction(0), Fraction(1)) == 0


@pytest.mark.parametrize("n", [1, 2, 5, 10, 20])
def test_fact1(n):
    rep = verify_fact1(n)
    assert rep.passed, rep


@pytest.mark.parametrize("k", range(1, 6))
def test_maximal_roots_in_gershgorin_band(k):
    for n in range(1, 31):
        e = maximal_root(k, n).enclosure
        assert 1 <= e.lo and e.hi <= 2


@pytest.mark.parametrize("n", range(2, 21))
def test_bfp1_at_x1_all_real(n):
    assert all_real_roots_check(bfp1(n).specialize_x(1))


def test_all_real_roots_counterexample():
    assert not all_real_roots_check(fib(2))


def test_all_real_roots_collapses_multiplicity():
    p = Polynomial((0, 0, 1))  # x^2: double root at 0
    assert all_real_roots_check(p)
    assert square_free_part(p) == Polynomial((0, 1))


def test_cauchy_bound_contains_roots():
    p = gee(2, 7)
    m = cauchy_bound(p)
    assert count_real_roots(p, -m, m) == count_real_roots(p)
