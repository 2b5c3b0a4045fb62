import pytest

from fibtype.condense import (
    NotTridiagonal,
    PolyMatrix,
    ZeroInteriorMinor,
    determinant_check,
    dodgson_det,
    fact3_check,
    fact4_check,
    gee_matrix,
    tridiag_det,
)
from fibtype.families import fib, gee
from fibtype.polyarith import ONE, Polynomial, X, ZERO


def test_gee_matrix_1x1():
    m = gee_matrix(1, 1)
    assert m.n == 1 and m[0, 0] == Polynomial((-1, 1))


def test_gee_matrix_2x2_det():
    m = gee_matrix(1, 2)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    assert det == gee(1, 2)


def test_gee_matrix_sign_pattern():
    m = gee_matrix(2, 4)
    assert m[1, 0] == Polynomial((-1,))
    assert m[2, 1] == ONE and m[3, 2] == ONE
    assert m[0, 1] == m[1, 2] == m[2, 3] == Polynomial((-1,))


def test_tridiag_identity():
    m = PolyMatrix(((ONE, ZERO), (ZERO, ONE)))
    assert tridiag_det(m) == ONE


def test_tridiag_rejects_full_matrix():
    m = PolyMatrix(((ONE, ONE, ONE),) * 3)
    with pytest.raises(NotTridiagonal):
        tridiag_det(m)


@pytest.mark.parametrize("k,n", [(1, 4), (3, 5), (2, 3)])
def test_tridiag_matches_recurrence(k, n):
    assert tridiag_det(gee_matrix(k, n)) == gee(k, n)


def test_dodgson_2x2_base():
    a, b, c, d = X, ONE, Polynomial((2,)), X * X
    m = PolyMatrix(((a, b), (c, d)))
    assert dodgson_det(m) == a * d - b * c


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 4)])
def test_dodgson_small_no_zero_minors(k, n):
    # Up to n=4 every interior minor is on the band and nonzero.
    assert dodgson_det(gee_matrix(k, n)) == gee(k, n)


def test_dodgson_strict_raises_on_zero_interior():
    # Off-band contiguous minors of a tridiagonal matrix vanish from
    # n=5 on, so strict condensation must signal rather than guess.
    with pytest.raises(ZeroInteriorMinor):
        dodgson_det(gee_matrix(1, 5))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dodgson_resolved_matches_recurrence(k):
    for n in range(5, 13):
        m = gee_matrix(k, n)
        assert dodgson_det(m, resolve_zero_minors=True) == gee(k, n), n


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_determinant_check_sweep(k):
    for n in range(1, 13):
        rep = determinant_check(k, n)
        assert rep.passed, (k, n, rep.detail)


def test_fact3_hand_cases():
    # n=2: (x^2-x-1)*1 = (x-1)*x + (-1)
    assert gee(1, 2) * fib(0) == gee(1, 1) * fib(1) - 1
    # n=3: (x^3-x^2-1)*x = (x^2-x-1)(x^2+1) + 1
    assert gee(1, 3) * fib(1) == gee(1, 2) * fib(2) + 1
    assert fact3_check(1, 2).passed and fact3_check(1, 3).passed


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fact3_sweep(k):
    for n in range(2, 31):
        assert fact3_check(k, n).passed, n


def test_fact4_hand_case():
    # Even identity at k=1, n=2: F_1*G_4 = F_3*G_2 + x.
    lhs = fib(1) * gee(1, 4)
    rhs = fib(3) * gee(1, 2) + X
    assert lhs == rhs == Polynomial((0, -1, -2, 1, -1, 1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fact4_sweep(k):
    for n in range(2, 31):
        assert fact4_check(k, n).passed, n
