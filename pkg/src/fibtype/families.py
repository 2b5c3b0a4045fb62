"""Constructors for every polynomial family, by recurrence and by
explicit formula.

Naming: ``fib`` builds F_n (F_0 = 1, F_1 = x), ``gee`` builds the
parametrized family G_n with G_0 = -1, G_1 = x - 1 and recurrence
G_n = x**k * G_{n-1} + G_{n-2}, and ``aitch`` builds the limit
polynomial x**k - x**(k-1) + x - 2 whose unique positive root is the
limit of the maximal roots of the G family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from fibtype.polyarith import (
    BI_X,
    BI_Y,
    BiPolynomial,
    Polynomial,
    X,
)

FAMILY_TAGS = ("F", "G", "H", "BFP1", "BFP2", "HSEQ", "LUCAS")


@dataclass(frozen=True)
class FamilyId:
    """Identifies a polynomial family; k parametrizes G and H only."""

    tag: str
    k: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.tag in ("G", "H"):
            if self.k is None or self.k < 1:
                raise ValueError(f"family {self.tag} requires k >= 1")
        elif self.k is not None:
            raise ValueError(f"family {self.tag} takes no k parameter")


@lru_cache(maxsize=None)
def fib(n: int) -> Polynomial:
    """Fibonacci polynomial F_n: F_0 = 1, F_1 = x, F_n = x*F_{n-1} + F_{n-2}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Polynomial((1,))
    if n == 1:
        return X
    return X * fib(n - 1) + fib(n - 2)


@lru_cache(maxsize=None)
def gee(k: int, n: int) -> Polynomial:
    """Fibonacci-type polynomial G_n for exponent parameter k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Polynomial((-1,))
    if n == 1:
        return Polynomial((-1, 1))
    xk = X.substitute_power(k) if k > 1 else X
    return xk * gee(k, n - 1) + gee(k, n - 2)


def aitch(k: int) -> Polynomial:
    """Limit polynomial x**k - x**(k-1) + x - 2 (collapses to 2x - 3 at k=1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cs = [0] * (k + 1)
    cs[k] += 1
    cs[k - 1] -= 1
    cs[1] += 1
    cs[0] -= 2
    return Polynomial(cs)


def fib_explicit(n: int) -> Polynomial:
    """F_n via the binomial expansion sum_k C(n-k, k) x^(n-2k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cs = [0] * (n + 1)
    k = 0
    while n - 2 * k >= 0:
        cs[n - 2 * k] = comb(n - k, k)
        k += 1
    return Polynomial(cs)


@lru_cache(maxsize=None)
def bfp1(n: int) -> BiPolynomial:
    """Bivariate family of the first kind: g_0 = x, g_1 = y, g_n = x*g_{n-1} + y*g_{n-2}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return BI_X
    if n == 1:
        return BI_Y
    return BI_X * bfp1(n - 1) + BI_Y * bfp1(n - 2)


def bfp1_explicit(n: int) -> BiPolynomial:
    """Closed form for bfp1: sum over k of (2n-3k+1)/(n-k) * C(n-k, k-1) * x^(n-2k+1) y^k.

    The k = n term is 0/0; it occurs only at n = 1, where the recurrence
    forces the value y, so that case is returned directly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return BI_Y
    terms = {}
    k = 1
    while n - 2 * k + 1 >= 0:
        b = comb(n - k, k - 1)
        if b:
            c = Fraction(2 * n - 3 * k + 1, n - k) * b
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient at n={n}, k={k}")
            if c:
                terms[(n - 2 * k + 1, k)] = int(c)
        k += 1
    return BiPolynomial(terms)


@lru_cache(maxsize=None)
def bfp2(n: int) -> BiPolynomial:
    """Bivariate family of the second kind: f_0 = y, f_1 = x, same recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return BI_Y
    if n == 1:
        return BI_X
    return BI_X * bfp2(n - 1) + BI_Y * bfp2(n - 2)


def q_cubic(n: int, k: int) -> int:
    """The cubic n^3 - 3(2k-1)n^2 + (13k(k-1)+2)n - k(k-1)(9k-4)."""
    return (
        n**3
        - 3 * (2 * k - 1) * n**2
        + (13 * k * (k - 1) + 2) * n
        - k * (k - 1) * (9 * k - 4)
    )


def f1y_explicit(n: int) -> Polynomial:
    """bfp2(n) at x = 1, via the closed form with the cubic q_cubic(n, k).

    The coefficient of y**k is (n-k-1)! * q_cubic(n, k) / (k! * (n-2k+2)!);
    the denominator's second factor is read as a factorial.  The top term
    k = n//2 + 1 degenerates at n = 2 ((-1)! against a vanishing cubic);
    there the coefficient falls back to the equivalent binomial pair
    C(n-k-1, k) + C(n-k, k-2), which is well defined.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    cs = []
    for k in range(n // 2 + 2):
        if n - 2 * k + 2 < 0:
            break
        if n - k - 1 >= 0:
            c = Fraction(
                factorial(n - k - 1) * q_cubic(n, k),
                factorial(k) * factorial(n - 2 * k + 2),
            )
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient at n={n}, k={k}")
            cs.append(int(c))
        else:
            cs.append((comb(n - k - 1, k) if n - k - 1 >= 0 else 0)
                      + (comb(n - k, k - 2) if k >= 2 and n - k >= 0 else 0))
    return Polynomial(cs)


@lru_cache(maxsize=None)
def hseq(n: int) -> Polynomial:
    """h_0 = 2, h_1 = 1, h_n = h_{n-1} + x*h_{n-2}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Polynomial((2,))
    if n == 1:
        return Polynomial((1,))
    return hseq(n - 1) + X * hseq(n - 2)


@lru_cache(maxsize=None)
def lucas(n: int) -> Polynomial:
    """Lucas polynomial: L_0 = 2, L_1 = x, L_n = x*L_{n-1} + L_{n-2}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Polynomial((2,))
    if n == 1:
        return X
    return X * lucas(n - 1) + lucas(n - 2)


def jacobsthal_lucas(n: int) -> int:
    """Jacobsthal-Lucas number J_n = bfp2(n) at (x, y) = (1, 2).

    Note the argument order: evaluating at (2, 1) instead does NOT give
    the sequence 2, 1, 5, 7, 17, 31, ... (e.g. it yields 12 at n = 3);
    a regression test pins this down.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return bfp2(n).eval(1, 2)


def family_member(fam: FamilyId, n: int):
    """Uniform accessor used by the CLI; returns Polynomial or BiPolynomial."""
    if fam.tag == "F":
        return fib(n)
    if fam.tag == "G":
        return gee(fam.k, n)
    if fam.tag == "H":
        return aitch(fam.k)
    if fam.tag == "BFP1":
        return bfp1(n)
    if fam.tag == "BFP2":
        return bfp2(n)
    if fam.tag == "HSEQ":
        return hseq(n)
    if fam.tag == "LUCAS":
        return lucas(n)
    raise ValueError(f"unknown family {fam!r}")
