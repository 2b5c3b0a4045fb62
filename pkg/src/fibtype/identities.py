"""Identity suite for the bivariate families, the h/Lucas link, and the
Jacobsthal-Lucas evaluation.

Identities free of radicals are verified exactly in the integer
coefficient rings; the one involving 1/sqrt(2) is verified in floating
arithmetic with an explicit precision parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import mpmath

from fibtype.families import bfp2, fib, hseq, jacobsthal_lucas, lucas
from fibtype.polyarith import BiPolynomial, Polynomial, workprec


@dataclass
class CheckReport:
    name: str
    n: int
    passed: bool
    detail: str = ""


def _fib_homogenized(m: int, weight: int) -> BiPolynomial:
    """y**weight * F_m(x/y) as a bivariate polynomial.

    Requires weight >= m so no negative y-exponent survives.
    """
    if weight < m:
        raise ValueError("weight too small to clear denominators")
    f = fib(m)
    return BiPolynomial({(i, weight - i): c for i, c in enumerate(f.coeffs) if c})


def affine_check(n: int) -> CheckReport:
    """f_n(x, y^2) = x*y^(n-1)*F_{n-1}(x/y) + y^(n+2)*F_{n-2}(x/y), exactly."""
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = bfp2(n).square_y()
    x = BiPolynomial({(1, 0): 1})
    rhs = x * _fib_homogenized(n - 1, n - 1) + _fib_homogenized(n - 2, n + 2)
    ok = lhs == rhs
    return CheckReport("affine", n, ok, "" if ok else f"{lhs!r} != {rhs!r}")


def fib_coeff_split_check(n: int) -> CheckReport:
    """Double-binomial expansion of f_n(x, y^2), both exponent readings.

    The displayed y-exponents (y^k and y^(k+2)) do not visibly square y;
    this check records which reading -- literal, or y^(2k)/y^(2k+4) --
    matches the recurrence, and passes iff at least one does.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    oracle = bfp2(n).square_y()

    def build(y_first, y_second):
        terms = {}
        for k in range(n // 2 + 1):
            if n - 2 * k >= 0 and n - k - 1 >= 0:
                c = comb(n - k - 1, k)
                if c:
                    key = (n - 2 * k, y_first(k))
                    terms[key] = terms.get(key, 0) + c
            if n - 2 * k - 2 >= 0 and n - k - 2 >= 0:
                c = comb(n - k - 2, k)
                if c:
                    key = (n - 2 * k - 2, y_second(k))
                    terms[key] = terms.get(key, 0) + c
        return BiPolynomial(terms)

    literal = build(lambda k: k, lambda k: k + 2)
    squared = build(lambda k: 2 * k, lambda k: 2 * k + 4)
    lit_ok = literal == oracle
    sq_ok = squared == oracle
    detail = f"literal reading {'matches' if lit_ok else 'mismatches'}; " \
             f"squared reading {'matches' if sq_ok else 'mismatches'}"
    if not (lit_ok or sq_ok):
        diff = sorted((squared - oracle).terms.items())
        detail += f"; first squared-reading mismatch term {diff[0]}" if diff else ""
    return CheckReport("fib_coeff_split", n, lit_ok or sq_ok, detail)


def jacobsthal_identity_check(n: int, bits: int = 128) -> CheckReport:
    """J_n = 2^((n-1)/2) F_{n-1}(1/sqrt 2) + 2^(n/2+1) F_{n-2}(1/sqrt 2)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    expect = jacobsthal_lucas(n)
    with workprec(bits):
        inv_sqrt2 = 1 / mpmath.sqrt(2)
        rhs = (
            mpmath.mpf(2) ** (mpmath.mpf(n - 1) / 2) * fib(n - 1)(inv_sqrt2)
            + mpmath.mpf(2) ** (mpmath.mpf(n) / 2 + 1) * fib(n - 2)(inv_sqrt2)
        )
        rel = abs(rhs - expect) / (1 + abs(expect))
        ok = rel < mpmath.mpf(2) ** (8 - bits)
    return CheckReport(
        "jacobsthal", n, bool(ok),
        f"J_{n}={expect}, rhs residual {mpmath.nstr(rel, 5)}",
    )


def lucas_relation_check(n: int) -> CheckReport:
    """L_n(x) = x^n h_n(1/x^2), exactly after clearing denominators."""
    if n < 0:
        raise ValueError("n must be >= 0")
    h = hseq(n)
    # x^n * h_n(1/x^2): coefficient of x^(-2i) shifts to x^(n-2i).
    if 2 * h.degree > n:
        return CheckReport("lucas_relation", n, False,
                           "negative exponent survives clearing")
    cs = [0] * (n + 1)
    for i, c in enumerate(h.coeffs):
        cs[n - 2 * i] = c
    lhs = Polynomial(cs)
    ok = lhs == lucas(n)
    return CheckReport("lucas_relation", n, ok,
                       "" if ok else f"{lhs!r} != {lucas(n)!r}")


def jacobsthal_argument_order_note(n: int = 3) -> CheckReport:
    """Regression lock: evaluating the second-kind family at (2, 1)
    does not give the Jacobsthal-Lucas numbers, while (1, 2) does."""
    at_12 = bfp2(n).eval(1, 2)
    at_21 = bfp2(n).eval(2, 1)
    expect = jacobsthal_lucas(n)
    ok = at_12 == expect and at_21 != expect
    return CheckReport(
        "jacobsthal_argument_order", n, ok,
        f"f_{n}(1,2)={at_12} matches J_{n}={expect}; f_{n}(2,1)={at_21} does not",
    )
