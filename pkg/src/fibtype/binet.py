"""Closed-form evaluation of the G family and the limit-equation residual.

With y = x**k, alpha/beta are the roots of z**2 - y*z - 1 and
G_n(x) = p(x)*alpha**n - q(x)*beta**n.  The limit equation compares

    (2(g-1) + g^k - sqrt(g^{2k}+4)) / (2(g-1) + g^k + sqrt(g^{2k}+4))

against (-1)**n * (1 - 2g^k / (g^k + sqrt(g^{2k}+4)))**n, i.e.
(beta/alpha)**n, which vanishes as n grows whenever g stays in a
compact subset of (0, inf).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from fibtype.families import gee
from fibtype.polyarith import mpf_at, workprec


class DenominatorUnderflow(ArithmeticError):
    """Left-hand-side denominator too small for the working precision."""


@dataclass(frozen=True)
class BinetParts:
    alpha: object
    beta: object
    p: object
    q: object


def _as_mpf(x, bits):
    if isinstance(x, (int, Fraction, float, str)):
        return mpf_at(x, bits)
    return x


def binet_parts(x, k: int, bits: int = 128) -> BinetParts:
    """alpha, beta, p, q at the point x, with alpha/beta taken at x**k.

    Invariants (to working precision): alpha*beta = -1, alpha+beta = x**k,
    and p - q = -1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    with workprec(bits):
        xv = _as_mpf(x, bits)
        y = xv**k
        s = mpmath.sqrt(y * y + 4)
        alpha = (y + s) / 2
        beta = (y - s) / 2
        p = ((xv - 1) + beta) / s
        q = ((xv - 1) + alpha) / s
        return BinetParts(alpha, beta, p, q)


def binet_eval(k: int, n: int, x, bits: int = 128):
    """G_n at x via the closed form, returned at the requested precision.

    Internally runs with guard bits so the n-fold power loses nothing
    visible at the caller's precision.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    guard = bits + 2 * max(n, 1).bit_length() + 16
    parts = binet_parts(x, k, guard)
    with workprec(guard):
        val = parts.p * parts.alpha**n - parts.q * parts.beta**n
    with workprec(bits):
        return +val


def eq1_sides(k: int, n: int, g, bits: int = 128):
    """Both sides of the limit equation at the point g > 0.

    The square root is taken with a doubled mantissa before the
    cancelling subtraction in the numerator.
    """
    if k < 1 or n < 1:
        raise ValueError("k >= 1 and n >= 1 required")
    guard = 2 * bits + 2 * max(n, 1).bit_length() + 16
    with workprec(guard):
        gv = _as_mpf(g, guard)
        if gv <= 0:
            raise ValueError("g must be positive")
        gk = gv**k
        s = mpmath.sqrt(gv ** (2 * k) + 4)
        num = 2 * (gv - 1) + gk - s
        den = 2 * (gv - 1) + gk + s
        if abs(den) < mpmath.mpf(2) ** (-(bits - 8)):
            raise DenominatorUnderflow(f"lhs denominator {den} below precision scale")
        lhs = num / den
        base = 1 - 2 * gk / (gk + s)
        rhs = (-1) ** n * base**n
    with workprec(bits):
        return +lhs, +rhs


# Alias: the "residual" operation reports both sides, not their difference.
eq1_residual = eq1_sides


def eq1_rhs_log10(k: int, n: int, g, bits: int = 128):
    """log10 |rhs| computed as n*log10|base|; robust for any n."""
    with workprec(bits):
        gv = _as_mpf(g, bits)
        gk = gv**k
        s = mpmath.sqrt(gv ** (2 * k) + 4)
        base = abs(1 - 2 * gk / (gk + s))
        if base == 0:
            return mpmath.mpf("-inf")
        return n * mpmath.log10(base)


def binet_relative_error(k: int, n: int, x: Fraction, bits: int = 128):
    """|binet - exact| / (1 + |exact|) with the exact value from the
    recurrence polynomial evaluated at the rational x."""
    exact = gee(k, n)(Fraction(x))
    approx = binet_eval(k, n, x, bits)
    with workprec(bits + 32):
        ex = mpf_at(exact, bits + 32)
        return abs(approx - ex) / (1 + abs(ex))
