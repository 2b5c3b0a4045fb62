"""Certified real-root counting, isolation, and refinement over exact
rationals.

Sturm chains are kept as primitive integer polynomials (content divided
out at every step, signs preserved), so all sign queries reduce to
integer arithmetic in the kernel.  Enclosures have rational endpoints
and a zero-width enclosure means the root is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from fibtype import _kernel
from fibtype.families import aitch, fib, gee
from fibtype.polyarith import Polynomial, poly_divide_exact, workprec


class NoRealRoot(ArithmeticError):
    """Root isolation requested for a polynomial without real roots."""


@dataclass(frozen=True)
class Interval:
    """Closed interval with rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi


@dataclass(frozen=True)
class RootCertificate:
    """Isolating interval plus the sign data that proves uniqueness.

    ``sqfree`` is the square-free part actually used for sign tests; for
    a zero-width enclosure the root is the exact rational endpoint and
    both endpoint signs are 0.
    """

    poly: Polynomial
    enclosure: Interval
    sturm_count: int
    sign_lo: int
    sign_hi: int
    sqfree: Polynomial

    @property
    def is_exact(self) -> bool:
        return self.enclosure.width == 0

    def value(self, bits: int = 128):
        """Midpoint as an mpf at the given precision."""
        m = self.enclosure.mid
        with workprec(bits):
            return mpmath.mpf(m.numerator) / m.denominator


# -- Sturm machinery ----------------------------------------------------


def _neg_prem_primitive(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive part of -(a mod b), with the sign of the true remainder.

    Classical pseudo-division: the remainder equals lc(b)**s * (a mod b)
    for some s >= 0; an odd power of a negative leading coefficient is
    compensated so the returned sign is correct.
    """
    r = list(a.coeffs)
    bl = b.coeffs
    db = len(bl) - 1
    lb = bl[-1]
    steps = 0
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, bc in enumerate(bl):
            r[shift + i] -= lr * bc
        steps += 1
        r.pop()
    rem = Polynomial(r)
    if lb < 0 and steps % 2 == 1:
        rem = -rem
    return (-rem).primitive()


def sturm_chain(p: Polynomial):
    """Standard Sturm sequence p, p', then negated remainders.

    Each element is content-normalized to a primitive integer polynomial,
    which leaves every sign sequence unchanged.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [p.primitive()]
    d = p.derivative()
    if not d.is_zero:
        chain.append(d.primitive())
        while True:
            r = _neg_prem_primitive(chain[-2], chain[-1])
            if r.is_zero:
                break
            chain.append(r)
    return chain


def _variations_at(chain, v) -> int:
    """Sign variations of the chain at a Fraction, or at +/- infinity."""
    if v == "+inf":
        signs = [(1 if c.leading > 0 else -1) for c in chain]
    elif v == "-inf":
        signs = [
            (1 if c.leading > 0 else -1) * (-1 if c.degree % 2 else 1)
            for c in chain
        ]
    else:
        if isinstance(v, int):
            v = Fraction(v)
        return _kernel.chain_variations(
            [list(c.coeffs) for c in chain], v.numerator, v.denominator
        )
    var = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            var += 1
    return var


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive GCD of integer polynomials, positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero:
        a, b = b, _neg_prem_primitive(a, b)
    if a.is_zero:
        return a
    return a if a.leading > 0 else -a


def square_free_part(p: Polynomial) -> Polynomial:
    """p divided by gcd(p, p'): same roots, all simple."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree <= 1:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return poly_divide_exact(p.primitive(), g)


def _deflate_rational_root(p: Polynomial, r: Fraction) -> Polynomial:
    """Divide out (den*x - num) while r remains a root of p."""
    factor = Polynomial((-r.numerator, r.denominator))
    while not p.is_zero and p.degree >= 1 and p.sign_at(r) == 0:
        p = poly_divide_exact(p, factor)
    return p


def count_real_roots(p: Polynomial, lo=None, hi=None) -> int:
    """Distinct real roots of p in the open range (lo, hi).

    ``None`` endpoints mean -infinity / +infinity.  Rational endpoints
    that happen to be roots are deflated exactly before counting, so the
    count is always for the open interval.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = square_free_part(p)
    if lo is not None and not isinstance(lo, Fraction):
        lo = Fraction(lo)
    if hi is not None and not isinstance(hi, Fraction):
        hi = Fraction(hi)
    if lo is not None:
        sf = _deflate_rational_root(sf, lo)
    if hi is not None:
        sf = _deflate_rational_root(sf, hi)
    if sf.degree < 1:
        return 0
    chain = sturm_chain(sf)
    va = _variations_at(chain, "-inf" if lo is None else lo)
    vb = _variations_at(chain, "+inf" if hi is None else hi)
    return va - vb


def cauchy_bound(p: Polynomial) -> Fraction:
    """Strict bound 1 + max|a_i| / |a_lead| on the modulus of every root."""
    lead = abs(p.leading)
    biggest = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + Fraction(biggest, lead)


def _exact_certificate(p: Polynomial, sf: Polynomial, r: Fraction) -> RootCertificate:
    return RootCertificate(p, Interval(r, r), 1, 0, 0, sf)


def isolate_max_real_root(p: Polynomial) -> RootCertificate:
    """Certificate for the largest real root of p.

    Starts from the Cauchy bound bracket and bisects toward the
    rightmost isolating interval (Sturm count exactly 1).
    """
    if p.is_zero or p.degree < 1:
        raise NoRealRoot("polynomial has no roots")
    sf = square_free_part(p)
    if sf.degree == 1:
        c0, c1 = sf.coeffs
        return _exact_certificate(p, sf, Fraction(-c0, c1))
    chain = sturm_chain(sf)
    total = _variations_at(chain, "-inf") - _variations_at(chain, "+inf")
    if total == 0:
        raise NoRealRoot("no real roots")
    m = cauchy_bound(sf)
    lo, hi = -m, m

    def count(a, b):
        # Endpoints are never roots here: the Cauchy bound is strict and
        # midpoints found to be roots are handled before recursing.
        return _variations_at(chain, a) - _variations_at(chain, b)

    while True:
        c = count(lo, hi)
        if c == 1:
            break
        mid = (lo + hi) / 2
        if sf.sign_at(mid) == 0:
            # Rare exact hit; counting with deflation settles which side.
            if count_real_roots(sf, mid, hi) == 0:
                return _exact_certificate(p, sf, mid)
            # Roots remain above mid: move lo to a non-root point just
            # above mid without skipping any of those roots.
            new_lo = (mid + hi) / 2
            while sf.sign_at(new_lo) == 0 or count_real_roots(sf, mid, new_lo) > 0:
                new_lo = (mid + new_lo) / 2
            lo = new_lo
            continue
        if count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    s_lo, s_hi = sf.sign_at(lo), sf.sign_at(hi)
    return RootCertificate(p, Interval(lo, hi), 1, s_lo, s_hi, sf)


def refine(cert: RootCertificate, width) -> RootCertificate:
    """Shrink the enclosure to the requested width by sign bisection."""
    if not isinstance(width, Fraction):
        width = Fraction(width)
    if cert.is_exact or cert.enclosure.width <= width:
        return cert
    lo, hi = cert.enclosure.lo, cert.enclosure.hi
    sf = cert.sqfree
    s_lo, s_hi = cert.sign_lo, cert.sign_hi
    assert s_lo and s_hi and s_lo != s_hi, "certificate lost its sign change"
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sf.sign_at(mid)
        if s_mid == 0:
            return _exact_certificate(cert.poly, sf, mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return RootCertificate(cert.poly, Interval(lo, hi), 1, s_lo, s_hi, sf)


DEFAULT_WIDTH = Fraction(1, 2**80)


@lru_cache(maxsize=None)
def _max_root_base(k: int, n: int) -> RootCertificate:
    return isolate_max_real_root(gee(k, n))


def maximal_root(k: int, n: int, width=DEFAULT_WIDTH) -> RootCertificate:
    """Certified maximal real root of gee(k, n), memoized per (k, n)."""
    return refine(_max_root_base(k, n), width)


@lru_cache(maxsize=None)
def _xi_base(k: int) -> RootCertificate:
    return isolate_max_real_root(aitch(k))


def xi(k: int, width=DEFAULT_WIDTH) -> RootCertificate:
    """Certificate for the unique positive root of aitch(k); lies in (1, inf)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cert = refine(_xi_base(k), width)
    # The root is strictly > 1; tighten until the whole enclosure is too.
    w = cert.enclosure.width
    while not cert.is_exact and cert.enclosure.lo <= 1:
        w /= 2
        cert = refine(cert, w)
    return cert


# -- root-location checks -----------------------------------------------


@dataclass
class Fact1Report:
    n: int
    positive_root_count: int
    max_relative_residual: object  # mpf
    passed: bool


def verify_fact1(n: int, tol=Fraction(1, 10**25), bits: int = 128) -> Fact1Report:
    """No positive real roots of fib(n), and 2i*cos(pi*j/(n+1)) are roots.

    The residual at each claimed root is measured relative to
    1 + max|coefficient|.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = fib(n)
    pos = count_real_roots(p, Fraction(0), None)
    scale = 1 + max(abs(c) for c in p.coeffs)
    with workprec(bits):
        worst = mpmath.mpf(0)
        for j in range(1, n + 1):
            root = 2j * mpmath.cos(mpmath.pi * j / (n + 1))
            res = abs(p(root)) / scale
            worst = max(worst, res)
        tol_f = mpmath.mpf(tol.numerator) / tol.denominator
        ok = pos == 0 and worst < tol_f
    return Fact1Report(n, pos, worst, ok)


def all_real_roots_check(p: Polynomial) -> bool:
    """True iff every root of p is real (multiplicities collapsed)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = square_free_part(p)
    if sf.degree < 1:
        return True
    return count_real_roots(sf) == sf.degree
