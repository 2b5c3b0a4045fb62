"""Truncated power-series expansion of rational generating functions in t.

Coefficients live in a polynomial ring (univariate in x, or bivariate in
x and y); the denominator must have constant term 1 so the expansion is
driven by the linear recurrence it induces, never by long division.
"""

from __future__ import annotations

from dataclasses import dataclass

from fibtype.families import FamilyId, bfp1, bfp2, fib, gee
from fibtype.polyarith import (
    BI_X,
    BI_Y,
    BiPolynomial,
    Polynomial,
    X,
)


class UnknownFamily(ValueError):
    """Family has no generating function registered here."""


@dataclass(frozen=True)
class RationalGF:
    """num(t) / den(t) with ring-valued coefficients, den constant term 1."""

    num: tuple
    den: tuple

    def __post_init__(self):
        if not self.den or not getattr(self.den[0], "is_one", False):
            raise ValueError("denominator constant term must be the ring unit")


@dataclass(frozen=True)
class SeriesTruncation:
    """Coefficients of t^0 .. t^order."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("length must equal order + 1")


def series_expand(gf: RationalGF, order: int) -> SeriesTruncation:
    """Formal power-series prefix of the rational function.

    With den = 1 + d_1 t + ... the coefficients satisfy
    c_n = num_n - sum_{i>=1} d_i * c_{n-i}.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    out = []
    for n in range(order + 1):
        c = gf.num[n] if n < len(gf.num) else None
        for i in range(1, min(n, len(gf.den) - 1) + 1):
            t = gf.den[i] * out[n - i]
            c = -t if c is None else c - t
        if c is None:
            c = 0 * gf.den[0]
        out.append(c)
    return SeriesTruncation(order, tuple(out))


def family_gf(fam: FamilyId) -> RationalGF:
    """The registered generating function for F, G, BFP1 or BFP2."""
    one = Polynomial((1,))
    if fam.tag == "F":
        # 1 / (1 - x t - t^2)
        return RationalGF((one,), (one, -X, -one))
    if fam.tag == "G":
        xk = X.substitute_power(fam.k)
        # ((x^k + x - 1) t - 1) / (1 - x^k t - t^2)
        return RationalGF((-one, xk + X - one), (one, -xk, -one))
    bione = BiPolynomial({(0, 0): 1})
    if fam.tag == "BFP1":
        # (x + (y - x^2) t) / (1 - x t - y t^2)
        return RationalGF((BI_X, BI_Y - BI_X * BI_X), (bione, -BI_X, -BI_Y))
    if fam.tag == "BFP2":
        # (y + (x - x y) t) / (1 - x t - y t^2)
        return RationalGF((BI_Y, BI_X - BI_X * BI_Y), (bione, -BI_X, -BI_Y))
    raise UnknownFamily(f"no generating function for family {fam.tag}")


def _recurrence_member(fam: FamilyId, n: int):
    if fam.tag == "F":
        return fib(n)
    if fam.tag == "G":
        return gee(fam.k, n)
    if fam.tag == "BFP1":
        return bfp1(n)
    if fam.tag == "BFP2":
        return bfp2(n)
    raise UnknownFamily(f"no recurrence registered for family {fam.tag}")


@dataclass
class GFCheckReport:
    family: FamilyId
    order: int
    passed: bool
    first_mismatch: int | None = None
    detail: str = ""


def gf_check(fam: FamilyId, order: int) -> GFCheckReport:
    """Compare the series prefix against the recurrence-built family."""
    series = series_expand(family_gf(fam), order)
    for n in range(order + 1):
        expect = _recurrence_member(fam, n)
        if series.coeffs[n] != expect:
            return GFCheckReport(
                fam, order, False, n,
                f"t^{n}: series {series.coeffs[n]!r} != recurrence {expect!r}",
            )
    return GFCheckReport(fam, order, True)
