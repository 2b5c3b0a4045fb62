"""The convergence experiment: certified maximal roots of the G family
interleave around, and converge to, the positive root of the limit
polynomial.

All order comparisons are made between separated enclosures; when two
enclosures overlap both are tightened (down to a hard floor) before an
InconclusiveComparison is reported.  No conclusion is ever drawn from
floating-point midpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


from fibtype.binet import eq1_rhs_log10
from fibtype.roots import (
    DEFAULT_WIDTH,
    Interval,
    RootCertificate,
    maximal_root,
    refine,
    xi,
)

WIDTH_FLOOR = Fraction(1, 2**200)


class InconclusiveComparison(ArithmeticError):
    """Enclosures still overlap at the smallest permitted width."""


def _decimal_str(v: Fraction, digits: int = 30) -> str:
    scaled = v * 10**digits
    n = scaled.numerator // scaled.denominator  # floor
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    n: int
    g_enclosure: Interval
    gap: str  # signed decimal, midpoint(g) - midpoint(xi)
    parity: str
    width: Fraction


@dataclass
class ConvergenceReport:
    k: int
    rows: list
    xi_enclosure: Interval
    monotone_even_ok: bool = field(default=False)
    monotone_odd_ok: bool = field(default=False)
    bounds_ok: bool = field(default=False)
    interleave_ok: bool = field(default=False)

    @property
    def all_ok(self) -> bool:
        return (
            self.monotone_even_ok
            and self.monotone_odd_ok
            and self.bounds_ok
            and self.interleave_ok
        )


def _separated(a: RootCertificate, b: RootCertificate, width: Fraction):
    """-1 if a < b, +1 if a > b, certified by disjoint enclosures.

    Tightens both enclosures as needed, down to WIDTH_FLOOR.
    """
    w = width
    while True:
        if a.enclosure.hi < b.enclosure.lo:
            return -1, a, b
        if b.enclosure.hi < a.enclosure.lo:
            return 1, a, b
        if a.is_exact and b.is_exact:
            raise InconclusiveComparison("equal exact roots")
        if w <= WIDTH_FLOOR:
            raise InconclusiveComparison(
                f"enclosures overlap at width floor {WIDTH_FLOOR}"
            )
        w = max(w / 2, WIDTH_FLOOR)
        a, b = refine(a, w), refine(b, w)


def converge_table(k: int, n_max: int, width=DEFAULT_WIDTH) -> ConvergenceReport:
    """Rows for n = 1..n_max with all convergence checks recomputed."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if not isinstance(width, Fraction):
        width = Fraction(width)
    xi_cert = xi(k, width)
    certs = {n: maximal_root(k, n, width) for n in range(1, n_max + 1)}

    monotone_even = True
    monotone_odd = True
    for n in range(4, n_max + 1, 2):
        s, certs[n], certs[n - 2] = _separated(certs[n], certs[n - 2], width)
        monotone_even &= s < 0  # even subsequence strictly decreasing
    for n in range(3, n_max + 1, 2):
        s, certs[n], certs[n - 2] = _separated(certs[n], certs[n - 2], width)
        monotone_odd &= s > 0  # odd subsequence strictly increasing

    bounds = all(
        1 <= certs[n].enclosure.lo and certs[n].enclosure.hi <= 2
        for n in range(1, n_max + 1)
    )

    interleave = True
    for n in range(2, n_max + 1):
        s, certs[n], xi_cert = _separated(certs[n], xi_cert, width)
        interleave &= (s > 0) if n % 2 == 0 else (s < 0)

    xi_mid = xi_cert.enclosure.mid
    rows = [
        ConvergenceRow(
            k,
            n,
            certs[n].enclosure,
            _decimal_str(certs[n].enclosure.mid - xi_mid),
            "even" if n % 2 == 0 else "odd",
            certs[n].enclosure.width,
        )
        for n in range(1, n_max + 1)
    ]
    report = ConvergenceReport(k, rows, xi_cert.enclosure)
    report.monotone_even_ok = monotone_even
    report.monotone_odd_ok = monotone_odd
    report.bounds_ok = bounds
    report.interleave_ok = interleave
    return report


def certified_gap_bound(k: int, n: int, width=DEFAULT_WIDTH) -> Fraction:
    """Upper bound on |g_n - xi(k)| from the two enclosures alone."""
    g = maximal_root(k, n, width).enclosure
    x = xi(k, width).enclosure
    return max(abs(g.hi - x.lo), abs(x.hi - g.lo))


def xi_scan(k_max: int, width=DEFAULT_WIDTH):
    """Certified xi(k) for k = 1..k_max; asserts strict decrease in k.

    Returns the list of (k, enclosure) pairs; the measured distance of
    the last root from 1 is available from its enclosure.
    """
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    if not isinstance(width, Fraction):
        width = Fraction(width)
    certs = [xi(k, width) for k in range(1, k_max + 1)]
    for i in range(1, len(certs)):
        s, certs[i], certs[i - 1] = _separated(certs[i], certs[i - 1], width)
        if s >= 0:
            raise AssertionError(f"xi({i + 1}) not below xi({i})")
    return [(i + 1, c.enclosure) for i, c in enumerate(certs)]


@dataclass
class ProbeReport:
    k: int
    bits: int
    log10_rhs: dict  # n -> log10 |rhs| at the certified root
    even_decreasing: bool
    odd_decreasing: bool

    @property
    def passed(self) -> bool:
        return self.even_decreasing and self.odd_decreasing


def eq1_convergence_probe(k: int, n: int, bits: int = 128,
                          width=DEFAULT_WIDTH) -> ProbeReport:
    """|rhs| of the limit equation at certified roots g_2..g_n, checked
    to decrease along each parity class (reported in log10 space)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    logs = {}
    for m in range(2, n + 1):
        g = maximal_root(k, m, width).value(bits)
        logs[m] = eq1_rhs_log10(k, m, g, bits)
    even = [logs[m] for m in range(2, n + 1, 2)]
    odd = [logs[m] for m in range(3, n + 1, 2)]
    dec = lambda xs: all(b < a for a, b in zip(xs, xs[1:]))
    return ProbeReport(k, bits, logs, dec(even), dec(odd))
