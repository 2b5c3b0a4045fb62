from fractions import Fraction

import pytest

from fibtype.convergence import (
    InconclusiveComparison,
    _separated,
    certified_gap_bound,
    converge_table,
    eq1_convergence_probe,
    xi_scan,
)
from fibtype.roots import maximal_root, xi

SQRT2 = Fraction("1.414213562373095048801688724209698078570")


def test_k1_interleaving_around_three_halves():
    rep = converge_table(1, 10)
    assert rep.all_ok
    assert rep.xi_enclosure.lo == Fraction(3, 2) == rep.xi_enclosure.hi
    for row in rep.rows:
        if row.parity == "odd":
            assert row.g_enclosure.hi < Fraction(3, 2) or row.n == 1
            assert row.gap.startswith("-")
        else:
            assert row.g_enclosure.lo > Fraction(3, 2)
            assert not row.gap.startswith("-")


def test_k1_first_roots():
    rep = converge_table(1, 5)
    rows = {r.n: r for r in rep.rows}
    assert rows[1].g_enclosure.lo == 1 and rows[1].width == 0
    assert Fraction("1.465571231876768026656731225219939108026") in rows[3].g_enclosure
    assert Fraction("1.618033988749894848204586834365638117720") in rows[2].g_enclosure


@pytest.mark.parametrize("k", [1, 2, 3])
def test_converge_checks_to_n40(k):
    rep = converge_table(k, 40)
    assert rep.monotone_even_ok
    assert rep.monotone_odd_ok
    assert rep.bounds_ok
    assert rep.interleave_ok


def test_k2_gap_below_1e6_at_n40():
    assert certified_gap_bound(2, 40) < Fraction(1, 10**6)
    cert = maximal_root(2, 40)
    assert abs(cert.enclosure.mid - SQRT2) < Fraction(1, 10**6)


TIGHT = Fraction(1, 2**200)  # gaps at n=40 dip below the default width


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_gap_ratio_below_one(k):
    # Certified: same-parity distances to xi shrink strictly.
    x = xi(k, TIGHT)
    gaps = {n: certified_gap_bound(k, n, TIGHT) for n in range(2, 41)}
    lows = {n: _low_gap(k, n, x) for n in range(2, 41)}
    for n in range(4, 41):
        # upper bound at n must undercut the certified lower bound at n-2
        assert gaps[n] < lows[n - 2], (k, n)


def _low_gap(k, n, x):
    g = maximal_root(k, n, TIGHT).enclosure
    xe = x.enclosure
    if g.lo > xe.hi:
        return g.lo - xe.hi
    return xe.lo - g.hi


def test_rows_ordered_and_parity_tagged():
    rep = converge_table(2, 8)
    assert [r.n for r in rep.rows] == list(range(1, 9))
    assert all(r.parity == ("even" if r.n % 2 == 0 else "odd") for r in rep.rows)
    assert all(r.width == r.g_enclosure.width for r in rep.rows)


def test_xi_scan_strictly_decreasing():
    scan = xi_scan(64)
    assert [k for k, _ in scan] == list(range(1, 65))
    for (_, a), (_, b) in zip(scan, scan[1:]):
        assert b.hi < a.lo
    assert all(e.lo > 1 for _, e in scan)
    # and the tail is closing in on 1
    assert scan[-1][1].hi - 1 < Fraction(1, 20)


def test_separated_raises_on_equal_exact():
    a = xi(1)
    with pytest.raises(InconclusiveComparison):
        _separated(a, a, Fraction(1, 2**80))


@pytest.mark.parametrize("k", [1, 2])
def test_eq1_probe_decay(k):
    rep = eq1_convergence_probe(k, 20)
    assert rep.even_decreasing and rep.odd_decreasing
    # magnitudes are tiny and reported in log space
    assert rep.log10_rhs[20] < rep.log10_rhs[4] < 0


def test_invalid_arguments():
    with pytest.raises(ValueError):
        converge_table(0, 10)
    with pytest.raises(ValueError):
        converge_table(1, 1)
    with pytest.raises(ValueError):
        xi_scan(1)
