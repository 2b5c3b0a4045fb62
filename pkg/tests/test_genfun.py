import pytest

from fibtype.families import FamilyId, bfp1, bfp2, fib, gee
from fibtype.genfun import (
    RationalGF,
    UnknownFamily,
    family_gf,
    gf_check,
    series_expand,
)
from fibtype.polyarith import BI_X, BI_Y, Polynomial


def test_gee_gf_first_coefficients():
    s = series_expand(family_gf(FamilyId("G", 1)), 2)
    assert s.coeffs == (gee(1, 0), gee(1, 1), gee(1, 2))
    assert s.coeffs[2] == Polynomial((-1, -1, 1))


def test_fib_gf_first_coefficients():
    s = series_expand(family_gf(FamilyId("F")), 2)
    assert s.coeffs == (fib(0), fib(1), Polynomial((1, 0, 1)))


def test_bfp1_gf_first_coefficients():
    s = series_expand(family_gf(FamilyId("BFP1")), 1)
    assert s.coeffs == (BI_X, BI_Y)


def test_denominator_unit_enforced():
    with pytest.raises(ValueError):
        RationalGF((Polynomial((1,)),), (Polynomial((0, 1)),))


@pytest.mark.parametrize(
    "fam",
    [FamilyId("F"), FamilyId("G", 1), FamilyId("G", 2), FamilyId("G", 3),
     FamilyId("BFP1"), FamilyId("BFP2")],
    ids=str,
)
def test_gf_check_order_25(fam):
    rep = gf_check(fam, 25)
    assert rep.passed, rep.detail


def test_gf_check_order_zero():
    assert gf_check(FamilyId("F"), 0).passed


def test_prefix_stability():
    gf = family_gf(FamilyId("G", 2))
    short = series_expand(gf, 10)
    long = series_expand(gf, 20)
    assert long.coeffs[: 11] == short.coeffs


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        gf_check(FamilyId("LUCAS"), 5)


@pytest.mark.parametrize("n", range(0, 26))
def test_bfp2_series_matches_recurrence_termwise(n):
    s = series_expand(family_gf(FamilyId("BFP2")), 25)
    assert s.coeffs[n] == bfp2(n)
