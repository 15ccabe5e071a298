"""Exact rational power series and the characteristic-zero registry."""

from fractions import Fraction
from math import comb

import pytest

from fincong.ratseries import (MAX_ORDER, SERIES_IDENTITIES, RatSeries,
                               integration_parts_reports, li, series_beta,
                               series_reports, verify_series_identity)


def test_ring_arithmetic():
    n = 12
    f = RatSeries([1, Fraction(1, 2), 3], n)
    g = RatSeries([2, 0, 1], n)
    assert (f + g).c[:3] == (Fraction(3), Fraction(1, 2), Fraction(4))
    assert (f - g).coeff(0) == -1
    assert (f * g).coeff(2) == 3 * 2 + Fraction(1, 2) * 0 + 1 * 1
    assert (f ** 2) == f * f
    assert f.scale(Fraction(1, 3)).coeff(2) == 1
    assert RatSeries.monomial(4, n).coeff(4) == 1


def test_recip_and_compose():
    n = 20
    one = RatSeries.one(n)
    x = RatSeries.monomial(1, n)
    geom = (one - x).recip()
    assert all(geom.coeff(k) == 1 for k in range(n))
    assert (geom * (one - x)) == one
    with pytest.raises(ValueError):
        x.recip()
    # composition requires zero constant term in the inner series
    f = li(1, n)
    assert f.compose(x) == f
    with pytest.raises(ValueError):
        f.compose(one)


def test_derivative_and_integral():
    n = 15
    f = li(2, n)
    assert f.dx().int_().truncate(n) == f
    # x * d/dx lowers the weight by one
    x = RatSeries.monomial(1, n)
    assert (x * f.dx()).truncate(n - 1) == li(1, n).truncate(n - 1)
    # weight zero is the geometric-type series x/(1-x)
    one = RatSeries.one(n)
    assert li(0, n) == x * (one - x).recip()


def test_series_beta_is_catalan():
    n = 30
    b = series_beta(n)
    for k in range(n - 1):
        assert b.coeff(k + 1) == Fraction(comb(2 * k, k), k + 1)
    one = RatSeries.one(n)
    x = RatSeries.monomial(1, n)
    assert b * (one - b) == x
    # derivative relation: beta' * (1 - 2*beta) = 1
    assert (b.dx() * (one - b.scale(2))).truncate(n - 1) == one.truncate(n - 1)


def test_chain_rule_through_beta():
    n = 25
    one = RatSeries.one(n)
    b = series_beta(n)
    for d in (1, 2, 3):
        lidb = li(d, n).compose(b)
        lower = li(d - 1, n).compose(b)
        lhs = (b * (one - b.scale(2)) * lidb.dx()).truncate(n - 1)
        assert lhs == lower.truncate(n - 1)
    # powers of the weight-one series
    li1b = li(1, n).compose(b)
    for d in (2, 3):
        lhs = ((one - b) * (one - b.scale(2))
               * (li1b ** d).dx()).truncate(n - 1)
        rhs = (li1b ** (d - 1)).scale(d).truncate(n - 1)
        assert lhs == rhs


def test_frozen_coefficient():
    # the series sum_{k>=1} binom(2k,k) x^k / k starts 2x + 3x^2 + 20/3 x^3
    lhs = RatSeries([0] + [Fraction(comb(2 * k, k), k)
                           for k in range(1, 8)], 8)
    assert lhs.coeff(3) == Fraction(20, 3)
    b = series_beta(8)
    assert li(1, 8).compose(b).scale(2) == lhs


def test_registry_passes_at_order_sixty():
    reports = series_reports(60)
    assert {r.theorem for r in reports} == set(SERIES_IDENTITIES)
    for r in reports:
        assert r.status == "pass", (r.theorem, r.params, r.witness)
    for ident in SERIES_IDENTITIES:
        assert verify_series_identity(ident, 60)


def test_integration_by_parts():
    reports = integration_parts_reports(40)
    assert [r.theorem for r in reports] == ["IBP_LI2", "IBP_LI1SQ"]
    assert all(r.status == "pass" for r in reports)


def test_order_guard():
    with pytest.raises(ValueError):
        verify_series_identity("B4", MAX_ORDER + 1)
    with pytest.raises(ValueError):
        RatSeries([1], 0)
    with pytest.raises(ValueError):
        verify_series_identity("NOPE", 20)
