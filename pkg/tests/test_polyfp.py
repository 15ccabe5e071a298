"""Dense polynomial arithmetic over F_p."""

import pytest

from fincong.polyfp import (BiPolyFp, InexactDivision, PolyFp, exact_divide,
                            series_inv, subst_x_to_beta, swap_beta)


def test_construction_trims_and_reduces():
    f = PolyFp([8, 14, 0, 7], 7)
    assert f.c == (1,)
    assert f.degree == 0
    assert PolyFp([], 5).is_zero()
    assert PolyFp([0, 0], 5).degree == -1


def test_ring_ops():
    p = 13
    f = PolyFp([1, 2, 3], p)
    g = PolyFp([5, 0, 1], p)
    assert (f + g) - g == f
    assert f * g == g * f
    assert (f * g).degree == 4
    assert f.scale(2) == f + f
    assert (-f) + f == PolyFp.zero(p)
    assert f ** 3 == f * f * f
    assert PolyFp.monomial(4, p, 6).coeff(4) == 6


def test_eval_shift_truncate_derivative():
    p = 11
    f = PolyFp([3, 0, 1, 2], p)          # 3 + x^2 + 2x^3
    assert f.eval_at(2) == (3 + 4 + 16) % p
    assert f.shift(2).coeff(5) == 2
    assert f.truncate(2).c == (3,)
    assert f.derivative() == PolyFp([0, 2, 6], p)


def test_first_diff_and_encode():
    p = 5
    f = PolyFp([1, 2], p)
    g = PolyFp([1, 3, 4], p)
    assert f.first_diff(f) is None
    assert f.first_diff(g) == (1, 2, 3)
    assert f.encode() == "5|1,2"
    assert PolyFp.zero(p).encode() == "5|"


def test_series_inv():
    p = 7
    f = PolyFp([1, 6, 0, 3], p)
    g = series_inv(f, 10)
    assert (f * g).truncate(10) == PolyFp.one(p)
    with pytest.raises(ValueError):
        series_inv(PolyFp([0, 1], p), 4)


def test_exact_divide():
    p = 11
    f = PolyFp([1, 2, 3], p)             # f(-1) = 2, so x + 1 divides f with
    g = PolyFp([1, 1], p)                # a nonzero remainder
    assert exact_divide(f * g, g) == f
    with pytest.raises(InexactDivision):
        exact_divide(f, g)
    with pytest.raises(InexactDivision):
        exact_divide(g, f)                # degree too small
    with pytest.raises(InexactDivision):
        exact_divide(f, PolyFp.zero(p))


def test_substitutions():
    p = 7
    f = PolyFp([2, 1, 0, 5], p)
    # beta -> 1 - beta is an involution
    assert swap_beta(swap_beta(f)) == f
    # x -> beta - beta^2 turns x into the degree-2 chart polynomial
    x_image = subst_x_to_beta(PolyFp([0, 1], p))
    assert x_image == PolyFp([0, 1, -1], p)
    # the substitution is a ring homomorphism
    g = PolyFp([1, 3], p)
    assert subst_x_to_beta(f * g) == subst_x_to_beta(f) * subst_x_to_beta(g)
    # and the beta chart is symmetric in beta -> 1 - beta by construction
    assert swap_beta(x_image) == x_image


def test_bipoly_basic():
    p = 5
    f = BiPolyFp.from_terms([(0, 0, 1), (2, 1, 3)], p)
    g = BiPolyFp.from_terms([(2, 1, 2)], p)
    assert (f + g).coeff(2, 1) == 0
    assert (f + g).coeff(0, 0) == 1
    assert f.first_diff(f) is None
    assert f.first_diff(g) == (0, 0, 1, 0)
    fx = PolyFp([1, 2], p)
    fy = PolyFp([0, 3], p)
    outer = BiPolyFp.outer(fx, fy)
    assert outer.coeff(1, 1) == 6 % p
    assert outer.coeff(0, 1) == 3
    assert outer.coeff(1, 0) == 0


def test_bipoly_diagonal():
    p = 7
    f = BiPolyFp.from_terms([(1, 2, 3), (2, 1, 4), (0, 0, 2)], p)
    diag = f.subst_y_equals_x()
    assert diag.coeff(3) == 0              # 3 + 4 = 7 = 0 mod 7
    assert diag.coeff(0) == 2
    assert diag == PolyFp([2], p)
