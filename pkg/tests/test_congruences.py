"""The polynomial congruence registry over F_p."""

import pytest

from fincong.congruences import (P_MIN, PRIME_POWER_OK, SHIFTED,
                                 SYMMETRIC_RHS, X_NATIVE, TheoremId,
                                 _harmonic_rhs_beta, build_sides,
                                 build_sides_x, central_extension_sides,
                                 lhs_coefficients, verify)
from fincong.polyfp import PolyFp, subst_x_to_beta, swap_beta
from fincong.primes import primes_in


def test_central_binomial_spot_value():
    # q = 3: both sides equal 1 + 2x
    lhs, rhs = build_sides_x(TheoremId.CENTRAL_POL, 3, 3)
    assert lhs == rhs == PolyFp((1, 2), 3)
    rep = verify(TheoremId.CENTRAL_POL, 3, 3)
    assert rep.status == "pass"
    assert rep.witness == ""
    assert rep.lhs_digest == rep.rhs_digest


def test_catalan_spot_value():
    # q = 3: both sides equal x + x^2 + 2x^3
    lhs, rhs = build_sides_x(TheoremId.CATALAN_POL, 3, 3)
    assert lhs == rhs == PolyFp((0, 1, 1, 2), 3)


def test_shifted_spot_value_both_charts():
    # q = 5, e = 1: the x-chart sides are 1 + 3x, the beta-chart sides
    # are 1 - 2*beta + 2*beta^2
    coeffs = lhs_coefficients(TheoremId.SHIFTED_A, 5, 5, 1)
    assert coeffs == [1, 3]
    lhs, rhs = build_sides(TheoremId.SHIFTED_A, 5, 5, 1)
    assert lhs == rhs == PolyFp((1, 3, 2), 5)
    assert subst_x_to_beta(PolyFp(coeffs, 5)) == lhs


def test_harmonic_spot_value():
    # p = 5: both sides equal 2b + b^2 + 4b^3 + 3b^4
    lhs, rhs = build_sides(TheoremId.N1, 5, 5)
    assert lhs == rhs == PolyFp((0, 2, 1, 4, 3), 5)


def test_kernel_shift_spot_value():
    # q = 3, d = 0: both sides are 2x, i.e. 2b + b^2 in the beta chart
    lhs, rhs = build_sides(TheoremId.SHIFTED_KW, 3, 3, 0)
    assert lhs == rhs == subst_x_to_beta(PolyFp((0, 2), 3))
    assert lhs == PolyFp((0, 2, 1), 3)


def test_symmetric_right_sides():
    # these right sides live in the beta chart and are invariant under
    # beta -> 1 - beta, as they must be to be polynomials in x
    for theorem in SYMMETRIC_RHS:
        p = max(P_MIN[theorem], 7)
        _, rhs = build_sides(theorem, p, p)
        assert swap_beta(rhs) == rhs, theorem


def test_degree_bounds():
    for theorem in TheoremId:
        p = max(P_MIN[theorem], 5)
        shift = 1 if theorem in SHIFTED else 0
        lhs, rhs = build_sides(theorem, p, p, shift)
        assert lhs.degree <= 2 * p
        assert rhs.degree <= 2 * p


def test_weighted_side_is_logarithmic_derivative():
    # the k-weighted right side equals x * d/dx of the unweighted one
    for q, p in ((7, 7), (9, 3), (25, 5)):
        _, rhs = build_sides_x(TheoremId.CENTRAL_POL, q, p)
        _, rhs_k = build_sides_x(TheoremId.CENTRAL_POL_K, q, p)
        assert PolyFp.monomial(1, p) * rhs.derivative() == rhs_k


def test_prime_power_moduli():
    for q, p in ((9, 3), (27, 3), (25, 5), (49, 7)):
        for theorem in X_NATIVE:
            assert verify(theorem, q, p).status == "pass", (theorem, q)
        for theorem in SHIFTED:
            for shift in (0, 1, 2):
                rep = verify(theorem, q, p, shift)
                assert rep.status == "pass", (theorem, q, shift)


def test_full_registry_small_primes():
    for p in primes_in(3, 20):
        for theorem in TheoremId:
            if p < P_MIN[theorem]:
                continue
            shifts = range(p) if theorem in SHIFTED else (0,)
            for shift in shifts:
                rep = verify(theorem, p, p, shift)
                assert rep.status == "pass", (theorem, p, shift, rep.witness)


def test_central_extension_to_double_length():
    for q, p in ((3, 3), (9, 3), (5, 5), (25, 5), (7, 7)):
        lhs, rhs = central_extension_sides(q, p)
        assert lhs == rhs, (q, p, lhs.first_diff(rhs))


def test_harmonic_quotient_needs_five():
    # the congruence relating the central sum against harmonic numbers of
    # weight (1,1) is genuinely false at p = 3: the right side picks up
    # the nonzero value 2*H^{(2)}_2 = 5/2 = 1 at beta = 0
    assert P_MIN[TheoremId.T_EQ] == 5
    rhs = _harmonic_rhs_beta(TheoremId.T_EQ, 3)
    # left side at p = 3 by hand: only k = 1 contributes, with
    # C(2,1) * H_1 / 1 = 2, since C(4,2) = 6 vanishes mod 3
    lhs = subst_x_to_beta(PolyFp((0, 2), 3))
    assert lhs.first_diff(rhs) == (0, 0, 1)
    with pytest.raises(ValueError):
        verify(TheoremId.T_EQ, 3, 3)


def test_weight_one_harmonics_hold_at_three():
    # the weight-one relatives remain valid at p = 3
    for theorem in (TheoremId.M3, TheoremId.CM3):
        assert verify(theorem, 3, 3).status == "pass"


def test_validation_errors():
    with pytest.raises(ValueError):
        verify(TheoremId.CENTRAL_POL, 8, 2)        # even modulus
    with pytest.raises(ValueError):
        verify(TheoremId.CENTRAL_POL, 15, 5)       # 15 is not a power of 5
    with pytest.raises(ValueError):
        verify(TheoremId.SHIFTED_A, 5, 5, 5)       # shift must stay below q
    with pytest.raises(ValueError):
        verify(TheoremId.N1, 25, 5)                # prime modulus only
    with pytest.raises(ValueError):
        verify(TheoremId.N1, 3, 3)                 # below the prime floor
    with pytest.raises(ValueError):
        lhs_coefficients(TheoremId.CENTRAL_POL, 7, 7, 1)  # spurious shift
    assert TheoremId.CENTRAL_POL in PRIME_POWER_OK
    assert TheoremId.N1 not in PRIME_POWER_OK


def test_report_fields():
    rep = verify(TheoremId.SHIFTED_DFORM, 9, 3, 2)
    assert rep.theorem == "SHIFTED_DFORM"
    assert rep.modulus == 9
    assert rep.params == "d=2"
    assert rep.status == "pass"
    rep = verify(TheoremId.SHIFTED_A, 9, 3, 2)
    assert rep.params == "e=2"
