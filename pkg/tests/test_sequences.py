"""Combinatorial sequences modulo p, cross-checked against independent
integer-arithmetic oracles."""

from fractions import Fraction
from math import comb

import pytest

from fincong.modarith import frac_mod
from fincong.polyfp import PolyFp
from fincong.sequences import (bernoulli_mod, binom_mod, binomial_power,
                               catalans, central_binomials,
                               central_trinomials, fermat_quotient_2,
                               harmonic_table, lucas_number_mod,
                               lucas_quotient, lucas_table)


def test_binom_mod_against_comb():
    for p in (3, 7, 13):
        for n in range(0, 60):
            for k in range(0, n + 3):
                assert binom_mod(n, k, p) == comb(n, k) % p


def test_central_binomials_and_catalans():
    for p in (5, 11):
        cb = central_binomials(12, p)
        cat = catalans(12, p)
        for k in range(12):
            assert cb[k] == comb(2 * k, k) % p
            assert cat[k] == comb(2 * k, k) // (k + 1) % p


def test_central_trinomials():
    # oracle: T_k = sum_j C(k, 2j) C(2j, j), the x^k coefficient of
    # (1 + x + x^2)^k
    def trinomial(k):
        return sum(comb(k, 2 * j) * comb(2 * j, j) for j in range(k // 2 + 1))

    assert [trinomial(k) for k in range(6)] == [1, 1, 3, 7, 19, 51]
    for p in (3, 7, 13):
        tri = central_trinomials(10, p)
        for k in range(10):
            assert tri[k] == trinomial(k) % p


def test_harmonic_tables():
    for p in (7, 13):
        for order in (1, 2, 3):
            table = harmonic_table(p, p, order)
            acc = Fraction(0)
            assert table[0] == 0
            for k in range(1, p):
                acc += Fraction(1, k ** order)
                assert table[k] == frac_mod(acc, p)


def test_wolstenholme_vanishing():
    # H_{p-1} = 0 mod p for p > 2 and H^{(2)}_{p-1} = 0 mod p for p > 3
    for p in (5, 7, 11, 13):
        assert harmonic_table(p, p, 1)[p - 1] == 0
        assert harmonic_table(p, p, 2)[p - 1] == 0
    assert harmonic_table(3, 3, 1)[2] == 0
    assert harmonic_table(3, 3, 2)[2] != 0     # 5/4 = 2 mod 3


def test_bernoulli_mod():
    known = {0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6),
             4: Fraction(-1, 30), 6: Fraction(1, 42), 8: Fraction(-1, 30),
             3: Fraction(0), 5: Fraction(0), 7: Fraction(0)}
    for p in (11, 13):
        for n, value in known.items():
            if n <= p - 3:
                assert bernoulli_mod(n, p) == frac_mod(value, p)
    assert bernoulli_mod(4, 7) == 3            # -1/30 mod 7
    with pytest.raises(ValueError):
        bernoulli_mod(5, 7)                    # n > p - 3


def test_fermat_quotient_2():
    assert fermat_quotient_2(3) == 1
    assert fermat_quotient_2(5) == 3
    assert fermat_quotient_2(7) == 2
    for p in (11, 13, 101):
        q = fermat_quotient_2(p)
        assert pow(2, p - 1, p * p) == (1 + q * p) % (p * p)


def test_lucas_numbers():
    want = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]
    m = 1000
    assert lucas_table(10, m) == want
    for n, v in enumerate(want):
        assert lucas_number_mod(n, m) == v
    # fast doubling agrees with the table far out
    table = lucas_table(200, 9973)
    for n in (0, 1, 50, 121, 199):
        assert lucas_number_mod(n, 9973) == table[n]


def test_lucas_quotient():
    assert lucas_quotient(5) == 2              # L_5 = 11
    assert lucas_quotient(7) == 4              # L_7 = 29
    for p in (11, 13, 31):
        ql = lucas_quotient(p)
        assert lucas_number_mod(p, p * p) == (1 + ql * p) % (p * p)


def test_binomial_power():
    for p in (5, 13):
        for a, b, n in ((1, -4, 6), (1, -1, 9), (0, 1, 5), (2, 3, 4)):
            direct = PolyFp.one(p)
            base = PolyFp([a, b], p)
            for _ in range(n):
                direct = direct * base
            assert binomial_power(a, b, n, p) == direct
    assert binomial_power(1, 1, 0, 7) == PolyFp.one(7)
