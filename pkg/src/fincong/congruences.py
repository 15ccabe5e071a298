"""The polynomial congruence registry.

Each theorem identifier names one congruence between a truncated binomial
sum and a closed form, valid in F_p[x] (or F_p[beta] after substituting
x = beta - beta^2, where alpha = 1 - beta and alpha*beta = x).  Builders
return both sides as canonical polynomials in the beta chart; the checker
compares them coefficient by coefficient at exact precision.

Closed forms never use rational functions: quotients like
(alpha^m - beta^m)/(alpha - beta) are produced by exact polynomial
division, and any divisibility failure is itself a verification failure.
"""

from __future__ import annotations

from enum import Enum, unique

from .finpolylog import polylog, scaled_polylog
from .polyfp import (InexactDivision, PolyFp, exact_divide, subst_x_to_beta,
                     swap_beta)
from .primes import is_prime, prime_power_base
from .reports import CongruenceReport, failure, from_polys
from .sequences import (binom_mod, binomial_power, catalans,
                        central_binomials, central_trinomials,
                        harmonic_table)


@unique
class TheoremId(str, Enum):
    CENTRAL_POL = "CENTRAL_POL"
    CENTRAL_POL_K = "CENTRAL_POL_K"
    CATALAN_POL = "CATALAN_POL"
    TRINOMIAL_POL = "TRINOMIAL_POL"
    SHIFTED_A = "SHIFTED_A"
    SHIFTED_B = "SHIFTED_B"
    SHIFTED_DFORM = "SHIFTED_DFORM"
    SHIFTED_KW = "SHIFTED_KW"
    N1 = "N1"
    N2 = "N2"
    N3 = "N3"
    M3 = "M3"
    CM3 = "CM3"
    C10 = "C10"
    C11 = "C11"
    T_EQ = "T_EQ"
    C12 = "C12"
    C13 = "C13"


# Statements about plain binomial sums hold at any odd prime power q; the
# ones involving harmonic numbers or polylogarithms are stated at q = p.
X_NATIVE = frozenset({TheoremId.CENTRAL_POL, TheoremId.CENTRAL_POL_K,
                      TheoremId.CATALAN_POL, TheoremId.TRINOMIAL_POL})
SHIFTED = frozenset({TheoremId.SHIFTED_A, TheoremId.SHIFTED_B,
                     TheoremId.SHIFTED_DFORM, TheoremId.SHIFTED_KW})
PRIME_POWER_OK = X_NATIVE | SHIFTED

# Right-hand sides fixed by the chart involution beta -> 1 - beta.
SYMMETRIC_RHS = frozenset({TheoremId.N1, TheoremId.N2, TheoremId.N3,
                           TheoremId.M3, TheoremId.CM3, TheoremId.C10,
                           TheoremId.C11, TheoremId.T_EQ, TheoremId.C12,
                           TheoremId.C13})

# T_EQ genuinely needs p > 3: its right-hand side at beta = 0 evaluates to
# twice the (p-1)-st second-order harmonic number, which vanishes mod p only
# for p > 3, while the left-hand side is 0 there.  See the pinned p = 3
# counterexample in the test suite.
P_MIN = {t: 3 for t in TheoremId}
P_MIN.update({TheoremId.N1: 5, TheoremId.N2: 5, TheoremId.N3: 5,
              TheoremId.C10: 5, TheoremId.C11: 5, TheoremId.T_EQ: 5,
              TheoremId.C12: 5, TheoremId.C13: 5})


def shift_letter(theorem: TheoremId) -> str:
    """The parameter name of a shifted statement: e for the upper-index
    shifts, d for the lower-index shifts."""
    if theorem in (TheoremId.SHIFTED_A, TheoremId.SHIFTED_B):
        return "e"
    if theorem in (TheoremId.SHIFTED_DFORM, TheoremId.SHIFTED_KW):
        return "d"
    raise ValueError(f"{theorem.value} takes no shift")


def _validate(theorem: TheoremId, q: int, p: int, shift: int) -> None:
    pp = prime_power_base(q)
    if pp is None or pp[0] != p:
        raise ValueError(f"q={q} is not a power of p={p}")
    if p == 2 or not is_prime(p):
        raise ValueError("an odd prime p is required")
    if p < P_MIN[theorem]:
        raise ValueError(f"{theorem.value} requires p >= {P_MIN[theorem]}")
    if theorem in SHIFTED:
        if not 0 <= shift < q:
            raise ValueError(f"shift must satisfy 0 <= shift < q={q}")
    elif shift:
        raise ValueError(f"{theorem.value} takes no shift")
    if theorem not in PRIME_POWER_OK and q != p:
        raise ValueError(f"{theorem.value} is only stated at q = p")


# -- linear-binomial powers, expanded directly -------------------------------

def _alpha_pow(m: int, p: int) -> PolyFp:
    """(1 - beta)^m."""
    return binomial_power(1, -1, m, p)


def _lucas_v(m: int, p: int) -> PolyFp:
    """(alpha^m - beta^m)/(alpha - beta) in the beta chart."""
    num = _alpha_pow(m, p) - PolyFp.monomial(m, p)
    return exact_divide(num, PolyFp((1, -2), p))


def _lucas_w(m: int, p: int) -> PolyFp:
    """alpha^m + beta^m in the beta chart."""
    return _alpha_pow(m, p) + PolyFp.monomial(m, p)


# -- builders ---------------------------------------------------------------

def lhs_coefficients(theorem: TheoremId, q: int, p: int,
                     shift: int = 0) -> list[int]:
    """x-chart coefficients of the truncated sum on the left-hand side.

    The list index is the exponent of x; for the lower-shifted statements
    the sum over k is reindexed by j = k - d, so index j carries the
    coefficient of x^j.  Shared by the polynomial builders and the
    pointwise field evaluations, so both check the same sum.
    """
    _validate(theorem, q, p, shift)
    if theorem is TheoremId.CENTRAL_POL:
        return central_binomials(q, p)
    if theorem is TheoremId.CENTRAL_POL_K:
        return [k * c for k, c in enumerate(central_binomials(q, p))]
    if theorem is TheoremId.CATALAN_POL:
        return [0] + catalans(q, p)
    if theorem is TheoremId.TRINOMIAL_POL:
        return central_trinomials(q, p)
    if theorem is TheoremId.SHIFTED_A:
        top = (q - shift - 1) // 2
        return [binom_mod(2 * k + shift, k, p) for k in range(top + 1)]
    if theorem is TheoremId.SHIFTED_B:
        return [binom_mod(2 * k + shift, k, p) for k in range(q)]
    if theorem is TheoremId.SHIFTED_DFORM:
        return [binom_mod(2 * k, k - shift, p) for k in range(shift, q)]
    if theorem is TheoremId.SHIFTED_KW:
        return [k * binom_mod(2 * k, k - shift, p) for k in range(shift, q)]

    cb = central_binomials(p, p)
    inv = [0] + [pow(k, -1, p) for k in range(1, p)]
    if theorem is TheoremId.N1:
        return [0] + [cb[k] * inv[k] for k in range(1, p)]
    if theorem is TheoremId.N2:
        return [0] + [cb[k] * inv[k] * inv[k] for k in range(1, p)]
    if theorem is TheoremId.N3:
        h2 = harmonic_table(p, p, 2)
        return [0] + [cb[k] * (h2[k] * inv[k] + pow(inv[k], 3, p))
                      for k in range(1, p)]
    if theorem is TheoremId.M3:
        h1 = harmonic_table(p, p, 1)
        return [cb[k] * h1[k] for k in range(p)]
    if theorem is TheoremId.CM3:
        h1 = harmonic_table(p, p, 1)
        return [0] + [c * h for c, h in zip(catalans(p, p), h1)]
    if theorem is TheoremId.C10:
        h2 = harmonic_table(p, p, 2)
        return [cb[k] * h2[k] for k in range(p)]
    if theorem is TheoremId.C11:
        h2 = harmonic_table(p, p, 2)
        return [0] + [c * h for c, h in zip(catalans(p, p), h2)]
    if theorem is TheoremId.T_EQ:
        h1 = harmonic_table(p, p, 1)
        return [0] + [cb[k] * h1[k] * inv[k] for k in range(1, p)]
    if theorem is TheoremId.C12:
        h2 = harmonic_table(p, p, 2)
        return [0] + [cb[k] * h2[k] * inv[k] for k in range(1, p)]
    return [0] + [cb[k] * pow(inv[k], 3, p) for k in range(1, p)]


def build_sides_x(theorem: TheoremId, q: int, p: int) -> tuple[PolyFp, PolyFp]:
    """Both sides in the x chart, for the statements native to it."""
    _validate(theorem, q, p, 0)
    if theorem not in X_NATIVE:
        raise ValueError(f"{theorem.value} has no closed form in the x chart")
    half = (q - 1) // 2
    one = PolyFp.one(p)
    lhs = PolyFp(lhs_coefficients(theorem, q, p), p)
    if theorem is TheoremId.CENTRAL_POL:
        rhs = binomial_power(1, -4, half, p)
    elif theorem is TheoremId.CENTRAL_POL_K:
        rhs = binomial_power(1, -4, (q - 3) // 2, p).shift(1).scale(2)
    elif theorem is TheoremId.CATALAN_POL:
        inner = one - binomial_power(1, -4, (q + 1) // 2, p)
        rhs = inner.scale(pow(2, -1, p)) - PolyFp.monomial(q, p)
    else:
        rhs = binomial_power(1, -3, half, p) * binomial_power(1, 1, half, p)
    assert lhs.degree <= 2 * (q - 1) and rhs.degree <= 2 * (q - 1)
    return lhs, rhs


def _shifted_rhs_beta(theorem: TheoremId, q: int, p: int,
                      shift: int) -> PolyFp:
    if theorem is TheoremId.SHIFTED_A:
        return _lucas_v(q - shift, p)
    if theorem is TheoremId.SHIFTED_B:
        return _lucas_v(2 * q - shift, p)
    if theorem is TheoremId.SHIFTED_DFORM:
        return _lucas_v(2 * q - 2 * shift, p)
    m = 2 * q - 2 * shift
    x_poly = PolyFp((0, 1, -1), p)
    num = (x_poly * _lucas_v(m, p)).scale(2) + _lucas_w(m, p).scale(shift)
    return exact_divide(num, PolyFp((1, -2), p) ** 2)


def _harmonic_rhs_beta(theorem: TheoremId, p: int) -> PolyFp:
    t = PolyFp.monomial(1, p)
    alpha = PolyFp((1, -1), p)
    amb = PolyFp((1, -2), p)          # alpha - beta
    bma = PolyFp((-1, 2), p)          # beta - alpha

    if theorem is TheoremId.N1:
        l1 = polylog(1, p)
        return l1 + swap_beta(l1)
    if theorem is TheoremId.N2:
        l2 = polylog(2, p)
        return (l2 + swap_beta(l2)).scale(2)
    if theorem is TheoremId.N3:
        l3 = polylog(3, p)
        return (l3 + swap_beta(l3)).scale(4)
    if theorem is TheoremId.M3:
        return scaled_polylog(1, t, bma, p - 1).scale(-2)
    if theorem is TheoremId.CM3:
        return polylog(1, p) + scaled_polylog(1, t, bma, p + 1)
    if theorem is TheoremId.C10:
        l2 = polylog(2, p)
        return exact_divide((swap_beta(l2) - l2).scale(2), bma)
    if theorem is TheoremId.C11:
        l2 = polylog(2, p)
        return (alpha * swap_beta(l2) + t * l2).scale(2)
    if theorem is TheoremId.T_EQ:
        return (scaled_polylog(2, alpha, amb, p)
                - scaled_polylog(2, -t, amb, p)).scale(2)
    if theorem is TheoremId.C12:
        return _c12_tail(p).scale(-2)
    l3 = polylog(3, p)
    return (l3 + swap_beta(l3)).scale(4) + _c12_tail(p).scale(2)


def _c12_tail(p: int) -> PolyFp:
    """x^p * (L_3(1 - 1/alpha) + L_3(1 - 1/beta)) as a polynomial, using
    1 - 1/alpha = -beta/alpha and x^p = alpha^p beta^p."""
    t = PolyFp.monomial(1, p)
    alpha = PolyFp((1, -1), p)
    return (PolyFp.monomial(p, p) * scaled_polylog(3, -t, alpha, p)
            + _alpha_pow(p, p) * scaled_polylog(3, -alpha, t, p))


def build_sides(theorem: TheoremId, q: int, p: int,
                shift: int = 0) -> tuple[PolyFp, PolyFp]:
    """LHS and RHS of one congruence as canonical beta-chart polynomials.

    Statements native to the x chart are substituted via x = beta - beta^2;
    q may be any admissible power of p for those, while the harmonic-sum
    statements require q = p.  Shifted statements take 0 <= shift < q.
    """
    _validate(theorem, q, p, shift)
    if theorem in X_NATIVE:
        lhs_x, rhs_x = build_sides_x(theorem, q, p)
        lhs, rhs = subst_x_to_beta(lhs_x), subst_x_to_beta(rhs_x)
    else:
        lhs_x = PolyFp(lhs_coefficients(theorem, q, p, shift), p)
        lhs = subst_x_to_beta(lhs_x)
        if theorem in SHIFTED:
            rhs = _shifted_rhs_beta(theorem, q, p, shift)
        else:
            rhs = _harmonic_rhs_beta(theorem, p)
    assert lhs.degree <= 2 * q and rhs.degree <= 2 * q
    return lhs, rhs


def verify(theorem: TheoremId, q: int, p: int,
           shift: int = 0) -> CongruenceReport:
    """Check one congruence and report the outcome."""
    _validate(theorem, q, p, shift)
    params = f"{shift_letter(theorem)}={shift}" if theorem in SHIFTED else ""
    try:
        lhs, rhs = build_sides(theorem, q, p, shift)
    except InexactDivision as exc:
        return failure(theorem.value, q, params, str(exc))
    return from_polys(theorem.value, q, params, lhs, rhs)


def central_extension_sides(q: int, p: int) -> tuple[PolyFp, PolyFp]:
    """The doubled-range variant of the central congruence in the x chart:

        sum_{k<2q} C(2k,k) x^k  =  (1-4x)^{(q-1)/2} (1 + 2 x^q)  (mod p)
    """
    _validate(TheoremId.CENTRAL_POL, q, p, 0)
    lhs = PolyFp(central_binomials(2 * q, p), p)
    extra = PolyFp.one(p) + PolyFp.monomial(q, p, 2)
    rhs = binomial_power(1, -4, (q - 1) // 2, p) * extra
    return lhs, rhs
