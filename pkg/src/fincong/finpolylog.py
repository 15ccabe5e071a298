"""Finite polylogarithms over F_p and their functional congruences.

The degree-d finite polylogarithm is the polynomial sum of x^k/k^d over
0 < k < p.  Rational arguments like 1/x or y/x are handled through scaled
variants v^m * L_d(u/v), which are honest polynomials whenever m >= p-1,
so no rational-function arithmetic is ever needed.
"""

from __future__ import annotations

from math import comb

from .polyfp import BiPolyFp, PolyFp, exact_divide, swap_beta
from .reports import CongruenceReport, from_bipolys, from_polys
from .sequences import _fact_tables, binomial_power

POLYLOG_IDENTITIES = ("Q", "L1", "INV", "L2", "L3", "MIR", "PERIOD",
                      "FOUR_TERM")

FOUR_TERM_MAX_P = 100


def polylog(d: int, p: int) -> PolyFp:
    """The finite polylogarithm sum_{k=1}^{p-1} x^k / k^d over F_p."""
    return PolyFp([0] + [pow(k, -d, p) for k in range(1, p)], p)


def polylog_eval(d: int, z, ctx):
    """Evaluate the finite polylogarithm at a field element z.

    ctx is an Fp or Fp2 context; the sum runs over 0 < k < p with p the
    context characteristic.
    """
    p = ctx.p
    total = ctx.of_int(0)
    zk = ctx.of_int(1)
    for k in range(1, p):
        zk = ctx.mul(zk, z)
        term = ctx.mul(zk, ctx.of_int(pow(k, -d, p)))
        total = ctx.add(total, term)
    return total


def scaled_polylog(d: int, u: PolyFp, v: PolyFp, m: int) -> PolyFp:
    """The polynomial v^m * L_d(u/v) = sum_{k=1}^{p-1} u^k v^{m-k} / k^d.

    Requires m >= p - 1 so every exponent of v is nonnegative.  The k-th
    summand is maintained incrementally as an exact polynomial quotient;
    with v = 1 this reduces to L_d composed with u.
    """
    p = u.p
    if m < p - 1:
        raise ValueError(
            f"negative exponent: scaled polylog needs m >= p-1, got m={m}")
    if v.degree <= 1:
        # every scaling in practice is by a linear binomial, where direct
        # expansion beats repeated squaring
        term = u * binomial_power(v.coeff(0), v.coeff(1), m - 1, p)
    else:
        term = u * v ** (m - 1)
    total = term.scale(pow(1, -d, p))
    for k in range(2, p):
        term = exact_divide(term * u, v)
        total = total + term.scale(pow(k, -d, p))
    return total


def _report(ident: str, p: int, d: int | None,
            lhs: PolyFp, rhs: PolyFp) -> CongruenceReport:
    params = "" if d is None else f"d={d}"
    return from_polys(ident, p, params, lhs, rhs)


def _check_q(p: int) -> CongruenceReport:
    """L_1(x) = (1 - x^p - (1-x)^p) / p, the division by p being exact
    over the integers because p divides C(p, k) for 0 < k < p."""
    coeffs = [0] + [(-1) ** (k - 1) * (comb(p, k) // p) for k in range(1, p)]
    return _report("Q", p, None, polylog(1, p), PolyFp(coeffs, p))


def _check_l1(p: int) -> CongruenceReport:
    """L_1(x) = L_1(1-x)."""
    l1 = polylog(1, p)
    return _report("L1", p, None, l1, swap_beta(l1))


def _check_inv(p: int) -> CongruenceReport:
    """L_1(x) = -x^p L_1(1/x); the right side is a scaled polylog."""
    l1 = polylog(1, p)
    mirrored = scaled_polylog(1, PolyFp.one(p), PolyFp.monomial(1, p), p)
    return _report("INV", p, None, l1, -mirrored)


def _check_l2(p: int) -> CongruenceReport:
    """L_1(x)^2 / 2 = -x^p L_2(x) - (1 - x^p) L_2(1-x)."""
    l1, l2 = polylog(1, p), polylog(2, p)
    xp = PolyFp.monomial(p, p)
    one_minus_xp = PolyFp.one(p) - xp
    lhs = (l1 * l1).scale(pow(2, -1, p))
    rhs = -(xp * l2) - one_minus_xp * swap_beta(l2)
    return _report("L2", p, None, lhs, rhs)


def _check_l3(p: int) -> CongruenceReport:
    """L_1(x)^3 / 6 = x^p L_3(x) + (1-x^p) L_3(1-x)
    + x^{2p} (1-x^p) L_3(1 - 1/x) + (2/3) x^p (1-x^p) L_3(-1),
    with x^{2p} L_3(1 - 1/x) realized as the scaled polylog of (x-1)/x
    at budget 2p and L_3(-1) a scalar.  Needs p > 3."""
    if p <= 3:
        raise ValueError("p > 3 required")
    l1, l3 = polylog(1, p), polylog(3, p)
    xp = PolyFp.monomial(p, p)
    one_minus_xp = PolyFp.one(p) - xp
    lhs = (l1 * l1 * l1).scale(pow(6, -1, p))
    scaled = scaled_polylog(3, PolyFp((-1, 1), p), PolyFp.monomial(1, p),
                            2 * p)
    l3_at_minus1 = l3.eval_at(p - 1)
    rhs = (xp * l3 + one_minus_xp * swap_beta(l3)
           + one_minus_xp * scaled
           + (xp * one_minus_xp).scale(2 * l3_at_minus1 * pow(3, -1, p)))
    return _report("L3", p, None, lhs, rhs)


def _check_mir(p: int, d: int) -> CongruenceReport:
    """L_1(x)^d = (-1)^{d-1} d! L_d(1-x) modulo (x^p, p) for 0 < d < p-1."""
    if not 0 < d < p - 1:
        raise ValueError("0 < d < p-1 required")
    lhs = (polylog(1, p) ** d).truncate(p)
    return _report("MIR", p, d, lhs, _mir_rhs(p, d))


def _mir_rhs(p: int, d: int) -> PolyFp:
    fact = _fact_tables(p)[0]
    sign = 1 if d % 2 == 1 else -1
    return swap_beta(polylog(d, p)).scale(sign * fact[d]).truncate(p)


def mir_reports(p: int) -> list[CongruenceReport]:
    """Reports for every admissible truncation degree 0 < d < p-1,
    sharing the incremental powers of L_1 across the sweep."""
    l1 = polylog(1, p)
    power = PolyFp.one(p)
    out = []
    for d in range(1, p - 1):
        power = (power * l1).truncate(p)
        out.append(_report("MIR", p, d, power, _mir_rhs(p, d)))
    return out


def _check_period(p: int, d: int) -> CongruenceReport:
    """L_{d + p - 1} = L_d: the coefficients 1/k^d only depend on
    d modulo p - 1."""
    if d < 0:
        raise ValueError("d >= 0 required")
    return _report("PERIOD", p, d, polylog(d + p - 1, p), polylog(d, p))


def _check_four_term(p: int) -> CongruenceReport:
    """The two-variable functional congruence

        L_1(x) + x^p L_1(y/x) + (1-x)^p L_1((1-y)/(1-x)) = L_1(y)

    as an identity in F_p[x, y].  The middle terms expand to the honest
    polynomials sum x^{p-k} y^k / k and sum (1-x)^{p-k} (1-y)^k / k.
    Capped at p <= 100: the grids grow quadratically with p."""
    if p > FOUR_TERM_MAX_P:
        raise ValueError(
            f"four-term check supports p <= {FOUR_TERM_MAX_P}, got {p}")
    one = PolyFp.one(p)
    l1 = polylog(1, p)
    inv = [0] + [pow(k, -1, p) for k in range(1, p)]
    t1 = BiPolyFp.outer(l1, one)
    t3 = BiPolyFp.from_terms(((p - k, k, inv[k]) for k in range(1, p)), p)
    t4 = BiPolyFp.zero(p)
    pow_1mx = {}
    pow_1my = {}
    for k in range(1, p):
        pow_1mx[p - k] = _one_minus_t_power(p - k, p)
        pow_1my[k] = _one_minus_t_power(k, p)
    for k in range(1, p):
        t4 = t4 + BiPolyFp.outer(pow_1mx[p - k],
                                 pow_1my[k].scale(inv[k]))
    lhs = t1 + t3 + t4
    rhs = BiPolyFp.outer(one, l1)
    return from_bipolys("FOUR_TERM", p, "", lhs, rhs)


def _one_minus_t_power(n: int, p: int) -> PolyFp:
    """(1 - t)^n over F_p via binomial expansion."""
    return PolyFp([(-1) ** k * comb(n, k) for k in range(n + 1)], p)


def check_polylog_identity(ident: str, p: int,
                           d: int | None = None) -> CongruenceReport:
    """Verify one functional congruence of the finite polylogarithms.

    ident is one of Q, L1, INV, L2, L3, MIR, PERIOD, FOUR_TERM; MIR and
    PERIOD take the degree parameter d.  Returns a report whose witness
    is the lexicographically first mismatching monomial on failure.
    """
    if ident in ("MIR", "PERIOD"):
        if d is None:
            raise ValueError(f"{ident} needs the degree parameter d")
    elif d is not None:
        raise ValueError(f"{ident} takes no degree parameter")
    if ident == "Q":
        return _check_q(p)
    if ident == "L1":
        return _check_l1(p)
    if ident == "INV":
        return _check_inv(p)
    if ident == "L2":
        return _check_l2(p)
    if ident == "L3":
        return _check_l3(p)
    if ident == "MIR":
        return _check_mir(p, d)
    if ident == "PERIOD":
        return _check_period(p, d)
    if ident == "FOUR_TERM":
        return _check_four_term(p)
    raise ValueError(f"unknown polylog identity {ident!r}")
