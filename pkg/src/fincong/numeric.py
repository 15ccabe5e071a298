"""Standalone numeric congruences and pointwise specializations.

Two kinds of checks live here.  The numeric registry verifies congruences
between plain residues: truncated binomial, Catalan, and trinomial sums
against quadratic-symbol closed forms, and the three-term sums whose
right-hand sides combine Bernoulli numbers with Fermat or Lucas
quotients.  The specializer evaluates each polynomial congruence at the
special-value table, where alpha and beta may live in F_p or F_p^2: the
left side as a direct termwise field sum, the right side as the closed
form at (alpha, beta).  That re-checks the same identities along a path
exercising field arithmetic instead of polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .congruences import (P_MIN, SHIFTED, X_NATIVE, TheoremId,
                          lhs_coefficients, shift_letter)
from .finpolylog import polylog_eval
from .modarith import (FieldCtx, Fp, golden_roots, legendre, rational_mod,
                       sixth_root)
from .primes import is_prime, prime_power_base
from .reports import CongruenceReport, from_values, skipped
from .sequences import (bernoulli_mod, binom_mod, catalans, central_binomials,
                        central_trinomials, fermat_quotient_2, lucas_quotient,
                        lucas_table)

NUMERIC_IDENTITIES = ("SUM_CB", "SUM_CAT", "SHIFT_D", "TRI_1", "TRI_ALT",
                      "NUM1", "NUM2", "NUM3", "NUM4", "L1_NEG1")

POINT_LABELS = ("X1_OMEGA6", "XNEG2", "XQUARTER", "XNEG1_PHI",
                "XPHI3_PLUS", "XPHI3_MINUS")

# Closed forms that divide by alpha - beta; they cannot be evaluated at a
# point where the two roots collide.
DENOMINATOR_IDS = frozenset({TheoremId.SHIFTED_A, TheoremId.SHIFTED_B,
                             TheoremId.SHIFTED_DFORM, TheoremId.SHIFTED_KW,
                             TheoremId.M3, TheoremId.CM3, TheoremId.C10,
                             TheoremId.T_EQ})


@dataclass(frozen=True, eq=False)
class SpecialPoint:
    """One row of the special-value table: x = alpha*beta, alpha + beta = 1,
    with the elements living in the field given by ctx."""

    label: str
    ctx: FieldCtx
    x: int | tuple[int, int]
    alpha: int | tuple[int, int]
    beta: int | tuple[int, int]


def _point(label: str, ctx: FieldCtx, x, alpha, beta) -> SpecialPoint:
    assert ctx.eq(ctx.add(alpha, beta), ctx.of_int(1))
    assert ctx.eq(ctx.mul(alpha, beta), x)
    return SpecialPoint(label, ctx, x, alpha, beta)


def special_points(p: int) -> list[SpecialPoint]:
    """The constructible special-value rows at the odd prime p.

    The sixth-root row needs p > 3 and the golden-ratio rows need p != 5;
    rows missing at p are reported by degenerate_labels instead.  Each
    row's field is the smallest one containing its alpha and beta.
    """
    if p < 3 or not is_prime(p):
        raise ValueError("an odd prime is required")
    base = Fp(p)
    points = []
    if p > 3:
        omega, ctx = sixth_root(p)
        points.append(_point("X1_OMEGA6", ctx, ctx.of_int(1), omega,
                             ctx.sub(ctx.of_int(1), omega)))
    points.append(_point("XNEG2", base, base.of_int(-2), base.of_int(2),
                         base.of_int(-1)))
    half = rational_mod(1, 2, p)
    points.append(_point("XQUARTER", base, rational_mod(1, 4, p), half, half))
    if p != 5:
        phi_plus, phi_minus, ctx = golden_roots(p)
        points.append(_point("XNEG1_PHI", ctx, ctx.of_int(-1),
                             phi_plus, phi_minus))
        points.append(_point("XPHI3_PLUS", ctx,
                             ctx.neg(ctx.pow(phi_plus, 3)),
                             ctx.mul(phi_plus, phi_plus), ctx.neg(phi_plus)))
        points.append(_point("XPHI3_MINUS", ctx,
                             ctx.neg(ctx.pow(phi_minus, 3)),
                             ctx.neg(phi_minus),
                             ctx.mul(phi_minus, phi_minus)))
    return points


def degenerate_labels(p: int) -> list[str]:
    """Table rows that do not exist at p: no primitive sixth root of unity
    at p = 3, and the golden-ratio roots collide at p = 5."""
    out = []
    if p == 3:
        out.append("X1_OMEGA6")
    if p == 5:
        out.extend(["XNEG1_PHI", "XPHI3_PLUS", "XPHI3_MINUS"])
    return out


def _closed_form(theorem: TheoremId, point: SpecialPoint, p: int, shift: int):
    ctx = point.ctx
    one = ctx.of_int(1)
    a, b, x = point.alpha, point.beta, point.x

    def lg(d, z):
        return polylog_eval(d, z, ctx)

    if theorem in X_NATIVE:
        om4x = ctx.sub(one, ctx.mul(ctx.of_int(4), x))
        if theorem is TheoremId.CENTRAL_POL:
            return ctx.pow(om4x, (p - 1) // 2)
        if theorem is TheoremId.CENTRAL_POL_K:
            return ctx.mul(ctx.mul(ctx.of_int(2), x),
                           ctx.pow(om4x, (p - 3) // 2))
        if theorem is TheoremId.CATALAN_POL:
            half = ctx.of_int(rational_mod(1, 2, p))
            head = ctx.mul(ctx.sub(one, ctx.pow(om4x, (p + 1) // 2)), half)
            return ctx.sub(head, ctx.pow(x, p))
        factor = ctx.mul(ctx.sub(one, ctx.mul(ctx.of_int(3), x)),
                         ctx.add(one, x))
        return ctx.pow(factor, (p - 1) // 2)

    amb = ctx.sub(a, b)
    bma = ctx.neg(amb)
    if theorem is TheoremId.SHIFTED_A:
        m = p - shift
        return ctx.mul(ctx.sub(ctx.pow(a, m), ctx.pow(b, m)), ctx.inv(amb))
    if theorem is TheoremId.SHIFTED_B:
        m = 2 * p - shift
        return ctx.mul(ctx.sub(ctx.pow(a, m), ctx.pow(b, m)), ctx.inv(amb))
    if theorem is TheoremId.SHIFTED_DFORM:
        m = 2 * p - 2 * shift
        return ctx.mul(ctx.sub(ctx.pow(a, m), ctx.pow(b, m)), ctx.inv(amb))
    if theorem is TheoremId.SHIFTED_KW:
        m = 2 * p - 2 * shift
        v = ctx.mul(ctx.sub(ctx.pow(a, m), ctx.pow(b, m)), ctx.inv(amb))
        w = ctx.add(ctx.pow(a, m), ctx.pow(b, m))
        num = ctx.add(ctx.mul(ctx.of_int(2), ctx.mul(x, v)),
                      ctx.mul(ctx.of_int(shift), w))
        return ctx.mul(num, ctx.inv(ctx.mul(amb, amb)))
    if theorem is TheoremId.N1:
        return ctx.add(lg(1, a), lg(1, b))
    if theorem is TheoremId.N2:
        return ctx.mul(ctx.of_int(2), ctx.add(lg(2, a), lg(2, b)))
    if theorem is TheoremId.N3:
        return ctx.mul(ctx.of_int(4), ctx.add(lg(3, a), lg(3, b)))
    if theorem is TheoremId.M3:
        u = ctx.mul(b, ctx.inv(bma))
        return ctx.mul(ctx.of_int(-2),
                       ctx.mul(ctx.pow(bma, p - 1), lg(1, u)))
    if theorem is TheoremId.CM3:
        u = ctx.mul(b, ctx.inv(bma))
        return ctx.add(lg(1, b), ctx.mul(ctx.pow(bma, p + 1), lg(1, u)))
    if theorem is TheoremId.C10:
        diff = ctx.sub(lg(2, a), lg(2, b))
        return ctx.mul(ctx.of_int(2), ctx.mul(diff, ctx.inv(bma)))
    if theorem is TheoremId.C11:
        return ctx.mul(ctx.of_int(2),
                       ctx.add(ctx.mul(a, lg(2, a)), ctx.mul(b, lg(2, b))))
    if theorem is TheoremId.T_EQ:
        diff = ctx.sub(lg(2, ctx.mul(a, ctx.inv(amb))),
                       lg(2, ctx.mul(b, ctx.inv(bma))))
        return ctx.mul(ctx.of_int(2), ctx.mul(ctx.pow(amb, p), diff))
    # the last two share the tail 2 x^p (L_3(-b/a) + L_3(-a/b)), which uses
    # 1 - 1/alpha = -beta/alpha
    tail = ctx.mul(ctx.mul(ctx.of_int(2), ctx.pow(x, p)),
                   ctx.add(lg(3, ctx.neg(ctx.mul(b, ctx.inv(a)))),
                           lg(3, ctx.neg(ctx.mul(a, ctx.inv(b))))))
    if theorem is TheoremId.C12:
        return ctx.neg(tail)
    return ctx.add(ctx.mul(ctx.of_int(4), ctx.add(lg(3, a), lg(3, b))), tail)


def specialize_polynomial(theorem: TheoremId, point: SpecialPoint, p: int,
                          shift: int = 0) -> CongruenceReport:
    """Evaluate one polynomial congruence at a special point.

    The left side is the truncated sum accumulated term by term in the
    point's field; the right side is the closed form at (alpha, beta).
    Points where a required denominator vanishes are skipped.
    """
    params = f"point={point.label}"
    if theorem in SHIFTED:
        params += f" {shift_letter(theorem)}={shift}"
    ctx = point.ctx
    if theorem in DENOMINATOR_IDS and ctx.eq(point.alpha, point.beta):
        return skipped(theorem.value, p, params, "degenerate point")
    coeffs = lhs_coefficients(theorem, p, p, shift)
    total = ctx.of_int(0)
    power = ctx.of_int(1)
    for c in coeffs:
        total = ctx.add(total, ctx.mul(ctx.of_int(c), power))
        power = ctx.mul(power, point.x)
    rhs = _closed_form(theorem, point, p, shift)
    return from_values(theorem.value, p, params, ctx.encode(total),
                       ctx.encode(rhs))


def specialization_reports(p: int, shifts=(0, 1, 2)) -> list[CongruenceReport]:
    """Every admissible polynomial congruence evaluated at every table row
    at p, with skip records for the rows that do not exist there."""
    points = special_points(p)
    missing = degenerate_labels(p)
    reports = []
    for theorem in TheoremId:
        if p < P_MIN[theorem]:
            continue
        steps = [s for s in shifts if 0 <= s < p] if theorem in SHIFTED \
            else [0]
        for point in points:
            for s in steps:
                reports.append(specialize_polynomial(theorem, point, p, s))
        for label in missing:
            reports.append(skipped(theorem.value, p, f"point={label}",
                                   "degenerate point"))
    return reports


def _require_prime(q: int, ident: str) -> None:
    if not is_prime(q):
        raise ValueError(f"{ident} is only stated at q = p prime")


def verify_numeric(ident: str, q: int,
                   shift: int | None = None) -> CongruenceReport:
    """Check one standalone numeric congruence at the odd prime power q."""
    pp = prime_power_base(q)
    if pp is None or pp[0] == 2:
        raise ValueError(f"q={q} is not an odd prime power")
    p = pp[0]
    if ident == "SHIFT_D":
        if shift is None or not 0 <= shift < q:
            raise ValueError("SHIFT_D requires 0 <= d < q")
        lhs = sum(binom_mod(2 * k, k + shift, p) for k in range(q)) % p
        rhs = legendre(q - shift, 3) % p
        return from_values(ident, q, f"d={shift}", str(lhs), str(rhs))
    if shift is not None:
        raise ValueError(f"{ident} takes no shift")
    if ident == "SUM_CB":
        lhs = sum(central_binomials(q, p)) % p
        rhs = legendre(q, 3) % p
        return from_values(ident, q, "", str(lhs), str(rhs))
    if ident == "SUM_CAT":
        lhs = sum(catalans(q, p)) % p
        rhs = rational_mod(3 * legendre(q, 3) - 1, 2, p)
        return from_values(ident, q, "", str(lhs), str(rhs))

    _require_prime(q, ident)
    if ident == "TRI_1":
        lhs = sum(central_trinomials(p, p)) % p
        rhs = (-1) ** ((p - 1) // 2) % p
    elif ident == "TRI_ALT":
        lhs = sum(c if k % 2 == 0 else -c
                  for k, c in enumerate(central_trinomials(p, p))) % p
        rhs = 0
    elif ident == "L1_NEG1":
        lhs = polylog_eval(1, p - 1, Fp(p))
        rhs = -2 * fermat_quotient_2(p) % p
    elif ident in ("NUM1", "NUM2", "NUM3", "NUM4"):
        floor = 5 if ident == "NUM4" else 3
        if p <= floor:
            raise ValueError(f"{ident} requires p > {floor}")
        cb = central_binomials(p, p)
        inv3 = [0] + [pow(k, -3, p) for k in range(1, p)]
        bern = bernoulli_mod(p - 3, p)
        if ident == "NUM1":
            lhs = sum(cb[k] * inv3[k] for k in range(1, p)) % p
            rhs = rational_mod(2 * bern, 3, p)
        elif ident == "NUM2":
            q2 = fermat_quotient_2(p)
            lhs = sum(cb[k] * pow(-2, k, p) * inv3[k]
                      for k in range(1, p)) % p
            rhs = rational_mod(-(8 * q2 ** 3 + 31 * bern), 12, p)
        elif ident == "NUM3":
            q2 = fermat_quotient_2(p)
            quarter = rational_mod(1, 4, p)
            lhs = sum(cb[k] * pow(quarter, k, p) * inv3[k]
                      for k in range(1, p)) % p
            rhs = rational_mod(4 * q2 ** 3 + 2 * bern, 3, p)
        else:
            lucas = lucas_table(3 * p - 2, p)
            ql = lucas_quotient(p)
            lhs = sum((-1) ** k * cb[k] * (lucas[3 * k] - 1) * inv3[k]
                      for k in range(1, p)) % p
            rhs = rational_mod(-3 * (ql ** 3 + 2 * bern), 5, p)
    else:
        raise ValueError(f"unknown numeric identity: {ident}")
    return from_values(ident, q, "", str(lhs), str(rhs))
