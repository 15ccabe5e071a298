"""Truncated power series with exact rational coefficients.

This is the characteristic-zero oracle: every closed form for a binomial
or Catalan generating series is expanded here coefficientwise with exact
Fraction arithmetic and compared term by term.  Square roots never appear;
closed forms are normalized to polynomial relations in the series beta,
the Catalan generating series, which satisfies beta*(1-beta) = x.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .reports import CongruenceReport, make_report

MAX_ORDER = 200

SERIES_IDENTITIES = ("CENTRAL_GF", "CATALAN_GF", "SHIFTED_GF", "B4", "B1",
                     "M1", "B5", "B3", "B2", "S2", "S3", "S4")

SHIFTED_GF_MAX_E = 6


class RatSeries:
    """A power series known modulo x^order, with exact coefficients."""

    __slots__ = ("order", "c")

    def __init__(self, coeffs, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        c = [Fraction(v) for v in coeffs[:order]]
        c += [Fraction(0)] * (order - len(c))
        self.order = order
        self.c = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "RatSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "RatSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "RatSeries":
        return cls([0] * k + [coeff], order)

    def coeff(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < self.order else Fraction(0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatSeries) and self.order == other.order
                and self.c == other.c)

    def __hash__(self):
        return hash((self.order, self.c))

    def truncate(self, n: int) -> "RatSeries":
        return RatSeries(self.c, min(n, self.order))

    def __add__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        return RatSeries([self.c[k] + other.c[k] for k in range(n)], n)

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        return RatSeries([self.c[k] - other.c[k] for k in range(n)], n)

    def __neg__(self) -> "RatSeries":
        return RatSeries([-v for v in self.c], self.order)

    def scale(self, s) -> "RatSeries":
        s = Fraction(s)
        return RatSeries([s * v for v in self.c], self.order)

    def __mul__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        for i, u in enumerate(self.c[:n]):
            if u:
                for j in range(n - i):
                    v = other.c[j]
                    if v:
                        out[i + j] += u * v
        return RatSeries(out, n)

    def __pow__(self, n: int) -> "RatSeries":
        if n < 0:
            raise ValueError("negative series power; use recip")
        r = RatSeries.one(self.order)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def recip(self) -> "RatSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        if not self.c[0]:
            raise ValueError("series has no inverse: zero constant term")
        inv0 = 1 / self.c[0]
        out = [inv0] + [Fraction(0)] * (self.order - 1)
        for i in range(1, self.order):
            s = Fraction(0)
            for j in range(1, i + 1):
                if self.c[j]:
                    s += self.c[j] * out[i - j]
            out[i] = -inv0 * s
        return RatSeries(out, self.order)

    def compose(self, g: "RatSeries") -> "RatSeries":
        """self(g(x)); g must have zero constant term."""
        if g.c[0]:
            raise ValueError("composition needs zero constant term")
        n = min(self.order, g.order)
        r = RatSeries.zero(n)
        for v in reversed(self.c[:n]):
            r = r * g
            if v:
                r = r + RatSeries((v,), n)
        return r

    def int_(self) -> "RatSeries":
        """Term-by-term integral with zero constant; a series known
        modulo x^n determines its integral modulo x^(n+1)."""
        out = [Fraction(0)] + [v / (k + 1) for k, v in enumerate(self.c)]
        return RatSeries(out, self.order + 1)

    def dx(self) -> "RatSeries":
        """Term-by-term derivative, known modulo x^(n-1)."""
        if self.order == 1:
            raise ValueError("derivative of an order-1 series is unknown")
        return RatSeries([k * v for k, v in enumerate(self.c)][1:],
                         self.order - 1)

    def encode(self) -> str:
        return f"{self.order}|" + ",".join(str(v) for v in self.c)

    def __repr__(self):
        shown = ", ".join(str(v) for v in self.c[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"RatSeries([{shown}{tail}], order={self.order})"


def li(d: int, order: int) -> RatSeries:
    """The polylogarithm series sum_{k>=1} x^k / k^d."""
    return RatSeries([0] + [Fraction(1, k ** d) if d >= 0
                            else Fraction(k ** -d)
                            for k in range(1, order)], order)


def series_beta(order: int) -> RatSeries:
    """The Catalan generating series beta = sum C_k x^{k+1}, the root with
    beta(0) = 0 of beta*(1-beta) = x."""
    if order < 1:
        raise ValueError("order must be positive")
    return RatSeries([0] + [Fraction(comb(2 * k, k), k + 1)
                            for k in range(order - 1)], order)


def _harmonics(limit: int, power: int) -> list[Fraction]:
    """[H_0, ..., H_{limit-1}] with H_k = sum_{j<=k} 1/j^power."""
    out = [Fraction(0)]
    for k in range(1, limit):
        out.append(out[-1] + Fraction(1, k ** power))
    return out


def _guard_order(order: int) -> None:
    if order > MAX_ORDER:
        raise ValueError(f"order capped at {MAX_ORDER}")
    if order < 1:
        raise ValueError("order must be positive")


def _registry(order: int, only: str | None = None):
    """Yield (ident, params, lhs, rhs) rows, one per printed form.

    Identities stated with two equivalent closed forms contribute one row
    per form; the forms are never collapsed into a single comparison.
    """
    _guard_order(order)
    n = order
    rows = []

    def want(ident):
        return only is None or only == ident

    x = RatSeries.monomial(1, n)
    one = RatSeries.one(n)
    b = series_beta(n)
    one_minus_2b = one - b.scale(2)
    h1 = _harmonics(n, 1)
    h2 = _harmonics(n, 2)
    central = RatSeries([comb(2 * k, k) for k in range(n)], n)
    catalan_terms = [Fraction(comb(2 * k, k), k + 1) for k in range(n)]

    if want("CENTRAL_GF"):
        rows.append(("CENTRAL_GF", "form=1", central, one_minus_2b.recip()))
        rows.append(("CENTRAL_GF", "form=2", central.truncate(n - 1), b.dx()))
    if want("CATALAN_GF"):
        rows.append(("CATALAN_GF", "form=1", one_minus_2b * one_minus_2b,
                     one - x.scale(4)))
        rows.append(("CATALAN_GF", "form=2", b * (one - b), x))
    if want("SHIFTED_GF"):
        for e in range(SHIFTED_GF_MAX_E + 1):
            lhs = RatSeries([comb(2 * k + e, k) for k in range(n)], n)
            rhs = (one_minus_2b * (one - b) ** e).recip()
            rows.append(("SHIFTED_GF", f"e={e}", lhs, rhs))

    if only in ("CENTRAL_GF", "CATALAN_GF", "SHIFTED_GF"):
        return rows

    li1b = li(1, n).compose(b)
    li2b = li(2, n).compose(b)
    recip_1m2b = one_minus_2b.recip()
    # the reflected argument beta/(2*beta - 1), a series with zero constant
    u = b * (b.scale(2) - one).recip()
    li1u = li(1, n).compose(u)

    if want("B4"):
        lhs = RatSeries([0] + [Fraction(comb(2 * k, k), k)
                               for k in range(1, n)], n)
        rows.append(("B4", "", lhs, li1b.scale(2)))
    if want("B1"):
        lhs = RatSeries([comb(2 * k, k) * h1[k] for k in range(n)], n)
        rows.append(("B1", "form=1", lhs, li1u.scale(-2) * recip_1m2b))
        li1_2b = li(1, n).compose(b.scale(2))
        rows.append(("B1", "form=2", lhs,
                     (li1_2b - li1b).scale(2) * recip_1m2b))
    if want("M1"):
        lhs = RatSeries([0, 0] + [catalan_terms[k] / k
                                  for k in range(1, n - 1)], n)
        rows.append(("M1", "", lhs, x * li1b.scale(2) - b + x))
    if want("B5"):
        lhs = RatSeries([0] + [catalan_terms[k] * h1[k]
                               for k in range(n - 1)], n)
        rows.append(("B5", "form=1", lhs, li1b + one_minus_2b * li1u))
        li1_2b = li(1, n).compose(b.scale(2))
        rows.append(("B5", "form=2", lhs,
                     (-one_minus_2b) * li1_2b + (one - b).scale(2) * li1b))
    if want("B3"):
        lhs = RatSeries([0] + [Fraction(comb(2 * k, k), k * k)
                               for k in range(1, n)], n)
        rows.append(("B3", "", lhs, li2b.scale(2) - li1b * li1b))
    if want("B2"):
        lhs = RatSeries([0] + [comb(2 * k, k) * h1[k] / k
                               for k in range(1, n)], n)
        li2u = li(2, n).compose(u)
        rows.append(("B2", "", lhs, li2u.scale(-2) - li1u * li1u))
    if want("S2"):
        lhs = RatSeries([comb(2 * k, k) * h2[k] for k in range(n)], n)
        rows.append(("S2", "", lhs,
                     (li2b.scale(2) + li1b * li1b) * recip_1m2b))
    if want("S3"):
        lhs = RatSeries([0] + [catalan_terms[k] * h2[k]
                               for k in range(n - 1)], n)
        rows.append(("S3", "", lhs,
                     b.scale(2) * li2b - (one - b) * li1b * li1b))
    if want("S4"):
        lhs = RatSeries([0] + [comb(2 * k, k)
                               * (h2[k] / k + Fraction(1, k ** 3))
                               for k in range(1, n)], n)
        li3b = li(3, n).compose(b)
        rows.append(("S4", "", lhs,
                     li3b.scale(4) + (li1b ** 3).scale(Fraction(2, 3))))
    return rows


def verify_series_identity(ident: str, order: int) -> bool:
    """Check one registry identity coefficientwise to the given order.

    Identities printed in two equivalent closed forms are checked against
    both; the result is the conjunction.
    """
    if ident not in SERIES_IDENTITIES:
        raise ValueError(f"unknown series identity {ident!r}")
    rows = _registry(order, only=ident)
    return all(lhs == rhs for _, _, lhs, rhs in rows)


def _series_report(ident: str, params: str, lhs: RatSeries,
                   rhs: RatSeries) -> CongruenceReport:
    d = next((k for k in range(min(lhs.order, rhs.order))
              if lhs.c[k] != rhs.c[k]), None)
    witness = "" if d is None else f"x^{d}: {lhs.c[d]} != {rhs.c[d]}"
    return make_report(ident, lhs.order, params, lhs.encode(), rhs.encode(),
                       witness)


def series_reports(order: int) -> list[CongruenceReport]:
    """One report per registry identity form at the given order."""
    return [_series_report(ident, params, lhs, rhs)
            for ident, params, lhs, rhs in _registry(order)]


def integration_parts_reports(order: int = 40) -> list[CongruenceReport]:
    """The two integration-by-parts facts behind the level-two closed
    forms, as series identities:

        int L2(beta) dbeta = beta*L2(beta) + (1-beta)*L1(beta) - beta
        int L1(beta)^2 dbeta = (beta-1)*L1(beta)^2
                               + 2*(beta-1)*L1(beta) + 2*beta

    with d(beta) = dx / (1 - 2*beta), all integration constants zero.
    """
    _guard_order(order)
    n = order
    one = RatSeries.one(n)
    b = series_beta(n)
    recip_1m2b = (one - b.scale(2)).recip()
    li1b = li(1, n).compose(b)
    li2b = li(2, n).compose(b)
    lhs1 = (li2b * recip_1m2b).int_().truncate(n)
    rhs1 = b * li2b + (one - b) * li1b - b
    lhs2 = (li1b * li1b * recip_1m2b).int_().truncate(n)
    rhs2 = ((b - one) * li1b * li1b + (b - one).scale(2) * li1b
            + b.scale(2))
    return [_series_report("IBP_LI2", "", lhs1, rhs1),
            _series_report("IBP_LI1SQ", "", lhs2, rhs2)]
