"""Verification reports shared by every checking module.

A report captures one checked congruence or identity: what was compared,
over which modulus, whether the two sides agreed, and a witness for the
first disagreement when they did not.  Digests are short hashes of the
canonical encodings of the two sides, so pass holds exactly when the
witness is empty, exactly when the digests agree.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .polyfp import BiPolyFp, PolyFp

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


def digest(text: str) -> str:
    """Short stable digest of a canonical encoding."""
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of one verified statement.

    Invariant: status == "pass" iff witness is empty iff the digests are
    equal.  A skipped check carries its reason in the witness and unequal
    placeholder digests so the invariant still holds.
    """

    theorem: str
    modulus: int
    params: str
    status: str
    witness: str
    lhs_digest: str
    rhs_digest: str
    lhs: str = ""
    rhs: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def make_report(theorem: str, modulus: int, params: str,
                lhs_enc: str, rhs_enc: str, witness: str,
                lhs: str = "", rhs: str = "") -> CongruenceReport:
    """Build a report from canonical side encodings and a fail witness."""
    equal = lhs_enc == rhs_enc
    return CongruenceReport(
        theorem=theorem,
        modulus=modulus,
        params=params,
        status=PASS if equal else FAIL,
        witness="" if equal else witness,
        lhs_digest=digest(lhs_enc),
        rhs_digest=digest(rhs_enc),
        lhs=lhs,
        rhs=rhs,
    )


def from_polys(theorem: str, modulus: int, params: str,
               lhs: PolyFp, rhs: PolyFp) -> CongruenceReport:
    """Report comparing two univariate polynomials coefficientwise."""
    d = lhs.first_diff(rhs)
    witness = "" if d is None else f"x^{d[0]}: {d[1]} != {d[2]}"
    return make_report(theorem, modulus, params, lhs.encode(), rhs.encode(),
                       witness)


def from_bipolys(theorem: str, modulus: int, params: str,
                 lhs: BiPolyFp, rhs: BiPolyFp) -> CongruenceReport:
    """Report comparing two bivariate polynomials monomialwise."""
    d = lhs.first_diff(rhs)
    witness = "" if d is None else f"x^{d[0]}*y^{d[1]}: {d[2]} != {d[3]}"
    return make_report(theorem, modulus, params, lhs.encode(), rhs.encode(),
                       witness)


def from_values(theorem: str, modulus: int, params: str,
                lhs: str, rhs: str) -> CongruenceReport:
    """Report comparing two field elements by canonical encoding."""
    return make_report(theorem, modulus, params, lhs, rhs,
                       f"{lhs} != {rhs}", lhs=lhs, rhs=rhs)


def failure(theorem: str, modulus: int, params: str,
            reason: str) -> CongruenceReport:
    """Report for a check that failed before both sides existed, such as
    an inexact division while building a closed form."""
    return CongruenceReport(
        theorem=theorem,
        modulus=modulus,
        params=params,
        status=FAIL,
        witness=reason,
        lhs_digest=digest("error:" + reason),
        rhs_digest=digest(""),
    )


def skipped(theorem: str, modulus: int, params: str,
            reason: str) -> CongruenceReport:
    """Report for a check not applicable at these parameters."""
    return CongruenceReport(
        theorem=theorem,
        modulus=modulus,
        params=params,
        status=SKIP,
        witness=reason,
        lhs_digest=digest("skip:" + reason),
        rhs_digest=digest(""),
    )
