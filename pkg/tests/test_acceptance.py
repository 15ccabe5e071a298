"""Acceptance sweep: the seven release criteria, one test and one printed
pass/fail line each.  Scopes and tolerances are exact; nothing is sampled
down from the stated ranges."""

import time

from conftest import ACCEPTANCE_LINES

from fincong.congruences import (P_MIN, PRIME_POWER_OK, SHIFTED, TheoremId,
                                 build_sides, build_sides_x,
                                 lhs_coefficients, verify)
from fincong.finpolylog import check_polylog_identity, mir_reports
from fincong.modarith import Fp, Fp2
from fincong.numeric import specialization_reports, verify_numeric
from fincong.polyfp import PolyFp
from fincong.primes import prime_power_base, primes_in
from fincong.ratseries import (SERIES_IDENTITIES, integration_parts_reports,
                               series_reports)
from fincong.transforms import (run_euler_check, run_involution_check,
                                run_modular_check)

PRIME_POWER_MODULI = (9, 25, 27, 49, 121, 125)
SPARSE_SHIFTS = (0, 1, 2, 3, 7)


def _announce(n: int, label: str, ok: bool, extra: str = "") -> None:
    tail = f" [{extra}]" if extra else ""
    ACCEPTANCE_LINES.append(
        f"criterion {n} {label}: {'PASS' if ok else 'FAIL'}{tail}")


def test_criterion_1_polynomial_registry_sweep():
    t0 = time.monotonic()
    failures = []
    checked = 0
    for theorem in TheoremId:
        moduli = [(p, p) for p in primes_in(P_MIN[theorem], 200)]
        if theorem in PRIME_POWER_OK:
            moduli += [(q, prime_power_base(q)[0])
                       for q in PRIME_POWER_MODULI]
        for q, p in moduli:
            if theorem in SHIFTED:
                shifts = range(q) if q <= 49 else SPARSE_SHIFTS
            else:
                shifts = (0,)
            for e in shifts:
                rep = verify(theorem, q, p, e)
                checked += 1
                if rep.status != "pass":
                    failures.append((theorem.value, q, e, rep.witness))
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 120.0
    _announce(1, "polynomial registry sweep", ok,
              f"{checked} checks, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 120.0, f"sweep took {elapsed:.1f}s, budget is 120s"


def test_criterion_2_spot_values():
    failures = []

    def expect(cond, label):
        if not cond:
            failures.append(label)

    lhs, rhs = build_sides_x(TheoremId.CENTRAL_POL, 3, 3)
    expect(lhs == rhs == PolyFp((1, 2), 3), "central sum at q=3")
    lhs, rhs = build_sides_x(TheoremId.CATALAN_POL, 3, 3)
    expect(lhs == rhs == PolyFp((0, 1, 1, 2), 3), "catalan sum at q=3")
    expect(lhs_coefficients(TheoremId.SHIFTED_A, 5, 5, 1) == [1, 3],
           "shifted x-chart at q=5 e=1")
    lhs, rhs = build_sides(TheoremId.SHIFTED_A, 5, 5, 1)
    expect(lhs == rhs == PolyFp((1, 3, 2), 5),
           "shifted beta-chart at q=5 e=1")
    lhs, rhs = build_sides(TheoremId.N1, 5, 5)
    expect(lhs == rhs == PolyFp((0, 2, 1, 4, 3), 5),
           "harmonic quotient at p=5")
    ok = not failures
    _announce(2, "pinned spot values", ok)
    assert not failures, failures


def test_criterion_3_numeric_registry():
    failures = []
    checked = 0

    def check(ident, q, shift=None, lhs=None):
        nonlocal checked
        rep = verify_numeric(ident, q, shift)
        checked += 1
        if rep.status != "pass":
            failures.append((ident, q, shift, rep.witness))
        if lhs is not None and rep.lhs != lhs:
            failures.append((ident, q, "lhs", rep.lhs, "expected", lhs))

    for p in primes_in(3, 100):
        for q in (p, p * p):
            check("SUM_CB", q)
            check("SUM_CAT", q)
    check("SUM_CB", 5, lhs="4")
    check("SUM_CAT", 5, lhs="3")
    shift_moduli = sorted([p for p in primes_in(3, 50)]
                          + [q for q in PRIME_POWER_MODULI if q <= 50])
    for q in shift_moduli:
        for d in range(q):
            check("SHIFT_D", q, d)
    for p in primes_in(3, 200):
        check("TRI_1", p)
        check("TRI_ALT", p)
        if p > 3:
            check("NUM1", p)
            check("NUM2", p)
            check("NUM3", p)
        if p > 5:
            check("NUM4", p)
    check("TRI_1", 5, lhs="1")
    check("TRI_ALT", 5, lhs="0")
    check("NUM1", 7, lhs="2")
    check("NUM2", 7, lhs="5")
    check("NUM3", 7, lhs="1")
    ok = not failures
    _announce(3, "numeric registry sweep", ok, f"{checked} checks")
    assert not failures, failures[:5]


def test_criterion_4_polylog_identities():
    failures = []
    checked = 0

    def note(rep, p):
        nonlocal checked
        checked += 1
        if rep.status != "pass":
            failures.append((rep.theorem, p, rep.params, rep.witness))

    for p in primes_in(3, 100):
        for ident in ("Q", "L1", "INV"):
            note(check_polylog_identity(ident, p), p)
        if p > 3:
            note(check_polylog_identity("L2", p), p)
            note(check_polylog_identity("L3", p), p)
        for rep in mir_reports(p):
            note(rep, p)
        for d in range(4):
            note(check_polylog_identity("PERIOD", p, d), p)
    for p in primes_in(3, 47):
        note(check_polylog_identity("FOUR_TERM", p), p)
    ok = not failures
    _announce(4, "polylog identity sweep", ok, f"{checked} checks")
    assert not failures, failures[:5]


def test_criterion_5_series_registry():
    t0 = time.monotonic()
    failures = []
    reports = series_reports(60)
    if {r.theorem for r in reports} != set(SERIES_IDENTITIES):
        failures.append("registry coverage")
    failures += [(r.theorem, r.params, r.witness)
                 for r in reports if r.status != "pass"]
    failures += [(r.theorem, r.witness)
                 for r in integration_parts_reports(40)
                 if r.status != "pass"]
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 60.0
    _announce(5, "rational series registry", ok,
              f"{len(reports) + 2} checks, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 60.0


def test_criterion_6_transform_sweeps():
    failures = []
    rep = run_involution_check(count=1000, max_len=50)
    if rep.status != "pass":
        failures.append(("INVOLUTION", rep.witness))
    rep = run_euler_check(count=50, order=30)
    if rep.status != "pass":
        failures.append(("EULER", rep.witness))
    for p in (5, 7, 11, 13, 17):
        rep = run_modular_check(p, count=100)
        if rep.status != "pass":
            failures.append(("MODULAR_TRANSFORM", p, rep.witness))
    ok = not failures
    _announce(6, "transform sweeps", ok)
    assert not failures, failures


def test_criterion_7_cross_module_agreement():
    failures = []
    checked = 0
    extension_fields = 0
    for p in primes_in(3, 100):
        for rep in specialization_reports(p):
            checked += 1
            if rep.status == "fail":
                failures.append((rep.theorem, p, rep.params, rep.witness))
        if p > 3:
            from fincong.numeric import special_points
            if any(isinstance(pt.ctx, Fp2) for pt in special_points(p)):
                extension_fields += 1
    if not extension_fields:
        failures.append("no quadratic-extension points exercised")
    for p in primes_in(3, 200):
        rep = verify_numeric("L1_NEG1", p)
        checked += 1
        if rep.status != "pass":
            failures.append(("L1_NEG1", p, rep.witness))
    ok = not failures
    _announce(7, "cross-module agreement", ok, f"{checked} checks")
    assert not failures, failures[:5]
