"""Batch runner: executes the verification suites and emits one record
per checked statement.

Output goes to stdout as a fixed-width text table or JSON lines; a
one-line summary goes to stderr.  Records are sorted by (suite, id,
modulus, params) so reruns with the same configuration are byte
identical regardless of parallelism.  Exit codes: 0 all checks pass,
1 at least one failure, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .congruences import P_MIN, PRIME_POWER_OK, SHIFTED, TheoremId, verify
from .finpolylog import (FOUR_TERM_MAX_P, POLYLOG_IDENTITIES,
                         check_polylog_identity, mir_reports)
from .numeric import (NUMERIC_IDENTITIES, specialization_reports,
                      verify_numeric)
from .primes import prime_power_base, primes_in
from .ratseries import (MAX_ORDER, SERIES_IDENTITIES,
                        integration_parts_reports, series_reports)
from .reports import CongruenceReport
from .transforms import (run_euler_check, run_involution_check,
                         run_modular_check)

ALL_SUITES = ("series", "identities", "polynomial", "numeric", "transforms")

MODULAR_PRIMES = (5, 7, 11, 13, 17)

# shifts enumerated when the shift range would otherwise be large
SPARSE_SHIFTS = (0, 1, 2, 3, 7)
FULL_SHIFT_LIMIT = 49
FULL_SHIFT_LIMIT_NUMERIC = 2500

KNOWN_IDS = tuple(sorted(
    {t.value for t in TheoremId}
    | set(NUMERIC_IDENTITIES)
    | set(POLYLOG_IDENTITIES)
    | set(SERIES_IDENTITIES)
    | {"IBP_LI2", "IBP_LI1SQ", "INVOLUTION", "EULER", "MODULAR_TRANSFORM"}))


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...] = ALL_SUITES
    prime_lo: int = 3
    prime_hi: int = 50
    prime_powers: tuple[int, ...] = (9, 25, 27, 49)
    order: int = 40
    fmt: str = "text"
    jobs: int = 1
    theorem: str | None = None
    shift: int | None = None


# -- work generation --------------------------------------------------------

def _series_items(config: RunConfig):
    yield "series", lambda: series_reports(config.order)
    yield "series", lambda: integration_parts_reports(config.order)


def _identity_items(config: RunConfig):
    def single(ident, p, d=None):
        return lambda: [check_polylog_identity(ident, p, d)]

    for p in primes_in(config.prime_lo, config.prime_hi + 1):
        for ident in ("Q", "L1", "INV"):
            yield "identities", single(ident, p)
        if p > 3:
            yield "identities", single("L2", p)
            yield "identities", single("L3", p)
        for d in range(4):
            yield "identities", single("PERIOD", p, d)
        yield "identities", (lambda pp: lambda: mir_reports(pp))(p)
        if p <= FOUR_TERM_MAX_P:
            yield "identities", single("FOUR_TERM", p)


def _polynomial_moduli(config: RunConfig) -> list[tuple[int, int]]:
    moduli = {q for q in primes_in(config.prime_lo, config.prime_hi + 1)}
    moduli.update(config.prime_powers)
    out = []
    for q in sorted(moduli):
        p, _ = prime_power_base(q)
        out.append((q, p))
    return out


def _shift_range(config: RunConfig, q: int, limit: int):
    if config.shift is not None:
        return [config.shift] if config.shift < q else []
    if q <= limit:
        return range(q)
    return [s for s in SPARSE_SHIFTS if s < q]


def _polynomial_items(config: RunConfig):
    def single(tid, q, p, e):
        return lambda: [verify(tid, q, p, e)]

    for q, p in _polynomial_moduli(config):
        for tid in TheoremId:
            if p < P_MIN[tid]:
                continue
            if tid not in PRIME_POWER_OK and q != p:
                continue
            if tid in SHIFTED:
                shifts = _shift_range(config, q, FULL_SHIFT_LIMIT)
            else:
                shifts = [0] if config.shift is None else []
            for e in shifts:
                yield "polynomial", single(tid, q, p, e)


def _numeric_items(config: RunConfig):
    def single(ident, q, d=None):
        return lambda: [verify_numeric(ident, q, d)]

    for p in primes_in(config.prime_lo, config.prime_hi + 1):
        for ident in ("SUM_CB", "SUM_CAT"):
            yield "numeric", single(ident, p)
            yield "numeric", single(ident, p * p)
        for q in (p, p * p):
            shifts = _shift_range(config, q, FULL_SHIFT_LIMIT_NUMERIC)
            for d in shifts:
                yield "numeric", single("SHIFT_D", q, d)
        yield "numeric", single("TRI_1", p)
        yield "numeric", single("TRI_ALT", p)
        yield "numeric", single("L1_NEG1", p)
        if p > 3:
            for ident in ("NUM1", "NUM2", "NUM3"):
                yield "numeric", single(ident, p)
        if p > 5:
            yield "numeric", single("NUM4", p)
        shifts = (0, 1, 2) if config.shift is None else (config.shift,)
        yield "numeric", (lambda pp, ss: lambda: specialization_reports(
            pp, ss))(p, shifts)


def _transform_items(config: RunConfig):
    yield "transforms", lambda: [run_involution_check()]
    yield "transforms", lambda: [run_euler_check()]
    for p in MODULAR_PRIMES:
        yield "transforms", (lambda pp: lambda: [run_modular_check(pp)])(p)


SUITE_BUILDERS = {
    "series": _series_items,
    "identities": _identity_items,
    "polynomial": _polynomial_items,
    "numeric": _numeric_items,
    "transforms": _transform_items,
}


# -- execution and emission -------------------------------------------------

def _params_key(params: str):
    key = []
    for token in params.split():
        name, _, value = token.partition("=")
        key.append((name, int(value) if value.lstrip("-").isdigit() else 0,
                    value))
    return tuple(key)


def _sort_key(row: tuple[str, CongruenceReport]):
    suite, rep = row
    return (suite, rep.theorem, rep.modulus, _params_key(rep.params))


def run(config: RunConfig) -> list[tuple[str, CongruenceReport]]:
    """Execute the selected suites and return sorted (suite, report) rows."""
    items = []
    for suite in config.suites:
        items.extend(SUITE_BUILDERS[suite](config))
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            buckets = list(pool.map(lambda it: it[1](), items))
    else:
        buckets = [thunk() for _, thunk in items]
    rows = []
    for (suite, _), reports in zip(items, buckets):
        rows.extend((suite, rep) for rep in reports)
    if config.theorem is not None:
        rows = [r for r in rows if r[1].theorem == config.theorem]
    rows.sort(key=_sort_key)
    return rows


def _record(suite: str, rep: CongruenceReport) -> dict:
    rec = {
        "suite": suite,
        "id": rep.theorem,
        "modulus": rep.modulus,
        "params": rep.params,
        "status": rep.status,
        "witness": rep.witness,
        "lhs_digest": rep.lhs_digest,
        "rhs_digest": rep.rhs_digest,
    }
    if rep.lhs or rep.rhs:
        rec["lhs"] = rep.lhs
        rec["rhs"] = rep.rhs
    return rec


def format_json(rows) -> str:
    return "".join(json.dumps(_record(suite, rep)) + "\n"
                   for suite, rep in rows)


TEXT_COLUMNS = ("suite", "id", "modulus", "params", "status", "witness",
                "lhs_digest", "rhs_digest")


def format_text(rows) -> str:
    table = [TEXT_COLUMNS]
    for suite, rep in rows:
        rec = _record(suite, rep)
        table.append(tuple(str(rec[c]) for c in TEXT_COLUMNS))
    widths = [max(len(row[i]) for row in table)
              for i in range(len(TEXT_COLUMNS))]
    lines = []
    for row in table:
        lines.append("  ".join(cell.ljust(w)
                               for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# -- argument handling ------------------------------------------------------

def _parse_primes(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ValueError(f"expected lo..hi, got {text!r}")
    return int(lo), int(hi)


def _parse_prime_powers(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    return tuple(int(tok) for tok in text.split(","))


def _read_config_file(path: str) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {line!r}")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fincong",
        description="verify truncated congruences for central binomial "
                    "sums, finite polylogarithms, and series transforms")
    parser.add_argument("--suites", help="comma-separated subset of: "
                        + ",".join(ALL_SUITES))
    parser.add_argument("--primes", help="prime range lo..hi (default 3..50)")
    parser.add_argument("--prime-powers", dest="prime_powers",
                        help="comma-separated moduli (default 9,25,27,49)")
    parser.add_argument("--order", type=int, help="series truncation order "
                        f"(8..{MAX_ORDER}, default 40)")
    parser.add_argument("--format", dest="fmt", choices=("text", "json"),
                        help="output format (default text)")
    parser.add_argument("--jobs", type=int, help="worker count (default 1)")
    parser.add_argument("--theorem", help="only emit records for this id")
    parser.add_argument("--shift", type=int,
                        help="only check this shift value")
    parser.add_argument("--config", help="file of key=value lines; "
                        "command-line flags override it")
    return parser


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)

    merged: dict[str, str] = {}
    if args.config is not None:
        try:
            merged.update(_read_config_file(args.config))
        except (OSError, ValueError) as exc:
            parser.error(f"bad config file: {exc}")
    for key in ("suites", "primes", "prime_powers", "order", "fmt", "jobs",
                "theorem", "shift"):
        value = getattr(args, key)
        if value is not None:
            merged[key] = str(value)
    if "format" in merged:
        merged["fmt"] = merged.pop("format")

    defaults = RunConfig()
    try:
        suites = tuple(merged["suites"].split(",")) if "suites" in merged \
            else defaults.suites
        lo, hi = _parse_primes(merged["primes"]) if "primes" in merged \
            else (defaults.prime_lo, defaults.prime_hi)
        powers = _parse_prime_powers(merged["prime_powers"]) \
            if "prime_powers" in merged else defaults.prime_powers
        config = RunConfig(
            suites=suites,
            prime_lo=lo,
            prime_hi=hi,
            prime_powers=powers,
            order=int(merged.get("order", defaults.order)),
            fmt=merged.get("fmt", defaults.fmt),
            jobs=int(merged.get("jobs", defaults.jobs)),
            theorem=merged.get("theorem"),
            shift=int(merged["shift"]) if "shift" in merged else None,
        )
    except ValueError as exc:
        parser.error(str(exc))

    for suite in config.suites:
        if suite not in ALL_SUITES:
            parser.error(f"unknown suite: {suite}")
    if config.prime_lo < 3 or config.prime_lo > config.prime_hi:
        parser.error("prime range must satisfy 3 <= lo <= hi")
    if not 8 <= config.order <= MAX_ORDER:
        parser.error(f"order must be in 8..{MAX_ORDER}")
    if config.jobs < 1:
        parser.error("jobs must be at least 1")
    if config.fmt not in ("text", "json"):
        parser.error(f"unknown format: {config.fmt}")
    for q in config.prime_powers:
        pp = prime_power_base(q)
        if pp is None or pp[0] == 2:
            parser.error(f"not an odd prime power: {q}")
    if config.theorem is not None and config.theorem not in KNOWN_IDS:
        parser.error(f"unknown theorem id: {config.theorem}")
    if config.shift is not None and config.shift < 0:
        parser.error("shift must be nonnegative")
    return config


def main(argv=None) -> int:
    config = parse_config(argv)
    try:
        rows = run(config)
    except Exception as exc:  # noqa: BLE001 - diagnostic boundary
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3
    emit = format_json if config.fmt == "json" else format_text
    sys.stdout.write(emit(rows))
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for _, rep in rows:
        counts[rep.status] += 1
    print(f"{len(rows)} checks: {counts['pass']} pass, "
          f"{counts['fail']} fail, {counts['skip']} skip", file=sys.stderr)
    return 1 if counts["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
