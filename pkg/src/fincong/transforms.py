"""The binomial transform and its Euler-type generating function laws.

The sequence transform b_n = sum_k (-1)^k C(n,k) a_k is an involution.
At the generating function level it satisfies

    sum_k C(y,k) a_k x^k  =  (1+x)^y sum_k C(y,k) b_k (-x/(1+x))^k

as an identity in (Q[y])[[x]] with y an indeterminate, checked here with
exact rational polynomial coefficients in y.  Specializing y and truncating
modulo a prime p gives the polynomial congruence

    sum_{k<p} C(2k,k) a_k x^k
        = sum_{k<=(p-1)/2} C(2k,k) b_k (-x)^k (1-4x)^{(p-1)/2-k}  (mod p)

since C(2k,k) = 0 mod p for p < 2k < 2p kills the upper half of the sum.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from .polyfp import PolyFp
from .reports import CongruenceReport, from_polys, make_report
from .sequences import binom_mod, binomial_power

RatSeq = list


def binomial_transform(a: RatSeq) -> RatSeq:
    """b_n = sum_{k<=n} (-1)^k C(n,k) a_k; applying it twice returns a."""
    return [sum((-1) ** k * comb(n, k) * a[k] for k in range(n + 1))
            for n in range(len(a))]


# -- the identity with indeterminate exponent y ------------------------------
# Polynomials in y are plain tuples of Fractions, low degree first.

def _ypoly_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, v in enumerate(g):
        out[i] += v
    return tuple(out)


def _ypoly_scale(f, s):
    return tuple(v * s for v in f)


def _ypoly_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, u in enumerate(f):
        if u:
            for j, v in enumerate(g):
                out[i + j] += u * v
    return tuple(out)


def _ypoly_trim(f):
    out = list(f)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _binom_y_polys(n: int):
    """C(y, k) for 0 <= k <= n as polynomials in y."""
    out = [(Fraction(1),)]
    for k in range(1, n + 1):
        grown = _ypoly_mul(out[-1], (Fraction(-(k - 1)), Fraction(1)))
        out.append(_ypoly_scale(grown, Fraction(1, k)))
    return out


def euler_transform_check(a: RatSeq, order: int) -> bool:
    """Verify the generating function law up to x^order.

    Both sides are expanded in (Q[y])[[x]]; the coefficient of each power
    of x is compared as an exact polynomial in y, which is stronger than
    sampling y at any number of points.  Requires order <= len(a).
    """
    if order > len(a):
        raise ValueError("order exceeds the available sequence terms")
    n = order
    b = binomial_transform(a[:n])
    cyk = _binom_y_polys(n)
    lhs = [_ypoly_scale(cyk[m], Fraction(a[m])) for m in range(n)]

    # powers of u = x/(1+x) as plain rational series in x
    upows = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    u = [Fraction(0)] + [Fraction((-1) ** (j - 1)) for j in range(1, n)]
    acc = [(Fraction(0),) for _ in range(n)]
    uk = upows[0]
    for k in range(n):
        if k:
            nxt = [Fraction(0)] * n
            for i in range(k, n):
                nxt[i] = sum(uk[i - j] * u[j] for j in range(1, i - k + 2))
            uk = nxt
        scaled = _ypoly_scale(cyk[k], Fraction((-1) ** k * b[k]))
        for m in range(k, n):
            if uk[m]:
                acc[m] = _ypoly_add(acc[m], _ypoly_scale(scaled, uk[m]))

    # multiply by (1+x)^y, whose x^j coefficient is C(y, j)
    rhs = []
    for m in range(n):
        coeff = (Fraction(0),)
        for j in range(m + 1):
            coeff = _ypoly_add(coeff, _ypoly_mul(cyk[j], acc[m - j]))
        rhs.append(coeff)

    return all(_ypoly_trim(lhs[m]) == _ypoly_trim(rhs[m]) for m in range(n))


def modular_transform_check(a: list, p: int,
                            params: str = "") -> CongruenceReport:
    """Verify the truncated transform congruence for a length-p sequence
    of residues mod p."""
    if len(a) != p:
        raise ValueError("sequence must have exactly p terms")
    half = (p - 1) // 2
    lhs = PolyFp([binom_mod(2 * k, k, p) * a[k] for k in range(p)], p)
    b = [sum((-1) ** k * binom_mod(n, k, p) * a[k] for k in range(n + 1)) % p
         for n in range(half + 1)]
    rhs = PolyFp.zero(p)
    for k in range(half + 1):
        term = binomial_power(1, -4, half - k, p)
        coeff = binom_mod(2 * k, k, p) * b[k] * (-1) ** k
        rhs = rhs + term.shift(k).scale(coeff)
    return from_polys("MODULAR_TRANSFORM", p, params, lhs, rhs)


# -- randomized property sweeps ---------------------------------------------

INVOLUTION_SEED = 20260801
EULER_SEED = 20260802
MODULAR_SEED = 20260803


def _random_rational_seq(rng: random.Random, length: int) -> RatSeq:
    return [Fraction(rng.randint(-20, 20), rng.randint(1, 12))
            for _ in range(length)]


def _sweep_report(theorem: str, modulus: int, params: str,
                  failures: list[str]) -> CongruenceReport:
    witness = failures[0] if failures else ""
    return make_report(theorem, modulus, params,
                       ";".join(failures), "", witness)


def run_involution_check(count: int = 1000, max_len: int = 50,
                         seed: int = INVOLUTION_SEED) -> CongruenceReport:
    """Apply the transform twice to random rational sequences and demand
    the original back every time."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        a = _random_rational_seq(rng, rng.randint(1, max_len))
        if binomial_transform(binomial_transform(a)) != a:
            failures.append(f"case={case}")
    return _sweep_report("INVOLUTION", 0,
                         f"count={count} max_len={max_len} seed={seed}",
                         failures)


def run_euler_check(count: int = 50, order: int = 30,
                    seed: int = EULER_SEED) -> CongruenceReport:
    """Run the indeterminate-y generating function check on random
    rational sequences."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        a = _random_rational_seq(rng, order)
        if not euler_transform_check(a, order):
            failures.append(f"case={case}")
    return _sweep_report("EULER", 0,
                         f"count={count} order={order} seed={seed}",
                         failures)


def run_modular_check(p: int, count: int = 100,
                      seed: int = MODULAR_SEED) -> CongruenceReport:
    """Run the truncated congruence on random residue sequences mod p."""
    rng = random.Random(seed + p)
    failures = []
    for case in range(count):
        a = [rng.randrange(p) for _ in range(p)]
        rep = modular_transform_check(a, p)
        if rep.status != "pass":
            failures.append(f"case={case} {rep.witness}")
    return _sweep_report("MODULAR_TRANSFORM", p,
                         f"count={count} seed={seed + p}", failures)
