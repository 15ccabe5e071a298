"""Integer sequences reduced modulo primes.

Binomials use factorial tables below p combined through base-p digits
(Lucas), so upper indices may exceed p.  Catalan numbers are built as a
difference of two binomials, which stays valid at indices where the usual
division by k+1 is not invertible mod p.  Quotient sequences (Fermat,
Lucas) are computed modulo p^2 and divided exactly by p.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .modarith import fp_inv, frac_mod
from .polyfp import PolyFp


@lru_cache(maxsize=128)
def _fact_tables(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(k! mod p, (k!)^-1 mod p) for 0 <= k < p."""
    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p
    inv_fact = [1] * p
    inv_fact[p - 1] = fp_inv(fact[p - 1], p)
    for k in range(p - 1, 0, -1):
        inv_fact[k - 1] = inv_fact[k] * k % p
    return tuple(fact), tuple(inv_fact)


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via base-p digits; n may be much larger than p."""
    if k < 0 or k > n:
        return 0
    fact, inv_fact = _fact_tables(p)
    r = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        r = r * fact[ni] % p * inv_fact[ki] % p * inv_fact[ni - ki] % p
        n //= p
        k //= p
    return r


def binomial_power(a: int, b: int, n: int, p: int) -> PolyFp:
    """(a + b*t)^n over F_p, expanded coefficientwise."""
    a %= p
    b %= p
    apow = [1] * (n + 1)
    for i in range(1, n + 1):
        apow[i] = apow[i - 1] * a % p
    out = [0] * (n + 1)
    bk = 1
    for k in range(n + 1):
        out[k] = binom_mod(n, k, p) * apow[n - k] % p * bk % p
        bk = bk * b % p
    return PolyFp(out, p)


def central_binomials(limit: int, p: int) -> list[int]:
    """[C(2k, k) mod p for 0 <= k < limit]."""
    return [binom_mod(2 * k, k, p) for k in range(limit)]


def catalans(limit: int, p: int) -> list[int]:
    """[C_k mod p for 0 <= k < limit], C_k = C(2k,k) - C(2k,k+1)."""
    return [(binom_mod(2 * k, k, p) - binom_mod(2 * k, k + 1, p)) % p
            for k in range(limit)]


def central_trinomials(limit: int, p: int) -> list[int]:
    """[T_k mod p for 0 <= k < limit], T_k the middle coefficient of
    (1 + t + t^2)^k."""
    out = []
    poly = [1]
    for k in range(limit):
        out.append(poly[k] if k < len(poly) else 0)
        nxt = [0] * (len(poly) + 2)
        for i, v in enumerate(poly):
            if v:
                nxt[i] += v
                nxt[i + 1] += v
                nxt[i + 2] += v
        poly = [v % p for v in nxt]
    return out


def harmonic_table(limit: int, p: int, order: int = 1) -> list[int]:
    """Prefix sums H_k = sum_{j=1..k} j^(-order) mod p for 0 <= k < limit.

    Requires limit <= p since 1/p does not exist mod p.
    """
    if limit > p:
        raise ValueError("harmonic prefix sums need indices below p")
    out = [0] * limit
    acc = 0
    for k in range(1, limit):
        acc = (acc + pow(fp_inv(k, p), order, p)) % p
        out[k] = acc
    return out


@lru_cache(maxsize=128)
def _bernoulli_table(p: int) -> tuple[int, ...]:
    """(B_0, ..., B_{p-3}) mod p via sum_{j<=m} C(m+1,j) B_j = 0."""
    n_max = p - 3
    fact, inv_fact = _fact_tables(p)
    b = [0] * (n_max + 1)
    b[0] = 1
    if n_max >= 1:
        b[1] = frac_mod(Fraction(-1, 2), p)
    for m in range(2, n_max + 1):
        if m % 2 == 1:
            continue
        s = 0
        for j in range(m):
            if j > 1 and j % 2 == 1:
                continue
            cmj = fact[m + 1] * inv_fact[j] % p * inv_fact[m + 1 - j] % p
            s += cmj * b[j]
        b[m] = -s * fp_inv(m + 1, p) % p
    return tuple(b)


def bernoulli_mod(n: int, p: int) -> int:
    """Bernoulli number B_n mod p (B_1 = -1/2).  Valid for 0 <= n <= p-3,
    where B_n is p-integral."""
    if not 0 <= n <= p - 3:
        raise ValueError("B_n mod p requires 0 <= n <= p-3")
    return _bernoulli_table(p)[n]


def fermat_quotient_2(p: int) -> int:
    """(2^(p-1) - 1)/p mod p."""
    return (pow(2, p - 1, p * p) - 1) // p % p


def _fib_pair(n: int, m: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) mod m by fast doubling."""
    if n == 0:
        return (0, 1 % m)
    a, b = _fib_pair(n >> 1, m)
    c = a * (2 * b - a) % m
    d = (a * a + b * b) % m
    if n & 1:
        return (d, (c + d) % m)
    return (c, d)


def lucas_number_mod(n: int, m: int) -> int:
    """Lucas number L_n mod m (L_0 = 2, L_1 = 1), via L_n = 2F_{n+1} - F_n."""
    fn, fn1 = _fib_pair(n, m)
    return (2 * fn1 - fn) % m


def lucas_table(limit: int, m: int) -> list[int]:
    """[L_0, ..., L_{limit-1}] mod m."""
    if limit <= 0:
        return []
    out = [2 % m, 1 % m][:limit]
    for _ in range(2, limit):
        out.append((out[-1] + out[-2]) % m)
    return out


def lucas_quotient(p: int) -> int:
    """(L_p - 1)/p mod p, using L_p = 1 mod p."""
    lp = lucas_number_mod(p, p * p)
    return (lp - 1) // p % p
