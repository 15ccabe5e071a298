"""Small-prime utilities: sieving, primality, prime-power detection."""

from __future__ import annotations


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [p for p in primes_up_to(hi) if p >= lo]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_base(q: int) -> tuple[int, int] | None:
    """Return (p, r) with q = p^r for prime p, or None if q is not a prime power."""
    if q < 2:
        return None
    d = 2
    while d * d <= q:
        if q % d == 0:
            r, m = 0, q
            while m % d == 0:
                m //= d
                r += 1
            return (d, r) if m == 1 else None
        d += 1 if d == 2 else 2
    return (q, 1)
