"""Arithmetic in the prime field F_p and its quadratic extension F_p^2.

Residues are plain Python ints in [0, m); the modulus travels alongside as
context rather than per element.  Elements of F_p^2 = F_p(w), w^2 = delta
for a fixed quadratic non-residue delta, are pairs (a, b) meaning a + b*w.
"""

from __future__ import annotations

from fractions import Fraction

Fp2El = tuple[int, int]


def fp_inv(a: int, m: int) -> int:
    """Inverse of a modulo m.  Raises ValueError if gcd(a, m) != 1."""
    return pow(a, -1, m)


def rational_mod(num: int, den: int, m: int) -> int:
    """Reduce the rational num/den modulo m; den must be invertible mod m."""
    return num * pow(den, -1, m) % m


def frac_mod(x: Fraction | int, m: int) -> int:
    """Reduce an exact rational (or integer) modulo m."""
    if isinstance(x, Fraction):
        return rational_mod(x.numerator, x.denominator, m)
    return x % m


def legendre(a: int, m: int) -> int:
    """Legendre symbol (a|m) for an odd prime m, via the Euler criterion."""
    a %= m
    if a == 0:
        return 0
    return 1 if pow(a, (m - 1) // 2, m) == 1 else -1


def nonresidue(p: int) -> int:
    """Smallest quadratic non-residue modulo the odd prime p."""
    for d in range(2, p):
        if legendre(d, p) == -1:
            return d
    raise ValueError(f"no quadratic non-residue mod {p}")


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo the odd prime p (Tonelli-Shanks).

    Returns the root r with r <= p - r.  Raises ValueError if a is a
    non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = pow(nonresidue(p), q, p)
    m, c, t, r = s, z, pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


class Fp:
    """Context for F_p arithmetic on plain-int residues."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        self.p = p

    def of_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def eq(self, a: int, b: int) -> bool:
        return (a - b) % self.p == 0

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def encode(self, a: int) -> str:
        return str(a % self.p)

    def sort_key(self, a: int):
        return (a % self.p,)


class Fp2:
    """Context for F_p^2 = F_p(w) with w^2 = delta, a non-residue mod p.

    Elements are pairs (a, b) for a + b*w.  The Frobenius map z -> z^p
    coincides with conjugation (a, b) -> (a, -b).
    """

    __slots__ = ("p", "delta")

    def __init__(self, p: int, delta: int | None = None):
        self.p = p
        self.delta = nonresidue(p) if delta is None else delta % p

    def of_int(self, n: int) -> Fp2El:
        return (n % self.p, 0)

    def of_pair(self, a: int, b: int) -> Fp2El:
        return (a % self.p, b % self.p)

    def add(self, x: Fp2El, y: Fp2El) -> Fp2El:
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def sub(self, x: Fp2El, y: Fp2El) -> Fp2El:
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def mul(self, x: Fp2El, y: Fp2El) -> Fp2El:
        p, d = self.p, self.delta
        a, b = x
        c, e = y
        return ((a * c + b * e * d) % p, (a * e + b * c) % p)

    def neg(self, x: Fp2El) -> Fp2El:
        p = self.p
        return (-x[0] % p, -x[1] % p)

    def conj(self, x: Fp2El) -> Fp2El:
        return (x[0], -x[1] % self.p)

    def norm(self, x: Fp2El) -> int:
        """Field norm a^2 - delta * b^2, an element of F_p."""
        a, b = x
        return (a * a - self.delta * b * b) % self.p

    def inv(self, x: Fp2El) -> Fp2El:
        n = self.norm(x)
        if n == 0:
            raise ValueError("inverse of zero in F_p^2")
        ninv = pow(n, -1, self.p)
        return (x[0] * ninv % self.p, -x[1] * ninv % self.p)

    def pow(self, x: Fp2El, n: int) -> Fp2El:
        if n < 0:
            x, n = self.inv(x), -n
        r = (1, 0)
        while n:
            if n & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            n >>= 1
        return r

    def eq(self, x: Fp2El, y: Fp2El) -> bool:
        p = self.p
        return (x[0] - y[0]) % p == 0 and (x[1] - y[1]) % p == 0

    def is_zero(self, x: Fp2El) -> bool:
        return x[0] % self.p == 0 and x[1] % self.p == 0

    def in_base_field(self, x: Fp2El) -> bool:
        return x[1] % self.p == 0

    def encode(self, x: Fp2El) -> str:
        a, b = x[0] % self.p, x[1] % self.p
        return str(a) if b == 0 else f"{a}+{b}w"

    def sort_key(self, x: Fp2El):
        return (x[0] % self.p, x[1] % self.p)


FieldCtx = Fp | Fp2


def quadratic_roots(b: int, c: int, p: int):
    """Roots of z^2 + b*z + c over F_p, extending to F_p^2 when needed.

    Returns (r1, r2, ctx) where ctx is an Fp or Fp2 context and r1 <= r2
    in the canonical element order.  For a double root r1 == r2.
    """
    if p == 2:
        raise ValueError("odd p required")
    disc = (b * b - 4 * c) % p
    inv2 = pow(2, -1, p)
    if legendre(disc, p) >= 0:
        s = sqrt_mod(disc, p)
        ctx = Fp(p)
        r1 = (-b + s) * inv2 % p
        r2 = (-b - s) * inv2 % p
        lo, hi = sorted((r1, r2))
        return lo, hi, ctx
    ctx = Fp2(p)
    # disc = t^2 * delta with t = sqrt(disc / delta)
    t = sqrt_mod(disc * pow(ctx.delta, -1, p) % p, p)
    half = (-b * inv2 % p, 0)
    off = (0, t * inv2 % p)
    r1, r2 = ctx.add(half, off), ctx.sub(half, off)
    if ctx.sort_key(r1) > ctx.sort_key(r2):
        r1, r2 = r2, r1
    return r1, r2, ctx


def sixth_root(p: int):
    """A primitive 6th root of unity mod p, i.e. a root of z^2 - z + 1.

    Returns (omega, ctx); the root lies in F_p when p = 1 mod 3, else in
    F_p^2.  Requires p > 3 (mod 3 the two roots collapse).
    """
    if p <= 3:
        raise ValueError("p > 3 required for a primitive 6th root of unity")
    r1, _r2, ctx = quadratic_roots(-1, 1, p)
    return r1, ctx


def golden_roots(p: int):
    """The two roots of z^2 - z - 1 mod p, canonically ordered.

    Returns (phi_plus, phi_minus, ctx); the roots lie in F_p when 5 is a
    square mod p, else in F_p^2.  Requires p != 5, where the discriminant
    vanishes and the roots collapse.
    """
    if p == 5:
        raise ValueError("p = 5 is degenerate for z^2 - z - 1")
    return quadratic_roots(-1, -1, p)
