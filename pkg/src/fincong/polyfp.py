"""Dense polynomials over F_p, univariate and bivariate.

Coefficients are plain ints in [0, p) stored low degree first with trailing
zeros trimmed, so the zero polynomial has an empty coefficient tuple.  All
arithmetic is exact; nothing here ever rounds or samples.
"""

from __future__ import annotations

from .modarith import fp_inv


class InexactDivision(ValueError):
    """Raised when exact_divide is asked for a division with remainder."""


class PolyFp:
    """Univariate polynomial over F_p with canonical trimmed coefficients."""

    __slots__ = ("p", "c")

    def __init__(self, coeffs, p: int):
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.c = tuple(c)

    @classmethod
    def zero(cls, p: int) -> "PolyFp":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "PolyFp":
        return cls((1,), p)

    @classmethod
    def monomial(cls, k: int, p: int, coeff: int = 1) -> "PolyFp":
        return cls([0] * k + [coeff], p)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, k: int) -> int:
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyFp) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __add__(self, other: "PolyFp") -> "PolyFp":
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyFp(out, self.p)

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        out = list(self.c) + [0] * max(0, len(other.c) - len(self.c))
        for i, v in enumerate(other.c):
            out[i] -= v
        return PolyFp(out, self.p)

    def __neg__(self) -> "PolyFp":
        return PolyFp([-v for v in self.c], self.p)

    def __mul__(self, other: "PolyFp") -> "PolyFp":
        a, b = self.c, other.c
        if not a or not b:
            return PolyFp.zero(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return PolyFp(out, self.p)

    def scale(self, s: int) -> "PolyFp":
        s %= self.p
        return PolyFp([s * v for v in self.c], self.p)

    def __pow__(self, n: int) -> "PolyFp":
        if n < 0:
            raise ValueError("negative polynomial power")
        r = PolyFp.one(self.p)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def shift(self, k: int) -> "PolyFp":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return PolyFp((0,) * k + self.c, self.p)

    def truncate(self, n: int) -> "PolyFp":
        """Reduce mod t^n."""
        return PolyFp(self.c[:n], self.p)

    def derivative(self) -> "PolyFp":
        return PolyFp([k * v for k, v in enumerate(self.c)][1:], self.p)

    def eval_at(self, a: int) -> int:
        """Horner evaluation at a in F_p."""
        r = 0
        for v in reversed(self.c):
            r = (r * a + v) % self.p
        return r

    def first_diff(self, other: "PolyFp"):
        """(k, self[k], other[k]) at the lowest differing degree, or None."""
        n = max(len(self.c), len(other.c))
        for k in range(n):
            a, b = self.coeff(k), other.coeff(k)
            if a != b:
                return (k, a, b)
        return None

    def encode(self) -> str:
        """Canonical text form used for digests."""
        return f"{self.p}|" + ",".join(map(str, self.c))

    def __repr__(self):
        return f"PolyFp({list(self.c)}, p={self.p})"


def series_inv(f: PolyFp, n: int) -> PolyFp:
    """Inverse of a unit power series mod t^n (constant term invertible)."""
    p = f.p
    if f.coeff(0) == 0:
        raise ValueError("series has no inverse: zero constant term")
    f0inv = fp_inv(f.coeff(0), p)
    g = [f0inv] + [0] * (n - 1)
    fc = f.c
    for i in range(1, n):
        s = 0
        for j in range(1, min(i, len(fc) - 1) + 1):
            s += fc[j] * g[i - j]
        g[i] = -f0inv * s % p
    return PolyFp(g, p)


def exact_divide(f: PolyFp, g: PolyFp) -> PolyFp:
    """Quotient f / g when the division is exact; InexactDivision otherwise.

    An inexact division in an identity pipeline is a verification failure
    signal, never something to round away.
    """
    p = f.p
    if g.is_zero():
        raise InexactDivision("division by zero polynomial")
    if f.is_zero():
        return f
    if f.degree < g.degree:
        raise InexactDivision("degree of dividend below divisor")
    gl = fp_inv(g.c[-1], p)
    rem = list(f.c)
    dg = g.degree
    q = [0] * (len(f.c) - dg)
    for i in range(len(q) - 1, -1, -1):
        t = rem[i + dg] % p
        if t:
            t = t * gl % p
            q[i] = t
            for j, v in enumerate(g.c):
                rem[i + j] -= t * v
    if any(v % p for v in rem[:dg]):
        raise InexactDivision("nonzero remainder")
    return PolyFp(q, p)


def compose(f: PolyFp, g: PolyFp) -> PolyFp:
    """f(g(t)) by Horner."""
    r = PolyFp.zero(f.p)
    for v in reversed(f.c):
        r = r * g
        if v:
            r = r + PolyFp((v,), f.p)
    return r


def subst_x_to_beta(f: PolyFp) -> PolyFp:
    """Apply the substitution x -> beta - beta^2, mapping the x-chart of a
    statement into the beta-chart (beta*(1-beta) = x)."""
    return compose(f, PolyFp((0, 1, -1), f.p))


def swap_beta(f: PolyFp) -> PolyFp:
    """Apply beta -> 1 - beta; an involution fixing the image of the x-chart."""
    return compose(f, PolyFp((1, -1), f.p))


class BiPolyFp:
    """Dense bivariate polynomial over F_p on a rectangular grid.

    grid[i][j] holds the coefficient of x^i y^j; empty grid means zero.
    The grid is trimmed so the last row and, in each row jointly, the last
    column carry a nonzero entry.
    """

    __slots__ = ("p", "grid")

    def __init__(self, grid, p: int):
        rows = [[v % p for v in row] for row in grid]
        while rows and not any(rows[-1]):
            rows.pop()
        width = 0
        for row in rows:
            for j in range(len(row) - 1, -1, -1):
                if row[j]:
                    width = max(width, j + 1)
                    break
        self.p = p
        self.grid = tuple(
            tuple(row[:width]) + (0,) * max(0, width - len(row)) for row in rows
        )

    @classmethod
    def zero(cls, p: int) -> "BiPolyFp":
        return cls((), p)

    @classmethod
    def from_terms(cls, terms, p: int) -> "BiPolyFp":
        """Build from an iterable of (i, j, coeff) monomials."""
        terms = list(terms)
        if not terms:
            return cls.zero(p)
        nr = max(i for i, _, _ in terms) + 1
        nc = max(j for _, j, _ in terms) + 1
        grid = [[0] * nc for _ in range(nr)]
        for i, j, v in terms:
            grid[i][j] += v
        return cls(grid, p)

    @classmethod
    def outer(cls, fx: PolyFp, fy: PolyFp) -> "BiPolyFp":
        """Product f(x) * g(y) as a bivariate polynomial."""
        grid = [[u * v for v in fy.c] for u in fx.c]
        return cls(grid, fx.p)

    def is_zero(self) -> bool:
        return not self.grid

    def coeff(self, i: int, j: int) -> int:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPolyFp) and self.p == other.p and self.grid == other.grid

    def __hash__(self):
        return hash((self.p, self.grid))

    def __add__(self, other: "BiPolyFp") -> "BiPolyFp":
        nr = max(len(self.grid), len(other.grid))
        nc = max(len(self.grid[0]) if self.grid else 0,
                 len(other.grid[0]) if other.grid else 0)
        grid = [[self.coeff(i, j) + other.coeff(i, j) for j in range(nc)]
                for i in range(nr)]
        return BiPolyFp(grid, self.p)

    def __sub__(self, other: "BiPolyFp") -> "BiPolyFp":
        return self + other.scale(-1)

    def scale(self, s: int) -> "BiPolyFp":
        s %= self.p
        return BiPolyFp([[s * v for v in row] for row in self.grid], self.p)

    def first_monomial(self):
        """(i, j, coeff) of the first nonzero entry in (i, j) lex order, or None."""
        for i, row in enumerate(self.grid):
            for j, v in enumerate(row):
                if v:
                    return (i, j, v)
        return None

    def first_diff(self, other: "BiPolyFp"):
        d = self - other
        m = d.first_monomial()
        if m is None:
            return None
        i, j, _ = m
        return (i, j, self.coeff(i, j), other.coeff(i, j))

    def subst_y_equals_x(self) -> PolyFp:
        """Collapse y := x, returning a univariate polynomial."""
        if not self.grid:
            return PolyFp.zero(self.p)
        out = [0] * (len(self.grid) + len(self.grid[0]) - 1)
        for i, row in enumerate(self.grid):
            for j, v in enumerate(row):
                out[i + j] += v
        return PolyFp(out, self.p)

    def encode(self) -> str:
        rows = ";".join(",".join(map(str, row)) for row in self.grid)
        return f"{self.p}|{rows}"

    def __repr__(self):
        return f"BiPolyFp({[list(r) for r in self.grid]}, p={self.p})"
