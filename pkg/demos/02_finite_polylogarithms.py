"""Finite polylogarithms and their functional congruences.

The truncated polylogarithm over F_p is the polynomial

    L_d(x) = sum_(0 < k < p) x^k / k^d

with the exponents reduced mod p.  At weight one it is congruent to the
Fermat quotient expansion (1 - x^p - (1-x)^p)/p, and weights one to
three satisfy reflection and inversion laws that this script checks and
prints at small primes.
"""

from fincong import (check_polylog_identity, fermat_quotient_2, Fp,
                     mir_reports, polylog, polylog_eval, primes_in)


def main():
    print("coefficient lists of L_d over F_7")
    for d in (1, 2, 3):
        print(f"  L_{d} = {polylog(d, 7).encode()}")

    print()
    print("functional congruences at p = 5..31")
    for p in primes_in(5, 31):
        row = []
        for ident in ("Q", "L1", "INV", "L2", "L3", "PERIOD"):
            rep = (check_polylog_identity(ident, p, 2)
                   if ident == "PERIOD" else check_polylog_identity(ident, p))
            row.append(f"{ident}:{rep.status}")
        print(f"  p={p:2d}  " + "  ".join(row))

    print()
    print("the Mirimanoff-style ladder at p = 13, one row per weight d")
    for rep in mir_reports(13):
        print(f"  {rep.params}: {rep.status}")

    print()
    print("evaluation at -1 meets the Fermat quotient of 2")
    for p in primes_in(3, 40):
        lhs = polylog_eval(1, p - 1, Fp(p))
        rhs = -2 * fermat_quotient_2(p) % p
        print(f"  p={p:2d}: L_1(-1) = {lhs}, -2*q_p(2) = {rhs}")
        assert lhs == rhs


if __name__ == "__main__":
    main()
