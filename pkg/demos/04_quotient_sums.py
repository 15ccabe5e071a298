"""Numeric sums whose closed forms mix Bernoulli numbers with Fermat and
Lucas quotients.

The weight-three central binomial sums evaluated at x = 1, -2, 1/4, and
along Lucas numbers have right-hand sides built from B_(p-3), the Fermat
quotient q_p(2) = (2^(p-1) - 1)/p, and the Lucas quotient
(L_p - 1)/p.  All four are checked as exact residues mod p.
"""

from fincong import (bernoulli_mod, fermat_quotient_2, lucas_quotient,
                     primes_in, verify_numeric)


def main():
    print("ingredients at small primes")
    for p in primes_in(7, 32):
        print(f"  p={p:2d}: B_(p-3)={bernoulli_mod(p - 3, p):2d}  "
              f"q_p(2)={fermat_quotient_2(p):2d}  "
              f"(L_p-1)/p={lucas_quotient(p):2d}")

    print()
    print("the four quotient sums, residues of both sides")
    for p in primes_in(7, 60):
        row = []
        for ident in ("NUM1", "NUM2", "NUM3", "NUM4"):
            rep = verify_numeric(ident, p)
            assert rep.status == "pass", (ident, p, rep.witness)
            row.append(f"{ident}={rep.lhs}")
        print(f"  p={p:2d}  " + "  ".join(row))

    print()
    print("quadratic-symbol sums at prime and prime-square lengths")
    for p in primes_in(3, 30):
        for q in (p, p * p):
            cb = verify_numeric("SUM_CB", q)
            cat = verify_numeric("SUM_CAT", q)
            print(f"  q={q:3d}: sum C(2k,k) = {cb.lhs} ({cb.status}), "
                  f"sum Catalan = {cat.lhs} ({cat.status})")


if __name__ == "__main__":
    main()
