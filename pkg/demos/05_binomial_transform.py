"""The alternating binomial transform from three angles.

First as a sequence map (an involution), then as a generating function
law with the exponent kept as an indeterminate polynomial variable, and
finally as a truncated congruence mod p where binom(2k,k) = 0 for
p/2 < k < p makes the transformed sum collapse.
"""

from fractions import Fraction

from fincong import (binomial_transform, euler_transform_check,
                     modular_transform_check, run_modular_check)


def main():
    print("the transform sends H_j^(2) to -H_k/k")
    h2 = [Fraction(0)]
    for j in range(1, 8):
        h2.append(h2[-1] + Fraction(1, j * j))
    b = binomial_transform(h2)
    for k in range(8):
        print(f"  a_{k} = {h2[k]!s:8s} ->  b_{k} = {b[k]}")
    print(f"  applying it again returns the input: "
          f"{binomial_transform(b) == h2}")

    print()
    print("generating function law with indeterminate exponent y")
    seq = [Fraction(1, j + 1) for j in range(12)]
    print(f"  a_j = 1/(j+1), checked to x^12: "
          f"{euler_transform_check(seq, 12)}")

    print()
    print("truncated congruence mod p on a structured sequence")
    p = 11
    rep = modular_transform_check([k * k % p for k in range(p)], p)
    print(f"  a_k = k^2 mod {p}: {rep.status}")
    rep = modular_transform_check([1] * p, p)
    print(f"  a_k = 1 (reduces to the central binomial power): "
          f"{rep.status}")

    print()
    print("seeded random sweeps per modulus")
    for p in (5, 7, 11, 13, 17):
        rep = run_modular_check(p, count=100)
        print(f"  p={p:2d}: {rep.params} -> {rep.status}")


if __name__ == "__main__":
    main()
