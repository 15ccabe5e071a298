"""Exact verification of truncated congruences for central binomial
sums, Catalan and trinomial numbers, and finite polylogarithms.

Everything is checked at exact precision: truncated sums against closed
forms in F_p[x] and F_p[beta], functional congruences of finite
polylogarithms, exact rational generating-function identities, sequence
transforms, and numeric specializations in F_p and F_p^2.
"""

from .congruences import (P_MIN, PRIME_POWER_OK, SHIFTED, SYMMETRIC_RHS,
                          TheoremId, X_NATIVE, build_sides, build_sides_x,
                          central_extension_sides, lhs_coefficients, verify)
from .finpolylog import (FOUR_TERM_MAX_P, POLYLOG_IDENTITIES,
                         check_polylog_identity, mir_reports, polylog,
                         polylog_eval, scaled_polylog)
from .modarith import (Fp, Fp2, golden_roots, legendre, quadratic_roots,
                       rational_mod, sixth_root, sqrt_mod)
from .numeric import (NUMERIC_IDENTITIES, POINT_LABELS, SpecialPoint,
                      special_points, specialization_reports,
                      specialize_polynomial, verify_numeric)
from .polyfp import BiPolyFp, InexactDivision, PolyFp, exact_divide, \
    series_inv, subst_x_to_beta, swap_beta
from .primes import is_prime, prime_power_base, primes_in, primes_up_to
from .ratseries import (MAX_ORDER, SERIES_IDENTITIES, RatSeries,
                        integration_parts_reports, series_beta,
                        series_reports, verify_series_identity)
from .reports import CongruenceReport
from .sequences import (bernoulli_mod, binom_mod, binomial_power, catalans,
                        central_binomials, central_trinomials,
                        fermat_quotient_2, harmonic_table, lucas_number_mod,
                        lucas_quotient)
from .transforms import (binomial_transform, euler_transform_check,
                         modular_transform_check, run_euler_check,
                         run_involution_check, run_modular_check)

__version__ = "0.1.0"

__all__ = [
    "BiPolyFp", "CongruenceReport", "FOUR_TERM_MAX_P", "Fp", "Fp2",
    "InexactDivision", "MAX_ORDER", "NUMERIC_IDENTITIES", "P_MIN",
    "POINT_LABELS", "POLYLOG_IDENTITIES", "PRIME_POWER_OK", "PolyFp",
    "RatSeries", "SERIES_IDENTITIES", "SHIFTED", "SYMMETRIC_RHS",
    "SpecialPoint", "TheoremId", "X_NATIVE",
    "bernoulli_mod", "binom_mod", "binomial_power", "binomial_transform",
    "build_sides", "build_sides_x", "catalans", "central_binomials",
    "central_extension_sides", "central_trinomials",
    "check_polylog_identity", "euler_transform_check", "exact_divide",
    "fermat_quotient_2", "golden_roots", "harmonic_table",
    "integration_parts_reports", "is_prime", "legendre", "lhs_coefficients",
    "lucas_number_mod", "lucas_quotient", "mir_reports",
    "modular_transform_check", "polylog", "polylog_eval",
    "prime_power_base", "primes_in", "primes_up_to", "quadratic_roots",
    "rational_mod", "run_euler_check", "run_involution_check",
    "run_modular_check", "scaled_polylog", "series_beta", "series_inv",
    "series_reports", "sixth_root", "special_points",
    "specialization_reports", "specialize_polynomial", "sqrt_mod",
    "subst_x_to_beta", "swap_beta", "verify", "verify_numeric",
    "verify_series_identity",
]
