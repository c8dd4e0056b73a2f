"""Exact power sums of arithmetic progressions and the integrality of their coefficients."""

from apsum.bernoulli import (
    bernoulli_number,
    bernoulli_poly_at,
    bernoulli_polynomial,
    rad,
    von_staudt_denominator,
)
from apsum.exactcore import PolyQ, Rat, poly_eval, poly_is_integral, rat_denominator
from apsum.integrality import (
    F_val,
    IntegralityReport,
    f_val,
    is_integral_poly,
    theorem2_predicate,
    verify_theorem2_grid,
)
from apsum.powersum import (
    ProgressionParams,
    brute_force_sum,
    classical_coeffs,
    coeffs_bernoulli,
    coeffs_theorem1,
    falling_factorial_sum_poly,
)
from apsum.triangles import binomial, falling_factorial, stirling1_row, stirling2_row, whitney_row

__version__ = "0.1.0"
