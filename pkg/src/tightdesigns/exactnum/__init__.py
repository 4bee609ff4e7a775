"""Exact arithmetic: rationals with p-adic valuations, Q(sqrt(D)), polynomials over Q,
and cyclotomic numbers."""

from .cyclotomic import CycInt, cyc_root, cyc_sqrt, cyclotomic_poly, euler_phi
from .mpoly import MPoly
from .padic import factorize, is_prime, merge_factorizations, padic_val
from .quadfield import ExactScalar, format_scalar, golden_ratio, parse_scalar

__all__ = [
    "CycInt",
    "ExactScalar",
    "MPoly",
    "cyc_root",
    "cyc_sqrt",
    "cyclotomic_poly",
    "euler_phi",
    "factorize",
    "format_scalar",
    "golden_ratio",
    "is_prime",
    "merge_factorizations",
    "padic_val",
    "parse_scalar",
]
