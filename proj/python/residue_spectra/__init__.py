"""Residue counts mod p, elliptic-curve point counts, eta-product
coefficients, quadratic-form representation numbers, and a verification
harness for the exact identities connecting them."""

import json as _json

from ._core import (
    Error,
    count_roots,
    curve_point_count,
    decompose,
    delta_k,
    delta_mod40,
    epsilon_p,
    eta_coefficients,
    is_prime,
    jacobi_check,
    jacobsthal_cubic_sum,
    legendre,
    legendre_rational,
    primes_in_range,
    quaternary_count,
    residue_count,
    residue_profile,
    run_suite,
    statement_names,
    triangular_count,
)

__all__ = [
    "Error",
    "count_roots",
    "curve_point_count",
    "decompose",
    "delta_k",
    "delta_mod40",
    "epsilon_p",
    "eta_coefficients",
    "is_prime",
    "jacobi_check",
    "jacobsthal_cubic_sum",
    "legendre",
    "legendre_rational",
    "primes_in_range",
    "quaternary_count",
    "residue_count",
    "residue_profile",
    "statement_names",
    "triangular_count",
    "verify",
]


def verify(pmin=5, pmax=500, threads=0, statements=()):
    """Run the verification suite and return the report as a dict."""
    return _json.loads(run_suite(pmin, pmax, threads, list(statements)))
