"""Explicit factorization of x^n - 1 over prime fields."""

from ._core import (
    Factorization,
    FactorRecord,
    UnsupportedError,
    __version__,
    binomial_divides_xn1,
    binomial_is_irreducible,
    build_Rt,
    classify,
    count,
    cyclotomic,
    factor,
    factor_json,
    generator,
    is_irreducible,
    oracle_factorize,
    split_reducible_binomial,
)

__all__ = [
    "Factorization",
    "FactorRecord",
    "UnsupportedError",
    "__version__",
    "binomial_divides_xn1",
    "binomial_is_irreducible",
    "build_Rt",
    "classify",
    "count",
    "cyclotomic",
    "factor",
    "factor_json",
    "generator",
    "is_irreducible",
    "oracle_factorize",
    "split_reducible_binomial",
]
