"""Exact rational arithmetic package initialization."""

from exact.rational import (
    Rational,
    RMatrix,
    RationalLike,
    to_rational,
    rvector,
    rmatrix,
    as_rmatrix,
    as_rvector,
    zeros,
    identity,
    ones,
    is_zero,
    to_float,
)
from exact.linalg import (
    matmul,
    matrix_power,
    rank,
    solve_linear,
    inverse,
    solve_sylvester,
    vandermonde_powers,
    column_stack,
)

__all__ = [
    "Rational",
    "RMatrix",
    "RationalLike",
    "to_rational",
    "rvector",
    "rmatrix",
    "as_rmatrix",
    "as_rvector",
    "zeros",
    "identity",
    "ones",
    "is_zero",
    "to_float",
    "matmul",
    "matrix_power",
    "rank",
    "solve_linear",
    "inverse",
    "solve_sylvester",
    "vandermonde_powers",
    "column_stack",
]
