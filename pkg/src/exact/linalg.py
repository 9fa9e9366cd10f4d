"""Small dense exact linear algebra over the rationals."""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

import numpy as np

from core.exceptions import DimensionMismatchError, SpectraOverlapError
from exact.rational import (
    RMatrix,
    RationalLike,
    as_rmatrix,
    as_rvector,
    identity,
    rmatrix,
    rvector,
    to_rational,
)

logger = logging.getLogger(__name__)


def matmul(left: RMatrix, right: RMatrix) -> RMatrix:
    """Exact product; the result is frozen like every other exact value."""
    product = np.asarray(left, dtype=object) @ np.asarray(right, dtype=object)
    if product.ndim == 0:
        return to_rational(product)
    if product.ndim == 1:
        return rvector(product.tolist())
    return rmatrix(product.tolist(), cols=product.shape[1])


def matrix_power(matrix: RMatrix, exponent: int) -> RMatrix:
    result = identity(matrix.shape[0])
    for _ in range(exponent):
        result = matmul(result, matrix)
    return result


def _integer_rows(matrix: RMatrix) -> List[List[int]]:
    rows = []
    for row in np.asarray(matrix, dtype=object).tolist():
        scale = lcm(*(Fraction(entry).denominator for entry in row)) if row else 1
        rows.append([int(Fraction(entry) * scale) for entry in row])
    return rows


def rank(matrix: RMatrix) -> int:
    """
    Exact rank by fraction-free (Bareiss) elimination.

    Each row is first scaled to integers by the lcm of its denominators, which
    leaves the rank unchanged; every division below is then exact.
    """
    matrix = np.asarray(matrix, dtype=object)
    if matrix.ndim != 2:
        raise DimensionMismatchError(f"rank expects a 2-D matrix, got shape {matrix.shape}")
    rows = _integer_rows(matrix)
    n_rows, n_cols = matrix.shape
    current = 0
    previous_pivot = 1
    for col in range(n_cols):
        if current == n_rows:
            break
        pivot = next((i for i in range(current, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[current], rows[pivot] = rows[pivot], rows[current]
        head = rows[current]
        for i in range(current + 1, n_rows):
            row = rows[i]
            for j in range(col + 1, n_cols):
                row[j] = (head[col] * row[j] - row[col] * head[j]) // previous_pivot
            row[col] = 0
        previous_pivot = head[col]
        current += 1
    return current


def solve_linear(matrix: RMatrix, rhs: Sequence[RationalLike]) -> Optional[RMatrix]:
    """
    Solve M x = rhs exactly by Gauss-Jordan elimination.

    Returns:
        The solution vector, or None when M is singular.

    Raises:
        DimensionMismatchError: M is not square or rhs has the wrong length.
    """
    matrix = as_rmatrix(matrix)
    rhs = as_rvector(rhs)
    n = matrix.shape[0]
    if matrix.shape[1] != n:
        raise DimensionMismatchError(f"solve_linear needs a square matrix, got {matrix.shape}")
    if rhs.shape[0] != n:
        raise DimensionMismatchError(f"Right-hand side has length {rhs.shape[0]}, expected {n}")

    augmented = [list(row) + [value] for row, value in zip(matrix.tolist(), rhs.tolist())]
    for i in range(n):
        pivot = next((k for k in range(i, n) if augmented[k][i] != 0), None)
        if pivot is None:
            return None
        augmented[i], augmented[pivot] = augmented[pivot], augmented[i]
        head = augmented[i]
        inverse_pivot = 1 / head[i]
        head[:] = [entry * inverse_pivot for entry in head]
        for k in range(n):
            if k != i and augmented[k][i] != 0:
                factor = augmented[k][i]
                augmented[k] = [a - factor * h for a, h in zip(augmented[k], head)]
    return rvector(row[n] for row in augmented)


def inverse(matrix: RMatrix) -> Optional[RMatrix]:
    """Exact inverse, or None when singular."""
    matrix = as_rmatrix(matrix)
    n = matrix.shape[0]
    columns = []
    unit = identity(n)
    for j in range(n):
        column = solve_linear(matrix, unit[:, j])
        if column is None:
            return None
        columns.append(column.tolist())
    return rmatrix([[columns[j][i] for j in range(n)] for i in range(n)], cols=n)


def solve_sylvester(p_matrix: RMatrix, q_matrix: RMatrix, c_matrix: RMatrix) -> RMatrix:
    """
    Solve P X - X Q = C exactly.

    The equation is vectorized column-major into
    (I_n kron P - Q^T kron I_m) vec(X) = vec(C).

    Raises:
        DimensionMismatchError: shapes of P, Q and C do not agree.
        SpectraOverlapError: the vectorized system is singular.
    """
    p_matrix = as_rmatrix(p_matrix)
    q_matrix = as_rmatrix(q_matrix)
    c_matrix = as_rmatrix(c_matrix)
    m, n = c_matrix.shape
    if p_matrix.shape != (m, m) or q_matrix.shape != (n, n):
        raise DimensionMismatchError(
            f"Sylvester shapes disagree: P {p_matrix.shape}, Q {q_matrix.shape}, C {c_matrix.shape}",
            operation="solve_sylvester",
        )

    system = np.kron(identity(n), p_matrix) - np.kron(q_matrix.T, identity(m))
    solution = solve_linear(system, c_matrix.flatten(order="F").tolist())
    if solution is None:
        raise SpectraOverlapError(operation="solve_sylvester")
    logger.debug("Solved %dx%d Sylvester equation", m, n)
    return rmatrix(np.asarray(solution, dtype=object).reshape((m, n), order="F").tolist(), cols=n)


def vandermonde_powers(values: Sequence[RationalLike], first_power: int, last_power: int) -> RMatrix:
    """Column j holds values ** (first_power + j)."""
    if first_power > last_power:
        raise DimensionMismatchError(
            f"first_power {first_power} exceeds last_power {last_power}",
            operation="vandermonde_powers",
        )
    values = [to_rational(v) for v in values]
    return rmatrix(
        [[v ** k for k in range(first_power, last_power + 1)] for v in values],
        cols=last_power - first_power + 1,
    )


def column_stack(columns: Sequence[Sequence[RationalLike]], rows: int) -> RMatrix:
    """Matrix whose columns are the given vectors (rows fixes the height when empty)."""
    columns = [list(column) for column in columns]
    return rmatrix([[column[i] for column in columns] for i in range(rows)], cols=len(columns))
