"""Exact rational scalars, vectors and matrices.

Rationals are ``fractions.Fraction`` values; vectors and matrices are numpy
object arrays holding Fractions, frozen (read-only) after construction.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

import numpy as np

from core.exceptions import MalformedRationalError, DimensionMismatchError

Rational = Fraction
RMatrix = np.ndarray
RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Convert an integer, Fraction or text literal to an exact Fraction.

    Accepted text: optional sign, integer, optional "/" positive integer,
    or a decimal literal ("0.3" becomes 3/10 exactly).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedRationalError(repr(value))
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or text.lower() in ("nan", "inf", "-inf", "+inf", "infinity"):
            raise MalformedRationalError(value)
        try:
            result = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise MalformedRationalError(value)
        return result
    raise MalformedRationalError(repr(value))


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def rvector(values: Iterable[RationalLike]) -> RMatrix:
    """Exact 1-D vector."""
    items = [to_rational(v) for v in values]
    out = np.empty(len(items), dtype=object)
    for i, item in enumerate(items):
        out[i] = item
    return _freeze(out)


def rmatrix(rows: Sequence[Sequence[RationalLike]], cols: int = None) -> RMatrix:
    """Exact 2-D matrix from nested rows; ``cols`` fixes the width of an empty matrix."""
    rows = [list(row) for row in rows]
    width = len(rows[0]) if rows else (cols or 0)
    if any(len(row) != width for row in rows):
        raise DimensionMismatchError("Ragged matrix rows")
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            out[i, j] = to_rational(entry)
    return _freeze(out)


def as_rmatrix(matrix) -> RMatrix:
    """Coerce an array-like (possibly already exact) into a frozen exact matrix."""
    array = np.asarray(matrix, dtype=object)
    if array.ndim != 2:
        raise DimensionMismatchError(f"Expected a 2-D matrix, got shape {array.shape}")
    return rmatrix(array.tolist(), cols=array.shape[1])


def as_rvector(vector) -> RMatrix:
    array = np.asarray(vector, dtype=object)
    if array.ndim != 1:
        raise DimensionMismatchError(f"Expected a vector, got shape {array.shape}")
    return rvector(array.tolist())


def zeros(rows: int, cols: int) -> RMatrix:
    return rmatrix([[0] * cols for _ in range(rows)], cols=cols)


def identity(n: int) -> RMatrix:
    return rmatrix([[int(i == j) for j in range(n)] for i in range(n)], cols=n)


def ones(n: int) -> RMatrix:
    return rvector([1] * n)


def is_zero(array: RMatrix) -> bool:
    """True when every entry is exactly zero."""
    return all(entry == 0 for entry in np.asarray(array, dtype=object).ravel())


def to_float(array: RMatrix) -> np.ndarray:
    """Correctly rounded binary64 copy (Fraction.__float__ rounds once)."""
    array = np.asarray(array, dtype=object)
    return np.array([float(entry) for entry in array.ravel()], dtype=np.float64).reshape(array.shape)
