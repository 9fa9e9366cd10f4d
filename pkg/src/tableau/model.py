"""Butcher tableau data model."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from core.exceptions import TableauStructureError
from exact import RMatrix, RationalLike, as_rmatrix, as_rvector, matmul, ones, rvector, to_float


@dataclass(frozen=True, eq=False)
class Tableau:
    """
    Explicit Runge-Kutta coefficients (A, b, c) held exactly.

    A is strictly lower triangular and c = A e. Instances are immutable;
    use ``Tableau.build`` to validate raw rows.
    """
    A: RMatrix
    b: RMatrix
    c: RMatrix
    name: str = ""
    claimed_order: Optional[int] = None
    claimed_wso: Optional[int] = None

    @classmethod
    def build(
        cls,
        A: Sequence[Sequence[RationalLike]],
        b: Sequence[RationalLike],
        c: Optional[Sequence[RationalLike]] = None,
        name: str = "",
        claimed_order: Optional[int] = None,
        claimed_wso: Optional[int] = None,
    ) -> "Tableau":
        """
        Validate and freeze a tableau.

        Args:
            A: s rows of s rationals
            b: s weights
            c: optional abscissas; computed as A e when omitted
            name: display name, e.g. "(5,3,3)"
            claimed_order: order the source claims (checked by ``verify``)
            claimed_wso: weak stage order the source claims

        Raises:
            TableauStructureError: shapes disagree, A is not strictly lower
                triangular, or c differs from A e.
        """
        rows = [list(row) for row in A]
        s = len(rows)
        if s == 0:
            raise TableauStructureError("Tableau needs at least one stage", field="A")
        if any(len(row) != s for row in rows):
            raise TableauStructureError(f"A must be {s}x{s}", field="A")
        matrix = as_rmatrix(rows)
        weights = as_rvector(list(b))
        if weights.shape[0] != s:
            raise TableauStructureError(f"b must have {s} entries, got {weights.shape[0]}", field="b")

        for i in range(s):
            for j in range(i, s):
                if matrix[i, j] != 0:
                    raise TableauStructureError(
                        f"A is not strictly lower triangular: a[{i + 1}][{j + 1}] = {matrix[i, j]}",
                        field="A",
                    )

        row_sums = matmul(matrix, ones(s))
        if c is None:
            abscissas = row_sums
        else:
            abscissas = as_rvector(list(c))
            if abscissas.shape[0] != s:
                raise TableauStructureError(f"c must have {s} entries", field="c")
            mismatch = [i + 1 for i in range(s) if abscissas[i] != row_sums[i]]
            if mismatch:
                raise TableauStructureError(
                    f"c differs from A e at stages {mismatch}", field="c"
                )

        return cls(
            A=matrix,
            b=weights,
            c=abscissas,
            name=name,
            claimed_order=claimed_order,
            claimed_wso=claimed_wso,
        )

    @property
    def s(self) -> int:
        return self.A.shape[0]

    @property
    def e(self) -> RMatrix:
        return ones(self.s)

    def renamed(self, name: str) -> "Tableau":
        return Tableau(self.A, self.b, self.c, name, self.claimed_order, self.claimed_wso)

    def same_coefficients(self, other: "Tableau") -> bool:
        """Exact equality of (A, b, c)."""
        return (
            self.s == other.s
            and all(x == y for x, y in zip(self.A.ravel(), other.A.ravel()))
            and all(x == y for x, y in zip(self.b, other.b))
            and all(x == y for x, y in zip(self.c, other.c))
        )

    def distinct_abscissas(self) -> int:
        return len(set(self.c.tolist()))

    def permuted(self, order: Sequence[int]) -> "Tableau":
        """Relabel stages: new stage i is old stage order[i] (need not stay explicit)."""
        index = list(order)
        return Tableau(
            A=as_rmatrix(self.A[np.ix_(index, index)]),
            b=rvector(self.b[index].tolist()),
            c=rvector(self.c[index].tolist()),
            name=self.name,
            claimed_order=self.claimed_order,
            claimed_wso=self.claimed_wso,
        )

    def to_floats(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Binary64 copies of (A, b, c)."""
        return to_float(self.A), to_float(self.b), to_float(self.c)


@dataclass(frozen=True)
class StabilityPolynomial:
    """R(z) = sum_j coeffs[j] z^j with exact coefficients."""
    coeffs: Tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        nonzero = [j for j, value in enumerate(self.coeffs) if value != 0]
        return nonzero[-1] if nonzero else 0

    def trimmed(self) -> Tuple[Fraction, ...]:
        return self.coeffs[: self.degree + 1]

    def evaluate(self, z: complex) -> complex:
        return np.polynomial.polynomial.polyval(z, [float(value) for value in self.coeffs])

    def equals(self, other: "StabilityPolynomial") -> bool:
        return self.trimmed() == other.trimmed()


@dataclass(frozen=True, eq=False)
class ReducibilityCertificate:
    """
    Outcome of the S-reducibility search.

    ``partition`` lists blocks of 0-based stage indices; ``B`` is the r x r
    matrix with A S = S B.
    """
    reducible: bool
    partition: Optional[Tuple[Tuple[int, ...], ...]] = None
    B: Optional[RMatrix] = None
    searched: int = field(default=0)
