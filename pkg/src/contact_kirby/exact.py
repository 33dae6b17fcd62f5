"""Exact scalars and dense matrix algebra over the integers and rationals.

Every quantity in this package is an integer or a reduced fraction; no
floating point appears anywhere.  The scalar type is
:class:`fractions.Fraction`, re-exported as :data:`Rational` (reduced
numerator/denominator, positive denominator, zero stored as 0/1).

Matrices are small and dense, so determinants and inverses use
fraction-free (Bareiss) elimination: every intermediate value is an
integer minor of the input, each division is exact, and Python's
arbitrary-precision integers absorb the entry growth.  The cofactor
expansion route is deliberately *not* implemented here; it lives in the
test suite as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import InvalidInputError, SingularMatrixError

Rational = Fraction
IntVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]

Scalar = Union[int, Fraction]


def reduce(num: int, den: int) -> Fraction:
    """Return the unique reduced fraction num/den with positive denominator."""
    if den == 0:
        raise InvalidInputError("denominator must be nonzero")
    return Fraction(num, den)


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"matrix entries must be integers, got {value!r}")
    return value


class IntMatrix:
    """Immutable square matrix with arbitrary-precision integer entries."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        entries = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if not entries:
            raise InvalidInputError("matrix needs at least one row")
        if any(len(row) != len(entries) for row in entries):
            raise InvalidInputError("matrix must be square")
        self.entries = entries

    @property
    def n(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(row) for row in self.entries]})"


class RationalMatrix:
    """Immutable square matrix with exact rational entries."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not entries:
            raise InvalidInputError("matrix needs at least one row")
        if any(len(row) != len(entries) for row in entries):
            raise InvalidInputError("matrix must be square")
        self.entries = entries

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(row) for row in self.entries]})"


def det(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    After step k every entry is a (k+1)x(k+1) minor of the input, so the
    division by the previous pivot is exact and everything stays an
    integer.  Row swaps only flip the sign.
    """
    n = matrix.n
    a = [list(row) for row in matrix.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def invert(matrix: IntMatrix) -> RationalMatrix:
    """Exact inverse: fraction-free elimination, then rational back-substitution.

    The forward pass runs Bareiss elimination on ``[M | I]``, leaving an
    integer upper-triangular system.  Back-substitution keeps each partial
    solution column over a single shared integer denominator (the product
    of the pivots consumed so far), so only the final entries are reduced.
    """
    n = matrix.n
    width = 2 * n
    a = [
        list(row) + [1 if i == j else 0 for j in range(n)]
        for i, row in enumerate(matrix.entries)
    ]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular, no inverse exists")
        pivot = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    columns = []
    for c in range(n, width):
        num = [0] * n
        den = 1
        for i in range(n - 1, -1, -1):
            row_i = a[i]
            s = row_i[c] * den
            for j in range(i + 1, n):
                s -= row_i[j] * num[j]
            pivot = row_i[i]
            num = [v * pivot for v in num]
            num[i] = s
            den *= pivot
        columns.append([Fraction(v, den) for v in num])
    return RationalMatrix(
        [[columns[j][i] for j in range(n)] for i in range(n)]
    )


def apply(matrix, vector: Sequence[Scalar]) -> tuple:
    """Exact matrix-vector product, returned as a tuple of Fractions."""
    rows = matrix.entries
    v = tuple(vector)
    if len(v) != len(rows):
        raise InvalidInputError(
            f"dimension mismatch: matrix is {len(rows)}x{len(rows)}, vector has length {len(v)}"
        )
    return tuple(
        sum((Fraction(rij) * vj for rij, vj in zip(row, v)), start=Fraction(0))
        for row in rows
    )


def inner(u: Sequence[Scalar], w: Sequence[Scalar]) -> Fraction:
    """Exact dot product of two equal-length vectors."""
    u = tuple(u)
    w = tuple(w)
    if len(u) != len(w):
        raise InvalidInputError(
            f"dimension mismatch: vectors have lengths {len(u)} and {len(w)}"
        )
    return sum((Fraction(a) * b for a, b in zip(u, w)), start=Fraction(0))
