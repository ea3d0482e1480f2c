"""Dense square matrices over the exact rationals.

This is the arithmetic backbone for every intersection-lattice computation
in the package: fraction-free Bareiss determinants, exact Gauss-Jordan
inverses, Sylvester-style negative-definiteness tests and the sign report
for inverse matrices.  Matrices are immutable; all operations return new
values and are safe to run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SingularMatrixError, ValidationError
from .rationals import format_rational, parse_rational


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(f"matrix entries must be exact rationals, got {value!r}")


@dataclass(frozen=True)
class ExactMatrix:
    """An n-by-n matrix of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValidationError(
                    f"matrix must be square, got a row of length {len(row)} in size {n}"
                )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        return cls(tuple(tuple(_coerce(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def transpose(self) -> "ExactMatrix":
        n = self.n
        return ExactMatrix(tuple(tuple(self.rows[i][j] for i in range(n)) for j in range(n)))

    def neg(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-v for v in row) for row in self.rows))

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n != other.n:
            raise ValidationError("dimension mismatch in matrix product")
        n = self.n
        cols = other.transpose().rows
        return ExactMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def matvec(self, vec: Sequence) -> tuple[Fraction, ...]:
        if len(vec) != self.n:
            raise ValidationError("dimension mismatch in matrix-vector product")
        v = [_coerce(x) for x in vec]
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.rows for v in row)

    # -- determinants ------------------------------------------------------

    def determinant(self) -> Fraction:
        """Exact determinant by fraction-free Bareiss elimination with row swaps."""
        n = self.n
        if n == 0:
            return Fraction(1)
        m = [list(row) for row in self.rows]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if m[k][k] == 0:
                for r in range(k + 1, n):
                    if m[r][k] != 0:
                        m[k], m[r] = m[r], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
                m[i][k] = Fraction(0)
            prev = pivot
        return sign * m[n - 1][n - 1]

    def leading_principal_minors(self) -> tuple[Fraction, ...]:
        """The n leading principal minors, via one swap-free Bareiss sweep.

        The k-th Bareiss pivot is exactly the k-th leading minor.  When a
        zero pivot is hit the sweep cannot continue, which is precisely the
        situation where that minor is zero; the remaining minors are then
        computed by independent sub-determinants.
        """
        n = self.n
        m = [list(row) for row in self.rows]
        minors: list[Fraction] = []
        prev = Fraction(1)
        for k in range(n):
            pivot = m[k][k]
            minors.append(pivot)
            if pivot == 0:
                for size in range(k + 2, n + 1):
                    sub = ExactMatrix(tuple(tuple(self.rows[i][:size]) for i in range(size)))
                    minors.append(sub.determinant())
                return tuple(minors)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
                m[i][k] = Fraction(0)
            prev = pivot
        return tuple(minors)

    # -- inverses and solving ----------------------------------------------

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan elimination; raises on singular input.

        Integer matrices take a fraction-free route (Jordan variant of
        Bareiss elimination) that defers all divisions to a single final
        one by the determinant.
        """
        if self.is_integral():
            return self._inverse_fraction_free()
        n = self.n
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular, no exact inverse")
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            pivot = aug[col][col]
            aug[col] = [v / pivot for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
        return ExactMatrix(tuple(tuple(row[n:]) for row in aug))

    def _inverse_fraction_free(self) -> "ExactMatrix":
        n = self.n
        m = [
            [row[j].numerator for j in range(n)] + [int(i == j) for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        prev = 1
        for k in range(n):
            if m[k][k] == 0:
                for r in range(k + 1, n):
                    if m[r][k] != 0:
                        m[k], m[r] = m[r], m[k]
                        for c in range(2 * n):
                            m[k][c] = -m[k][c]
                        break
                else:
                    raise SingularMatrixError("matrix is singular, no exact inverse")
            pivot = m[k][k]
            for r in range(n):
                if r == k:
                    continue
                factor = m[r][k]
                row_r, row_k = m[r], m[k]
                for c in range(2 * n):
                    if c == k:
                        continue
                    value = row_r[c] * pivot - factor * row_k[c]
                    quotient, remainder = divmod(value, prev)
                    if remainder:
                        raise SingularMatrixError(
                            "fraction-free elimination lost exactness; matrix is not integral"
                        )
                    row_r[c] = quotient
                row_r[k] = 0
            prev = pivot
        det = m[n - 1][n - 1] if n else 1
        return ExactMatrix(
            tuple(tuple(Fraction(m[i][n + j], det) for j in range(n)) for i in range(n))
        )

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...]:
        """Solve M x = rhs exactly; raises SingularMatrixError when det = 0."""
        n = self.n
        if len(rhs) != n:
            raise ValidationError("right-hand side has wrong length")
        aug = [list(row) + [_coerce(rhs[i])] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular, cannot solve")
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            pivot = aug[col][col]
            aug[col] = [v / pivot for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
        return tuple(aug[i][n] for i in range(n))

    # -- serialization -------------------------------------------------------

    def to_doc(self) -> dict:
        return {"n": self.n, "rows": [[format_rational(v) for v in row] for row in self.rows]}

    @classmethod
    def from_doc(cls, doc: dict) -> "ExactMatrix":
        return cls.from_rows(doc["rows"])

    def __str__(self):
        body = "; ".join(" ".join(format_rational(v) for v in row) for row in self.rows)
        return f"[{body}]"


def is_negative_definite(matrix: ExactMatrix) -> bool:
    """Sylvester test: (-1)^k times the k-th leading minor is positive for all k.

    Only symmetric matrices are accepted; the test is exact.
    """
    if not matrix.is_symmetric():
        raise ValidationError("negative-definiteness is only defined for symmetric matrices")
    prev = Fraction(1)
    m = [list(row) for row in matrix.rows]
    n = matrix.n
    for k in range(n):
        pivot = m[k][k]
        if (-1) ** (k + 1) * pivot <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = pivot
    return True


@dataclass(frozen=True)
class InverseSignReport:
    """Sign audit of an inverse matrix.

    ``offending_entries`` lists positive entries as (i, j, value);
    ``zero_entries`` lists the vanishing ones, which is what distinguishes a
    merely non-positive inverse from the strictly negative inverse expected
    of a connected negative-definite intersection lattice.
    """

    all_nonpositive: bool
    offending_entries: tuple[tuple[int, int, Fraction], ...]
    zero_entries: tuple[tuple[int, int], ...]

    @property
    def strictly_negative(self) -> bool:
        return self.all_nonpositive and not self.zero_entries

    def to_doc(self) -> dict:
        return {
            "all_nonpositive": self.all_nonpositive,
            "strictly_negative": self.strictly_negative,
            "offending_entries": [
                [i, j, format_rational(v)] for i, j, v in self.offending_entries
            ],
            "zero_entries": [[i, j] for i, j in self.zero_entries],
        }


def check_inverse_nonpositive(matrix: ExactMatrix) -> InverseSignReport:
    """Invert exactly and report the sign pattern of the inverse."""
    inv = matrix.inverse()
    offending = []
    zeros = []
    for i, row in enumerate(inv.rows):
        for j, v in enumerate(row):
            if v > 0:
                offending.append((i, j, v))
            elif v == 0:
                zeros.append((i, j))
    return InverseSignReport(
        all_nonpositive=not offending,
        offending_entries=tuple(offending),
        zero_entries=tuple(zeros),
    )
