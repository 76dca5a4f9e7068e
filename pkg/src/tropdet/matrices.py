"""Core matrix types and the plain-text / structured interchange formats.

The central domain is D(m, n): square n-by-n matrices of non-negative
integers in which every row and every column sums to the same value m.
``validate_ds`` is the certifying entry point into that domain; the rest of
the package passes ``DSMatrix`` values around instead of re-checking line
sums everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DomainError,
    LineSumError,
    MatrixParseError,
    MatrixShapeError,
)

__all__ = [
    "IntMatrix",
    "DSMatrix",
    "SplitParams",
    "parse_matrix",
    "serialize",
    "validate_ds",
    "split",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable matrix of non-negative integers, stored row-major.

    Zero rows or columns are legal (blocks cut out of a larger matrix may
    be empty); parsing, by contrast, never produces an empty matrix.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise MatrixShapeError(
                f"negative dimensions {self.rows}x{self.cols}"
            )
        if len(self.entries) != self.rows * self.cols:
            raise MatrixShapeError(
                f"{self.rows}x{self.cols} matrix needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for k, value in enumerate(self.entries):
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise MatrixParseError(
                    f"entry {k} is not an integer: {value!r}"
                )
            if value < 0:
                raise MatrixParseError(f"entry {k} is negative: {value}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise MatrixShapeError("no rows given")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise MatrixShapeError(
                    f"row {i} has {len(r)} entries, expected {width}"
                )
        flat = tuple(int(x) for row in rows for x in row)
        return cls(len(rows), width, flat)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(self.row(i)) for i in range(self.rows))

    def col_sums(self) -> tuple[int, ...]:
        sums = [0] * self.cols
        for i in range(self.rows):
            base = i * self.cols
            for j in range(self.cols):
                sums[j] += self.entries[base + j]
        return tuple(sums)

    def submatrix(
        self, row_idx: Iterable[int], col_idx: Iterable[int]
    ) -> "IntMatrix":
        """Matrix restricted to (and reordered by) the given index lists."""
        rows = list(row_idx)
        cols = list(col_idx)
        flat = tuple(
            self.entries[i * self.cols + j] for i in rows for j in cols
        )
        return IntMatrix(len(rows), len(cols), flat)

    def to_nested(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(
            self.rows, self.cols
        )


@dataclass(frozen=True)
class DSMatrix:
    """A certified member of D(m, n).  Construction re-checks the line sums,
    so holding a DSMatrix is itself the membership certificate."""

    matrix: IntMatrix
    m: int

    def __post_init__(self):
        _check_membership(self.matrix, self.m)

    @property
    def n(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class SplitParams:
    """The division m = q*n + r with 0 <= r < n that drives every bound."""

    m: int
    n: int
    q: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise DomainError(f"need m >= 1 and n >= 1, got m={self.m} n={self.n}")
        if not (0 <= self.r < self.n) or self.q * self.n + self.r != self.m:
            raise DomainError(
                f"inconsistent split m={self.m} n={self.n} q={self.q} r={self.r}"
            )


def split(m: int, n: int) -> SplitParams:
    """Divide the line sum by the matrix order: m = q*n + r, 0 <= r < n."""
    if m < 1 or n < 1:
        raise DomainError(f"need m >= 1 and n >= 1, got m={m} n={n}")
    q, r = divmod(m, n)
    return SplitParams(m=m, n=n, q=q, r=r)


def _check_membership(matrix: IntMatrix, m: int) -> None:
    if matrix.rows != matrix.cols:
        raise MatrixShapeError(
            f"not square: {matrix.rows}x{matrix.cols}"
        )
    if matrix.rows < 1:
        raise MatrixShapeError("empty matrix cannot be doubly stochastic")
    row_sums = matrix.row_sums()
    col_sums = matrix.col_sums()
    # Rows are compared against row 0, columns against column 0.  Equal rows
    # and equal columns force the two reference sums to agree (both equal the
    # total divided by n), so only the cross-check against m remains.
    for i, total in enumerate(row_sums):
        if total != row_sums[0]:
            raise LineSumError("row", i, total, row_sums[0])
    for j, total in enumerate(col_sums):
        if total != col_sums[0]:
            raise LineSumError("column", j, total, col_sums[0])
    if row_sums[0] != m:
        raise LineSumError("row", 0, row_sums[0], m)


def validate_ds(matrix: IntMatrix) -> DSMatrix:
    """Certify membership in D(m, n), inferring m from the first row.

    Raises MatrixShapeError for non-square input and LineSumError naming the
    first offending row or column otherwise.
    """
    if matrix.rows != matrix.cols:
        raise MatrixShapeError(f"not square: {matrix.rows}x{matrix.cols}")
    if matrix.rows < 1:
        raise MatrixShapeError("empty matrix cannot be doubly stochastic")
    return DSMatrix(matrix=matrix, m=sum(matrix.row(0)))


def parse_matrix(text: str) -> IntMatrix:
    """Parse the plain interchange format.

    One matrix row per line, entries are decimal non-negative integers
    separated by whitespace.  LF and CRLF both work; trailing blank lines
    are ignored.  Anything else (empty input, ragged rows, negative or
    non-integer tokens) raises.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixParseError("empty input")
    rows: list[list[int]] = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            raise MatrixParseError(f"line {lineno} is blank")
        row = []
        for tok in tokens:
            if not (tok.isascii() and tok.isdigit()):
                raise MatrixParseError(
                    f"line {lineno}: bad token {tok!r} "
                    "(decimal non-negative integers only)"
                )
            row.append(int(tok))
        rows.append(row)
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise MatrixShapeError(
                f"row {i + 1} has {len(row)} entries, expected {width}"
            )
    return IntMatrix(len(rows), width, tuple(x for row in rows for x in row))


def serialize(matrix: IntMatrix | DSMatrix, fmt: str = "plain") -> str:
    """Render a matrix in the plain or structured (JSON) format.

    Plain output round-trips through parse_matrix.  Structured output
    carries rows, cols and the row-major entries, plus m when the input is
    a certified DSMatrix.
    """
    m: int | None = None
    if isinstance(matrix, DSMatrix):
        m = matrix.m
        matrix = matrix.matrix
    if fmt == "plain":
        return "\n".join(
            " ".join(str(x) for x in matrix.row(i)) for i in range(matrix.rows)
        )
    if fmt == "structured":
        doc: dict = {
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": list(matrix.entries),
        }
        if m is not None:
            doc["m"] = m
        return json.dumps(doc)
    raise DomainError(f"unknown format {fmt!r} (expected 'plain' or 'structured')")
