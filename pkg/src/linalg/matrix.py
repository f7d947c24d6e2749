"""Exact rational matrices.

Row reduction goes through ``sympy.polys.matrices.DomainMatrix`` over QQ;
entries are stored and returned as ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra.involution import to_fraction, to_qq
from src.qseries.series import QSeries

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class QMatrix:
    """Dense row-major matrix of rationals.

    Attributes:
        rows: Number of rows
        cols: Number of columns
        entries: ``rows`` tuples of ``cols`` Fractions each
    """

    rows: int
    cols: int
    entries: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = 0) -> "QMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_series(cls, columns: Sequence[QSeries]) -> "QMatrix":
        """One column per series, one row per q-power 0..N.

        Raises:
            ValueError: If the series have different truncation orders
        """
        if not columns:
            return cls(0, 0, ())
        orders = {s.order for s in columns}
        if len(orders) != 1:
            raise ValueError(f"series have different truncation orders: {sorted(orders)}")
        n = columns[0].order + 1
        return cls(n, len(columns), tuple(tuple(s.coeffs[i] for s in columns) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return QMatrix(
            self.rows,
            self.cols + other.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.cols} columns")
        v = [Fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries)

    def to_domain(self) -> DomainMatrix:
        rep = [[to_qq(x) for x in row] for row in self.entries]
        return DomainMatrix(rep, (self.rows, self.cols), QQ)

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "QMatrix":
        rows, cols = dm.shape
        return cls(rows, cols, tuple(tuple(to_fraction(x) for x in row) for row in dm.to_list()))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)


def rref(m: QMatrix) -> Tuple[QMatrix, Tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return m, ()
    reduced, pivots = m.to_domain().rref()
    return QMatrix.from_domain(reduced), tuple(int(p) for p in pivots)


def rank(m: QMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: QMatrix) -> List[Vector]:
    """Basis of {v : m v = 0}, one vector per free column with a 1 in that column."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return list(QMatrix.identity(m.cols).entries)
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i][free]
        basis.append(tuple(v))
    return basis


def solve(m: QMatrix, b: Sequence) -> Optional[Vector]:
    """One solution of m x = b with free variables set to zero, or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {m.rows} rows")
    if m.cols == 0:
        return () if not any(b) else None
    augmented = m.hstack(QMatrix(m.rows, 1, tuple((Fraction(x),) for x in b)))
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced.entries[i][m.cols]
    return tuple(x)
