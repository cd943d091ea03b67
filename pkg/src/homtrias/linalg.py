"""Exact rational linear algebra: matrices, reduced row echelon form, nullspaces.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator. Matrices are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot convert {value!r} to an exact scalar")


def parse_scalar(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            d = int(den)
            if d <= 0:
                raise ValueError
            return Fraction(int(num), d)
        return Fraction(int(num))
    except ValueError:
        raise ValueError(f"not a rational scalar: {text!r}") from None


def format_scalar(x: Fraction) -> str:
    """Text form ``p/q``; the denominator is omitted when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(scalar(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(scalar(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        n = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(n)], cols=len(columns))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def flatten(self) -> Vector:
        """Row-major vectorization."""
        return self.entries

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __str__(self) -> str:
        cells = [[format_scalar(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _same_shape(a: Matrix, b: Matrix) -> None:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        ai = a.row(i)
        for j in range(b.cols):
            s = ZERO
            for k in range(a.cols):
                if ai[k]:
                    s += ai[k] * b.entries[k * b.cols + j]
            out.append(s)
    return Matrix(a.rows, b.cols, tuple(out))


def matvec(a: Matrix, v: Sequence) -> Vector:
    if a.cols != len(v):
        raise ValueError(f"cannot apply {a.rows}x{a.cols} matrix to a length-{len(v)} vector")
    return tuple(sum((a.entries[i * a.cols + k] * v[k] for k in range(a.cols) if v[k]), ZERO)
                 for i in range(a.rows))


def _eliminate(m: Matrix):
    """Gauss-Jordan on a copy of ``m``; also returns the pivot values used."""
    rows = m.to_rows()
    nrows, ncols = m.rows, m.cols
    pivot_cols: list[int] = []
    pivot_values: list[Fraction] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        pivot_values.append(piv)
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivot_cols.append(c)
        r += 1
    return Matrix.from_rows(rows, cols=ncols), pivot_cols, pivot_values


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form over Q.

    Returns ``(reduced, rank, pivot_cols)`` with ``pivot_cols`` ascending.
    """
    reduced, pivot_cols, _ = _eliminate(m)
    return reduced, len(pivot_cols), pivot_cols


def pivot_values(m: Matrix) -> list[Fraction]:
    """The pivot elements met during elimination, before normalisation."""
    return _eliminate(m)[2]


def rank(m: Matrix) -> int:
    return rref(m)[1]


def nullspace_basis(m: Matrix) -> list[Vector]:
    """Canonical kernel basis read off the RREF.

    One vector per free column ``j``: that coordinate is 1, the other free
    coordinates are 0 and the pivot coordinates are solved for.
    """
    reduced, _, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[j] = ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced[r, j]
        basis.append(tuple(v))
    return basis


def stack(*mats: Matrix, cols: int | None = None) -> Matrix:
    """Vertical concatenation. ``cols`` is needed when every part is empty."""
    parts = [x for x in mats if x.rows]
    if cols is None:
        cols = next((x.cols for x in mats), 0)
    entries: list = []
    for x in parts:
        if x.cols != cols:
            raise ValueError("column count mismatch in stack")
        entries.extend(x.entries)
    return Matrix(len(entries) // cols if cols else 0, cols, tuple(entries))


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return rank(Matrix.from_rows(vectors))


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    """Exact membership test: adjoining ``v`` leaves the rank unchanged."""
    if all(x == 0 for x in v):
        return True
    return span_rank(list(vectors) + [v]) == span_rank(vectors)


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb and span_rank(list(a) + list(b)) == ra


def charpoly(m: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(tI - m), coefficients from t^n down to t^0.

    Faddeev-LeVerrier recursion; exact over Q.
    """
    if m.rows != m.cols:
        raise ValueError("charpoly needs a square matrix")
    n = m.rows
    coeffs = [ONE]
    mk = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = matmul(m, mk + ident.scale(coeffs[-1]))
        trace = sum((mk[i, i] for i in range(n)), ZERO)
        coeffs.append(-trace / k)
    return coeffs
