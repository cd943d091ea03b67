"""Structure-constant model of a Hom-associative trialgebra.

A trialgebra of dimension ``n`` is three ``n x n x n`` tensors (the products
``⊣``, ``⊢`` and ``⊥``) plus an ``n x n`` twist matrix ``a``. Conventions:

* ``e_i ∘ e_j = sum_k c[i][j][k] e_k``
* ``α(e_i) = sum_j a[j][i] e_j``, i.e. column ``i`` of ``a`` is ``α(e_i)``.

Indices are 0-based in code and 1-based in files and printed output.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .linalg import ZERO, Matrix, Vector, format_scalar, matvec, parse_scalar, scalar, vector


class Op(enum.Enum):
    LEFT = "left"      # ⊣
    RIGHT = "right"    # ⊢
    MIDDLE = "middle"  # ⊥

    @property
    def symbol(self) -> str:
        return {"left": "⊣", "right": "⊢", "middle": "⊥"}[self.value]

    @classmethod
    def parse(cls, text: str) -> "Op":
        key = text.strip().lower()
        aliases = {"⊣": "left", "-|": "left", "⊢": "right", "|-": "right", "⊥": "middle", "_|_": "middle"}
        return cls(aliases.get(key, key))


OPS = (Op.LEFT, Op.RIGHT, Op.MIDDLE)


class AlgebraFormatError(ValueError):
    """Raised when an algebra file cannot be parsed; names file, line and field."""

    def __init__(self, message: str, source: str = "<string>", line: int | None = None,
                 field: str | None = None):
        self.source, self.line, self.field = source, line, field
        where = source if line is None else f"{source}:{line}"
        if field:
            where += f" [{field}]"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class ProductTensor:
    dim: int
    c: tuple  # c[i][j][k], nested tuples of Fraction

    def __post_init__(self):
        n = self.dim
        if len(self.c) != n or any(len(ci) != n or any(len(cij) != n for cij in ci) for ci in self.c):
            raise ValueError(f"product tensor must be {n}x{n}x{n}")

    @classmethod
    def zeros(cls, n: int) -> "ProductTensor":
        return cls(n, tuple(tuple((ZERO,) * n for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_nested(cls, data: Sequence) -> "ProductTensor":
        return cls(len(data), tuple(tuple(vector(cij) for cij in ci) for ci in data))

    def __getitem__(self, ijk: tuple[int, int, int]) -> Fraction:
        i, j, k = ijk
        return self.c[i][j][k]

    def product(self, i: int, j: int) -> Vector:
        """Coordinates of ``e_i ∘ e_j``."""
        return self.c[i][j]

    def apply(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError(f"expected vectors of length {n}")
        out = [ZERO] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                w = x[i] * y[j]
                cij = self.c[i][j]
                for k in range(n):
                    if cij[k]:
                        out[k] += w * cij[k]
        return tuple(out)

    def map(self, fn) -> "ProductTensor":
        return ProductTensor(self.dim, tuple(tuple(tuple(fn(x) for x in cij) for cij in ci) for ci in self.c))

    def combine(self, other: "ProductTensor", a=1, b=1) -> "ProductTensor":
        """Entrywise ``a*self + b*other``."""
        a, b = scalar(a), scalar(b)
        n = self.dim
        return ProductTensor(n, tuple(
            tuple(tuple(a * self.c[i][j][k] + b * other.c[i][j][k] for k in range(n)) for j in range(n))
            for i in range(n)))

    def swapped(self) -> "ProductTensor":
        """The opposite product: ``x ∘' y = y ∘ x``."""
        n = self.dim
        return ProductTensor(n, tuple(tuple(self.c[j][i] for j in range(n)) for i in range(n)))

    def is_zero(self) -> bool:
        return all(x == 0 for ci in self.c for cij in ci for x in cij)


@dataclass(frozen=True)
class TwistMap:
    dim: int
    a: Matrix

    def __post_init__(self):
        if self.a.rows != self.dim or self.a.cols != self.dim:
            raise ValueError(f"twist matrix must be {self.dim}x{self.dim}")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "TwistMap":
        return cls(len(columns), Matrix.from_columns([vector(c) for c in columns]))

    @classmethod
    def identity(cls, n: int) -> "TwistMap":
        return cls(n, Matrix.identity(n))

    def image(self, i: int) -> Vector:
        return self.a.column(i)

    def apply(self, x: Sequence) -> Vector:
        return matvec(self.a, x)


@dataclass(frozen=True)
class HomTrialgebra:
    dim: int
    left: ProductTensor
    right: ProductTensor
    middle: ProductTensor
    alpha: TwistMap
    label: str = ""
    provenance: Mapping | None = field(default=None, compare=False)

    def __post_init__(self):
        for part in (self.left, self.right, self.middle, self.alpha):
            if part.dim != self.dim:
                raise ValueError(f"component of dimension {part.dim} in a dimension-{self.dim} algebra")

    def tensor(self, op: Op) -> ProductTensor:
        return {Op.LEFT: self.left, Op.RIGHT: self.right, Op.MIDDLE: self.middle}[op]

    def tensors(self) -> tuple[ProductTensor, ProductTensor, ProductTensor]:
        return self.left, self.right, self.middle

    def relabel(self, label: str, provenance: Mapping | None = None) -> "HomTrialgebra":
        return replace(self, label=label, provenance=provenance)

    @classmethod
    def zero(cls, n: int, alpha: TwistMap | None = None, label: str = "zero") -> "HomTrialgebra":
        z = ProductTensor.zeros(n)
        return cls(n, z, z, z, alpha if alpha is not None else TwistMap(n, Matrix.zeros(n, n)), label)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def multiply(A: HomTrialgebra, op: Op, x: Sequence, y: Sequence) -> Vector:
    """Bilinear evaluation of the selected product on coordinate vectors."""
    return A.tensor(op).apply(x, y)


def apply_twist(A: HomTrialgebra, x: Sequence) -> Vector:
    if len(x) != A.dim:
        raise ValueError(f"expected a vector of length {A.dim}")
    return A.alpha.apply(x)


def from_tables(dim: int, table: Iterable[tuple], alpha_columns: Sequence[Sequence] | None = None,
                label: str = "") -> HomTrialgebra:
    """Build an algebra from sparse product lines ``(op, i, j, result)``.

    ``i`` and ``j`` are 0-based. Products not listed are zero. A repeated
    ``(op, i, j)`` raises ``ValueError``. ``alpha_columns[i]`` is ``α(e_i)``;
    omitted means the zero map.
    """
    c = {op: [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)] for op in OPS}
    seen = set()
    for op, i, j, result in table:
        op = op if isinstance(op, Op) else Op.parse(op)
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"index out of range in {op.value} product ({i + 1},{j + 1}) for dim {dim}")
        if (op, i, j) in seen:
            raise ValueError(f"duplicate {op.value} product entry for e{i + 1}{op.symbol}e{j + 1}")
        seen.add((op, i, j))
        result = vector(result)
        if len(result) != dim:
            raise ValueError(f"result vector for e{i + 1}{op.symbol}e{j + 1} has wrong length")
        c[op][i][j] = list(result)
    if alpha_columns is None:
        alpha = TwistMap(dim, Matrix.zeros(dim, dim))
    else:
        if len(alpha_columns) != dim:
            raise ValueError("need one twist column per basis vector")
        alpha = TwistMap.from_columns(alpha_columns)
    left, right, middle = (ProductTensor.from_nested(c[op]) for op in OPS)
    return HomTrialgebra(dim, left, right, middle, alpha, label)


# --- file format ---------------------------------------------------------------------------
#
# {"dim": n, "label": str, "alpha": [[...], ...],  # row-major a, a[j][i] = coefficient of e_j in α(e_i)
#  "left": [{"i": 1, "j": 2, "v": ["1", "0"]}, ...], "right": [...], "middle": [...],
#  "provenance": {...}}                               # optional
#
# Indices are 1-based. Only nonzero products are written.

def to_json(A: HomTrialgebra) -> dict:
    n = A.dim
    doc: dict = {"dim": n, "label": A.label,
                 "alpha": [[format_scalar(x) for x in A.alpha.a.row(r)] for r in range(n)]}
    for op in OPS:
        t = A.tensor(op)
        doc[op.value] = [
            {"i": i + 1, "j": j + 1, "v": [format_scalar(x) for x in t.c[i][j]]}
            for i in range(n) for j in range(n) if any(t.c[i][j])
        ]
    if A.provenance:
        doc["provenance"] = dict(A.provenance)
    return doc


def dumps(A: HomTrialgebra) -> str:
    return json.dumps(to_json(A), indent=2, ensure_ascii=False) + "\n"


def _line_of(text: str, needle: str) -> int | None:
    for lineno, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return lineno
    return None


def _entry_line(text: str, key: str, idx: int) -> int | None:
    """Line of the ``idx``-th object in the list under ``key`` (best effort)."""
    start = _line_of(text, f'"{key}"')
    if start is None:
        return None
    lines = text.splitlines()
    seen = -1
    for lineno in range(start, len(lines) + 1):
        line = lines[lineno - 1]
        if lineno == start:
            line = line.split(f'"{key}"', 1)[1]
        seen += line.count("{")
        if seen >= idx:
            return lineno
    return start


def loads(text: str, source: str = "<string>") -> HomTrialgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(exc.msg, source, exc.lineno) from None
    return from_json(doc, source=source, text=text)


def from_json(doc: Mapping, source: str = "<json>", text: str | None = None) -> HomTrialgebra:
    def fail(msg, fld, needle=None, entry=None):
        line = None
        if text:
            line = _entry_line(text, *entry) if entry else _line_of(text, needle or f'"{fld}"')
        raise AlgebraFormatError(msg, source, line, fld)

    if not isinstance(doc, Mapping):
        fail("top level must be an object", "<root>", "{")
    n = doc.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        fail("dim must be a positive integer", "dim")
    alpha_rows = doc.get("alpha")
    if (not isinstance(alpha_rows, list) or len(alpha_rows) != n
            or any(not isinstance(r, list) or len(r) != n for r in alpha_rows)):
        fail(f"alpha must be a {n}x{n} list of rows", "alpha")
    try:
        a = Matrix.from_rows([[parse_scalar(str(x)) for x in r] for r in alpha_rows])
    except ValueError as exc:
        fail(str(exc), "alpha")
    table = []
    for op in OPS:
        entries = doc.get(op.value, [])
        if not isinstance(entries, list):
            fail("must be a list of products", op.value)
        for idx, e in enumerate(entries):
            fld = f"{op.value}[{idx}]"
            if not isinstance(e, Mapping) or not {"i", "j", "v"} <= set(e):
                fail("product needs keys i, j, v", fld, entry=(op.value, idx))
            i, j, v = e["i"], e["j"], e["v"]
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= n and 1 <= j <= n):
                fail(f"indices must be integers in 1..{n}", fld, entry=(op.value, idx))
            if not isinstance(v, list) or len(v) != n:
                fail(f"v must be a list of {n} scalars", fld, entry=(op.value, idx))
            try:
                table.append((op, i - 1, j - 1, [parse_scalar(str(x)) for x in v]))
            except ValueError as exc:
                fail(str(exc), fld, entry=(op.value, idx))
    try:
        A = from_tables(n, table, [a.column(i) for i in range(n)], str(doc.get("label", "")))
    except ValueError as exc:
        fail(str(exc), "products")
    prov = doc.get("provenance")
    return A.relabel(A.label, dict(prov) if isinstance(prov, Mapping) else None)


def load(path: str | Path) -> HomTrialgebra:
    path = Path(path)
    return loads(path.read_text(), source=str(path))


def save(A: HomTrialgebra, path: str | Path) -> None:
    Path(path).write_text(dumps(A))
