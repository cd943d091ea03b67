"""Derivations, inner derivations, centroids, centralizers and central derivations.

Each space is the exact nullspace of a linear system in the ``n*n`` entries of
an unknown map ``X`` (``X(e_p) = sum_q X[q][p] e_q``), vectorised row-major:
unknown ``r*n + p`` is ``X[r][p]``.

Row builders work on plain nested sequences so the same code assembles the
systems over Q (``Fraction`` entries) and over F_p (``int`` entries reduced
afterwards). Row order is fixed: twist-commutant rows first, then products in
the order ⊣, ⊢, ⊥ and lexicographic ``(i, j, r)``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import OPS, HomTrialgebra, basis_vector
from .linalg import ZERO, Matrix, format_scalar, in_span, rref, same_span, span_rank, stack


class SignConvention(enum.Enum):
    PLUS = "plus"    # X(x∘y) = X(x)∘α(y) + α(x)∘X(y)
    MINUS = "minus"  # X(x∘y) = X(x)∘α(y) - α(x)∘X(y), the printed inner-derivation systems

    @classmethod
    def parse(cls, value) -> "SignConvention":
        return value if isinstance(value, cls) else cls(str(value).lower())


PLUS, MINUS = SignConvention.PLUS, SignConvention.MINUS


# --- raw row builders -----------------------------------------------------------------------

def raw_parts(A: HomTrialgebra):
    """``(tensors, a)`` as nested lists: ``tensors[t][i][j][k]``, ``a[r][c]``."""
    tensors = [[[list(t.c[i][j]) for j in range(A.dim)] for i in range(A.dim)] for t in A.tensors()]
    return tensors, A.alpha.a.to_rows()


def twist_rows_raw(a, n: int) -> list[list]:
    """αX - Xα = 0, one row per entry (q, k)."""
    rows = []
    for q in range(n):
        for k in range(n):
            row = [0] * (n * n)
            for p in range(n):
                row[p * n + k] += a[q][p]
                row[q * n + p] -= a[p][k]
            rows.append(row)
    return rows


def derivation_rows_raw(tensors, a, n: int, sign: int) -> list[list]:
    """X(e_i∘e_j) - X(e_i)∘α(e_j) - sign·α(e_i)∘X(e_j) = 0 for each (product, i, j, r)."""
    rows = []
    for c in tensors:
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    row = [0] * (n * n)
                    for p in range(n):
                        row[r * n + p] += c[i][j][p]
                    for p in range(n):
                        for q in range(n):
                            if c[p][q][r]:
                                row[p * n + i] -= a[q][j] * c[p][q][r]
                                row[q * n + j] -= sign * a[p][i] * c[p][q][r]
                    rows.append(row)
    return rows


def centroid_rows_raw(tensors, a, n: int) -> list[list]:
    """ψ(e_i∘e_j) = ψ(e_i)∘α(e_j) and ψ(e_i∘e_j) = α(e_i)∘ψ(e_j)."""
    rows = []
    for c in tensors:
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    first = [0] * (n * n)
                    second = [0] * (n * n)
                    for p in range(n):
                        first[r * n + p] += c[i][j][p]
                        second[r * n + p] += c[i][j][p]
                    for p in range(n):
                        for q in range(n):
                            if c[p][q][r]:
                                first[p * n + i] -= a[q][j] * c[p][q][r]
                                second[q * n + j] -= a[p][i] * c[p][q][r]
                    rows.append(first)
                    rows.append(second)
    return rows


def center_rows_raw(tensors, a, n: int) -> list[list]:
    """Rows in the coordinates of x for α(x)•e_l = 0 and e_l•α(x) = 0."""
    rows = []
    for c in tensors:
        for l in range(n):
            for r in range(n):
                left = [0] * n
                right = [0] * n
                for k in range(n):
                    for q in range(n):
                        if a[q][k]:
                            left[k] += a[q][k] * c[q][l][r]
                            right[k] += a[q][k] * c[l][q][r]
                rows.append(left)
                rows.append(right)
    return rows


def central_rows_raw(tensors, center_tensors, a, n: int) -> list[list]:
    """ψ(e_i) in the center for every i, and ψ kills every product of basis vectors."""
    rows = []
    base = center_rows_raw(center_tensors, a, n)
    for i in range(n):
        for cr in base:
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + i] += cr[k]
            rows.append(row)
    for c in tensors:
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    row = [0] * (n * n)
                    for p in range(n):
                        row[r * n + p] += c[i][j][p]
                    rows.append(row)
    return rows


def _sign(convention: SignConvention) -> int:
    return 1 if SignConvention.parse(convention) is PLUS else -1


def _matrix(rows: list[list], cols: int) -> Matrix:
    return Matrix(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))


# --- solution spaces ------------------------------------------------------------------------

@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of ``rows x cols`` matrices given by a canonical basis.

    ``free`` lists the unknowns (row-major positions) set to 1 in each basis
    element; they name the free parameters when the space is printed.
    """

    shape: tuple[int, int]
    basis: tuple[Matrix, ...]
    free: tuple[int, ...] = ()
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def dim_ambient(self) -> int:
        return self.shape[0] * self.shape[1]

    def vectors(self) -> list[tuple]:
        return [b.flatten() for b in self.basis]

    def contains(self, m: Matrix) -> bool:
        return in_span(m.flatten(), self.vectors())

    def equals(self, other: "SubspaceBasis") -> bool:
        return same_span(self.vectors(), other.vectors())

    def symbolic(self, letter: str = "c", printed: bool = True) -> list[list[str]]:
        """Cells as linear forms in named free parameters.

        With ``printed`` (the default for square shapes) row ``p`` shows the
        image of ``e_p``, the layout of the classification tables, and the
        parameters are named after the leading entries of an echelon basis in
        that layout.
        """
        rows, cols = self.shape
        basis, free = list(self.basis), list(self.free)
        if printed and rows == cols and rows > 1:
            mats = [b.transpose() for b in basis]
            if mats:
                reduced, rk, pivots = rref(Matrix.from_rows([m.flatten() for m in mats], cols=rows * cols))
                mats = [Matrix(rows, cols, reduced.row(r)) for r in range(rk)]
                free = list(pivots)
            basis = mats
        names = [f"{letter}{p // cols + 1}{p % cols + 1}" if cols > 1 else f"{letter}{p + 1}"
                 for p in free]
        out = []
        for r in range(rows):
            line = []
            for c in range(cols):
                terms = [(b[r, c], nm) for b, nm in zip(basis, names) if b[r, c] != 0]
                line.append(_linear_text(terms))
            out.append(line)
        return out

    def render(self, letter: str = "c") -> str:
        cells = self.symbolic(letter)
        width = max((len(x) for r in cells for x in r), default=1)
        body = "\n".join("[ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in cells)
        title = f"{self.name}: " if self.name else ""
        return f"{title}dimension {self.dimension}\n{body}"

    def to_json(self, letter: str = "c") -> dict:
        return {
            "name": self.name,
            "shape": list(self.shape),
            "dimension": self.dimension,
            "free": [[p // self.shape[1] + 1, p % self.shape[1] + 1] for p in self.free],
            "layout": "basis: X[q][p] is the e_q coefficient of X(e_p); symbolic: row p is the image of e_p",
            "basis": [[[format_scalar(x) for x in b.row(r)] for r in range(b.rows)] for b in self.basis],
            "symbolic": self.symbolic(letter),
        }


def _linear_text(terms) -> str:
    if not terms:
        return "0"
    out = ""
    for coeff, name in terms:
        neg = coeff < 0
        mag = -coeff if neg else coeff
        body = name if mag == 1 else f"{format_scalar(mag)}{name}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += ("-" if neg else "+") + body
    return out


def solve(rows: Matrix, shape: tuple[int, int], name: str = "") -> SubspaceBasis:
    """Canonical nullspace of ``rows`` reshaped into matrices of ``shape``."""
    reduced, _, pivots = rref(rows)
    pivot_set = set(pivots)
    basis, free = [], []
    for j in range(rows.cols):
        if j in pivot_set:
            continue
        v = [ZERO] * rows.cols
        v[j] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r, j]
        basis.append(Matrix(shape[0], shape[1], tuple(v)))
        free.append(j)
    return SubspaceBasis(shape, tuple(basis), tuple(free), name)


def twist_commutant_rows(A: HomTrialgebra) -> Matrix:
    n = A.dim
    return _matrix(twist_rows_raw(A.alpha.a.to_rows(), n), n * n)


def derivation_rows(A: HomTrialgebra, convention=MINUS) -> Matrix:
    tensors, a = raw_parts(A)
    return _matrix(derivation_rows_raw(tensors, a, A.dim, _sign(convention)), A.dim * A.dim)


def derivation_system(A: HomTrialgebra, convention=MINUS) -> Matrix:
    return stack(twist_commutant_rows(A), derivation_rows(A, convention), cols=A.dim * A.dim)


def derivation_space(A: HomTrialgebra, convention=MINUS) -> SubspaceBasis:
    convention = SignConvention.parse(convention)
    return solve(derivation_system(A, convention), (A.dim, A.dim), f"Der[{convention.value}]")


def centroid_rows(A: HomTrialgebra) -> Matrix:
    tensors, a = raw_parts(A)
    n = A.dim
    return stack(twist_commutant_rows(A), _matrix(centroid_rows_raw(tensors, a, n), n * n), cols=n * n)


@dataclass(frozen=True)
class QuadraticVerdict:
    element: int
    holds: bool
    failures: tuple = field(default=())  # (product, i, j) with ψ(e_i)∘ψ(e_j) != ψ(e_i)∘α(e_j)


def quadratic_report(A: HomTrialgebra, space: SubspaceBasis) -> list[QuadraticVerdict]:
    """Per basis element ψ: does ψ(e_i)∘ψ(e_j) = ψ(e_i)∘α(e_j) on all basis pairs?"""
    n = A.dim
    out = []
    for idx, psi in enumerate(space.basis):
        failures = []
        for op in OPS:
            t = A.tensor(op)
            for i in range(n):
                for j in range(n):
                    if t.apply(psi.column(i), psi.column(j)) != t.apply(psi.column(i), A.alpha.image(j)):
                        failures.append((op.value, i, j))
        out.append(QuadraticVerdict(idx, not failures, tuple(failures)))
    return out


def centroid_space(A: HomTrialgebra) -> tuple[SubspaceBasis, list[QuadraticVerdict]]:
    space = solve(centroid_rows(A), (A.dim, A.dim), "Cent")
    return space, quadratic_report(A, space)


def ad_map(A: HomTrialgebra, z: Sequence) -> Matrix:
    """ad_z(x) = x⊣α(z) - α(z)⊢x, as the matrix whose columns are ad_z(e_i)."""
    if len(z) != A.dim:
        raise ValueError(f"expected a vector of length {A.dim}")
    az = A.alpha.apply(z)
    cols = []
    for i in range(A.dim):
        e = basis_vector(A.dim, i)
        u = A.left.apply(e, az)
        v = A.right.apply(az, e)
        cols.append(tuple(a - b for a, b in zip(u, v)))
    return Matrix.from_columns(cols)


def inner_span(A: HomTrialgebra) -> SubspaceBasis:
    """Span of ad_{e_i} over the basis, returned as an RREF basis."""
    n = A.dim
    vecs = [ad_map(A, basis_vector(n, i)).flatten() for i in range(n)]
    reduced, rk, pivots = rref(Matrix.from_rows(vecs, cols=n * n))
    basis = tuple(Matrix(n, n, reduced.row(r)) for r in range(rk))
    return SubspaceBasis((n, n), basis, tuple(pivots), "Inner")


def _vectors_of(H) -> list[tuple]:
    if isinstance(H, SubspaceBasis):
        return H.vectors()
    return [tuple(Fraction(x) for x in v) for v in H]


def centralizer(A: HomTrialgebra, H, include_middle: bool = False) -> SubspaceBasis:
    """Z_A(H) = {x in H : α(x)•h = h•α(x) = 0 for h in H}, • ranging over ⊣, ⊢ (and ⊥)."""
    n = A.dim
    hs = _vectors_of(H)
    reduced, rk, _ = rref(Matrix.from_rows(hs, cols=n)) if hs else (None, 0, [])
    hs = [reduced.row(r) for r in range(rk)]
    if not hs:
        return SubspaceBasis((n, 1), (), (), "Z")
    ops = OPS if include_middle else OPS[:2]
    rows = []
    for op in ops:
        t = A.tensor(op)
        alpha_h = [A.alpha.apply(h) for h in hs]
        for h in hs:
            # coefficient of t_m in α(x)•h and h•α(x), x = sum_m t_m h_m
            left = [t.apply(ah, h) for ah in alpha_h]
            right = [t.apply(h, ah) for ah in alpha_h]
            for r in range(n):
                rows.append([v[r] for v in left])
                rows.append([v[r] for v in right])
    coeffs = solve(Matrix.from_rows(rows, cols=len(hs)), (len(hs), 1))
    vecs = []
    for b in coeffs.basis:
        t_ = b.flatten()
        vecs.append(tuple(sum((t_[m] * hs[m][k] for m in range(len(hs))), ZERO) for k in range(n)))
    if not vecs:
        return SubspaceBasis((n, 1), (), (), "Z")
    reduced, rk, pivots = rref(Matrix.from_rows(vecs, cols=n))
    return SubspaceBasis((n, 1), tuple(Matrix(n, 1, reduced.row(r)) for r in range(rk)), tuple(pivots), "Z")


def center(A: HomTrialgebra, include_middle: bool = False) -> SubspaceBasis:
    n = A.dim
    return centralizer(A, [basis_vector(n, i) for i in range(n)], include_middle)


def square(A: HomTrialgebra) -> SubspaceBasis:
    """A² = span of e_i∘e_j over the three products."""
    n = A.dim
    vecs = [t.c[i][j] for t in A.tensors() for i in range(n) for j in range(n) if any(t.c[i][j])]
    if not vecs:
        return SubspaceBasis((n, 1), (), (), "A^2")
    reduced, rk, pivots = rref(Matrix.from_rows(vecs, cols=n))
    return SubspaceBasis((n, 1), tuple(Matrix(n, 1, reduced.row(r)) for r in range(rk)), tuple(pivots), "A^2")


def central_rows(A: HomTrialgebra, include_middle: bool = True) -> Matrix:
    tensors, a = raw_parts(A)
    ctens = tensors if include_middle else tensors[:2]
    return _matrix(central_rows_raw(tensors, ctens, a, A.dim), A.dim * A.dim)


def central_derivations(A: HomTrialgebra, convention=None, include_middle: bool = True) -> SubspaceBasis:
    """α-commuting maps with image in the center that vanish on A².

    With a ``convention`` the derivation rows of that sign are stacked on as
    well.
    """
    n = A.dim
    rows = stack(twist_commutant_rows(A), central_rows(A, include_middle), cols=n * n)
    name = "C"
    if convention is not None:
        convention = SignConvention.parse(convention)
        rows = stack(rows, derivation_system(A, convention), cols=n * n)
        name = f"C[{convention.value}]"
    return solve(rows, (n, n), name)


def intersection_space(A: HomTrialgebra, *systems: Matrix, name: str = "") -> SubspaceBasis:
    return solve(stack(*systems, cols=A.dim * A.dim), (A.dim, A.dim), name)


# --- closure propositions ---------------------------------------------------------------------

@dataclass(frozen=True)
class ClauseVerdict:
    clause: str
    holds: bool
    failures: tuple = field(default=())

    def to_json(self) -> dict:
        return {"clause": self.clause, "holds": self.holds, "failures": [list(f) for f in self.failures]}


def satisfies_derivation_rule(A: HomTrialgebra, X: Matrix, convention=MINUS) -> bool:
    """Direct evaluation of the twisted Leibniz rule and α-commutation for X."""
    n = A.dim
    sign = _sign(convention)
    a = A.alpha.a
    if a @ X != X @ a:
        return False
    for op in OPS:
        t = A.tensor(op)
        for i in range(n):
            for j in range(n):
                lhs = _apply(X, t.product(i, j))
                u = t.apply(X.column(i), A.alpha.image(j))
                v = t.apply(A.alpha.image(i), X.column(j))
                if lhs != tuple(x + sign * y for x, y in zip(u, v)):
                    return False
    return True


def _apply(X: Matrix, v) -> tuple:
    return tuple(sum((X[r, k] * v[k] for k in range(X.cols)), ZERO) for r in range(X.rows))


def closure_checks(A: HomTrialgebra, convention=PLUS) -> list[ClauseVerdict]:
    """Check the centroid/derivation closure statements on computed bases.

    * ``gamma-der-in-der``: φ∘d lies in Der (rank membership)
    * ``bracket-in-gamma``: [d, φ] = d∘φ - φ∘d lies in Cent
    * ``phi-d-derivation``: φ∘d satisfies the derivation rule (direct evaluation)
    * ``central-eq-cent-cap-der``: C(A) equals Cent ∩ Der
    """
    convention = SignConvention.parse(convention)
    der = derivation_space(A, convention)
    cent, _ = centroid_space(A)
    f1, f2, f3 = [], [], []
    for pi, phi in enumerate(cent.basis):
        for di, d in enumerate(der.basis):
            pd = phi @ d
            if not der.contains(pd):
                f1.append((pi, di))
            if not cent.contains(d @ phi - pd):
                f2.append((pi, di))
            if not satisfies_derivation_rule(A, pd, convention):
                f3.append((pi, di))
    cap = intersection_space(A, centroid_rows(A), derivation_system(A, convention), name="Cent∩Der")
    central = central_derivations(A)
    eq = central.equals(cap)
    return [
        ClauseVerdict("gamma-der-in-der", not f1, tuple(f1)),
        ClauseVerdict("bracket-in-gamma", not f2, tuple(f2)),
        ClauseVerdict("phi-d-derivation", not f3, tuple(f3)),
        ClauseVerdict("central-eq-cent-cap-der", eq,
                      () if eq else (("dim C", central.dimension), ("dim Cent∩Der", cap.dimension))),
    ]


def clause_report_json(verdicts: list[ClauseVerdict]) -> str:
    return json.dumps([v.to_json() for v in verdicts], indent=2)


def rank_of(vectors) -> int:
    return span_rank(vectors)
