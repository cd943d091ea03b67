"""Isomorphism invariants over Q and transport-of-structure search over F_p.

An isomorphism ``g: A -> B`` satisfies ``g(x∘y) = g(x)∘'g(y)`` for all three
products and ``g∘α = α'∘g``. Matrices follow the column convention used
throughout: ``g(e_i) = sum_r g[r][i] e_r``.

Verdicts over F_p are evidence only. Isomorphism over F_p neither implies
nor is implied by isomorphism over Q or C.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels, subspaces
from .algebra import HomTrialgebra, ProductTensor, TwistMap
from .linalg import Matrix, charpoly, format_scalar, pivot_values, rank

PRIMES = (2, 3, 5)
EVIDENCE_NOTE = ("F_p verdicts are evidence only: isomorphism over F_p neither implies "
                 "nor is implied by isomorphism over Q or C.")


# --- fingerprints over Q --------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    dim: int
    rank_alpha: int
    charpoly_alpha: tuple[Fraction, ...]
    dim_der_minus: int
    dim_der_plus: int
    dim_centroid: int
    dim_square: int
    dim_center: int

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rank_alpha": self.rank_alpha,
            "charpoly_alpha": [format_scalar(c) for c in self.charpoly_alpha],
            "dim_der_minus": self.dim_der_minus,
            "dim_der_plus": self.dim_der_plus,
            "dim_centroid": self.dim_centroid,
            "dim_square": self.dim_square,
            "dim_center": self.dim_center,
        }

    def differences(self, other: "Fingerprint") -> list[str]:
        return [k for k in self.to_json() if getattr(self, k) != getattr(other, k)]


def fingerprint(A: HomTrialgebra) -> Fingerprint:
    a = A.alpha.a
    return Fingerprint(
        dim=A.dim,
        rank_alpha=rank(a),
        charpoly_alpha=tuple(charpoly(a)),
        dim_der_minus=subspaces.derivation_space(A, subspaces.MINUS).dimension,
        dim_der_plus=subspaces.derivation_space(A, subspaces.PLUS).dimension,
        dim_centroid=subspaces.centroid_space(A)[0].dimension,
        dim_square=subspaces.square(A).dimension,
        dim_center=subspaces.center(A).dimension,
    )


# --- F_p algebras ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FpAlgebra:
    """Structure constants reduced mod ``p``.

    ``tensors[t, i, j, k]`` for products ⊣, ⊢, ⊥ and ``alpha[r, c]``.
    """

    p: int
    dim: int
    tensors: np.ndarray
    alpha: np.ndarray
    label: str = ""

    def __post_init__(self):
        if self.p not in PRIMES:
            raise ValueError(f"prime must be one of {PRIMES}, got {self.p}")
        n = self.dim
        if self.tensors.shape != (3, n, n, n) or self.alpha.shape != (n, n):
            raise ValueError("structure constants do not match the dimension")
        object.__setattr__(self, "tensors", np.asarray(self.tensors, dtype=np.int64) % self.p)
        object.__setattr__(self, "alpha", np.asarray(self.alpha, dtype=np.int64) % self.p)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FpAlgebra) and self.p == other.p and self.dim == other.dim
                and np.array_equal(self.tensors, other.tensors) and np.array_equal(self.alpha, other.alpha))

    __hash__ = None

    def lift(self) -> HomTrialgebra:
        """The same constants read as integers in ``[0, p)``."""
        n = self.dim
        prods = [ProductTensor.from_nested(self.tensors[t].tolist()) for t in range(3)]
        alpha = TwistMap(n, Matrix.from_rows(self.alpha.tolist()))
        return HomTrialgebra(n, *prods, alpha, self.label)


def _reduce(x: Fraction, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"denominator of {x} is divisible by {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def reduce_mod_p(A: HomTrialgebra, p: int) -> FpAlgebra:
    n = A.dim
    tensors = np.zeros((3, n, n, n), dtype=np.int64)
    for t, tensor in enumerate(A.tensors()):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    tensors[t, i, j, k] = _reduce(tensor.c[i][j][k], p)
    alpha = np.array([[_reduce(A.alpha.a[r, c], p) for c in range(n)] for r in range(n)], dtype=np.int64)
    return FpAlgebra(p, n, tensors, alpha, A.label)


def inverse_mod_p(g, p: int) -> np.ndarray:
    g = np.asarray(g, dtype=np.int64) % p
    n = g.shape[0]
    aug = np.concatenate([g, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.nonzero(aug[c:, c])[0]
        if nz.size == 0:
            raise ValueError("matrix is singular mod p")
        pr = c + nz[0]
        aug[[c, pr]] = aug[[pr, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), -1, p) % p
        for r in range(n):
            if r != c and aug[r, c]:
                aug[r] = (aug[r] - aug[r, c] * aug[c]) % p
    return aug[:, n:]


def transport(F: FpAlgebra, g) -> FpAlgebra:
    """The structure carried along ``g``: ``g`` is an isomorphism F -> transport(F, g)."""
    p = F.p
    g = np.asarray(g, dtype=np.int64) % p
    gi = inverse_mod_p(g, p)
    tensors = np.einsum("ia,jb,tijk,rk->tabr", gi, gi, F.tensors, g) % p
    alpha = g @ F.alpha @ gi % p
    return FpAlgebra(p, F.dim, tensors, alpha, F.label)


def _det(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


@functools.lru_cache(maxsize=None)
def gl_group(n: int, p: int) -> np.ndarray:
    """All of GL_n(F_p), lexicographic in row-major entries."""
    if n > 3:
        raise ValueError("search is limited to dimension 3")
    m = n * n
    cand = np.indices((p,) * m, dtype=np.int64).reshape(m, -1).T.reshape(-1, n, n)
    if n == 1:
        det = cand[:, 0, 0]
    elif n == 2:
        det = cand[:, 0, 0] * cand[:, 1, 1] - cand[:, 0, 1] * cand[:, 1, 0]
    else:
        c = cand
        det = (c[:, 0, 0] * (c[:, 1, 1] * c[:, 2, 2] - c[:, 1, 2] * c[:, 2, 1])
               - c[:, 0, 1] * (c[:, 1, 0] * c[:, 2, 2] - c[:, 1, 2] * c[:, 2, 0])
               + c[:, 0, 2] * (c[:, 1, 0] * c[:, 2, 1] - c[:, 1, 1] * c[:, 2, 0]))
    out = np.ascontiguousarray(cand[det % p != 0])
    out.setflags(write=False)
    return out


def random_gl(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.integers(0, p, size=(n, n))
        if _det(g.tolist()) % p:
            return g.astype(np.int64)


def is_isomorphism(g, A: FpAlgebra, B: FpAlgebra) -> bool:
    """Direct check of both isomorphism conditions, independent of the kernels."""
    p, n = A.p, A.dim
    g = np.asarray(g, dtype=np.int64) % p
    if _det(g.tolist()) % p == 0:
        return False
    if not np.array_equal(g @ A.alpha % p, B.alpha @ g % p):
        return False
    for t in range(3):
        for i in range(n):
            for j in range(n):
                lhs = g @ A.tensors[t, i, j] % p
                rhs = np.einsum("a,b,abr->r", g[:, i], g[:, j], B.tensors[t]) % p
                if not np.array_equal(lhs, rhs):
                    return False
    return True


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: np.ndarray | None = field(default=None, compare=False)
    p: int = 0

    def render(self) -> str:
        if not self.isomorphic:
            return f"no isomorphism over F_{self.p}"
        w = self.witness
        if np.array_equal(w, np.eye(w.shape[0], dtype=np.int64)):
            head = "yes, witness = identity"
        else:
            head = "yes, witness ="
        body = "\n".join("[ " + "  ".join(str(int(x)) for x in row) + " ]" for row in w)
        return f"{head}\n{body}"

    def to_json(self) -> dict:
        return {"isomorphic": self.isomorphic, "prime": self.p,
                "witness": None if self.witness is None else [[str(int(x)) for x in r] for r in self.witness]}


def isomorphic_over_fp(A: FpAlgebra, B: FpAlgebra) -> IsoResult:
    """Exhaustive search over GL_n(F_p); returns the lexicographically least witness."""
    if A.p != B.p:
        raise ValueError(f"primes differ: {A.p} vs {B.p}")
    if A.dim != B.dim:
        raise ValueError(f"dimensions differ: {A.dim} vs {B.dim}")
    gs = gl_group(A.dim, A.p)
    idx = _kernels.find_isomorphism(gs, A.tensors, A.alpha, B.tensors, B.alpha, A.p)
    if idx < 0:
        return IsoResult(False, None, A.p)
    g = np.array(gs[idx])
    if not is_isomorphism(g, A, B):  # pragma: no cover - kernel bug guard
        raise AssertionError("search returned a map that is not an isomorphism")
    return IsoResult(True, g, A.p)


# --- F_p dimensions -------------------------------------------------------------------------

def _nested(F: FpAlgebra):
    return [F.tensors[t].tolist() for t in range(3)], F.alpha.tolist()


def fp_charpoly(a, p: int) -> tuple[int, ...]:
    """det(tI - a) mod p from sums of principal minors, coefficients from t^n down."""
    a = np.asarray(a, dtype=np.int64).tolist()
    n = len(a)
    out = [1]
    for k in range(1, n + 1):
        e = sum(_det([[a[i][j] for j in idx] for i in idx]) for idx in itertools.combinations(range(n), k))
        out.append((-1) ** k * e % p)
    return tuple(out)


@dataclass(frozen=True)
class FpFingerprint:
    p: int
    dim: int
    rank_alpha: int
    charpoly_alpha: tuple[int, ...]
    dim_der_minus: int
    dim_der_plus: int
    dim_centroid: int
    dim_square: int
    dim_center: int


def fp_fingerprint(F: FpAlgebra) -> FpFingerprint:
    """The fingerprint components solved directly over F_p."""
    p, n = F.p, F.dim
    tensors, a = _nested(F)
    twist = subspaces.twist_rows_raw(a, n)

    def nullity(rows, cols):
        return cols - _kernels.rank_mod_p(np.array(rows, dtype=np.int64).reshape(-1, cols), p)

    sq = [F.tensors[t, i, j] for t in range(3) for i in range(n) for j in range(n)]
    return FpFingerprint(
        p=p,
        dim=n,
        rank_alpha=_kernels.rank_mod_p(F.alpha, p),
        charpoly_alpha=fp_charpoly(F.alpha, p),
        dim_der_minus=nullity(twist + subspaces.derivation_rows_raw(tensors, a, n, -1), n * n),
        dim_der_plus=nullity(twist + subspaces.derivation_rows_raw(tensors, a, n, 1), n * n),
        dim_centroid=nullity(twist + subspaces.centroid_rows_raw(tensors, a, n), n * n),
        dim_square=_kernels.rank_mod_p(np.array(sq), p),
        dim_center=nullity(subspaces.center_rows_raw(tensors[:2], a, n), n),
    )


# --- exhaustive counting oracle -------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    space: str
    p: int
    rational_dim: int
    count: int | None
    skipped: str = ""

    @property
    def agrees(self) -> bool | None:
        if self.count is None:
            return None
        return self.count == self.p ** self.rational_dim


SPACES = ("der-minus", "der-plus", "centroid")


def space_rows(A: HomTrialgebra, space: str) -> Matrix:
    if space == "der-minus":
        return subspaces.derivation_system(A, subspaces.MINUS)
    if space == "der-plus":
        return subspaces.derivation_system(A, subspaces.PLUS)
    if space == "centroid":
        return subspaces.centroid_rows(A)
    raise ValueError(f"unknown space {space!r}; expected one of {SPACES}")


def count_oracle(A: HomTrialgebra, space: str, p: int) -> OracleResult:
    """Count the maps over F_p satisfying the system by brute force.

    Primes dividing a structure-constant denominator, or the numerator or
    denominator of any pivot met in the rational elimination, are skipped:
    only for the remaining primes does elimination mod p retrace the rational
    one.
    """
    rows = space_rows(A, space)
    pivots = pivot_values(rows)
    dim = rows.cols - len(pivots)
    for x in rows.entries:
        if x.denominator % p == 0:
            return OracleResult(space, p, dim, None, f"{p} divides a denominator")
    for v in pivots:
        if v.numerator % p == 0 or v.denominator % p == 0:
            return OracleResult(space, p, dim, None, f"{p} divides pivot {format_scalar(v)}")
    reduced = np.array([_reduce(x, p) for x in rows.entries], dtype=np.int64).reshape(rows.rows, rows.cols)
    return OracleResult(space, p, dim, _kernels.count_kernel(reduced, p))


# --- pairwise report ------------------------------------------------------------------------

DISTINCT_BY_FINGERPRINT = "distinct-by-fingerprint"
FP_ISOMORPHIC = "fp-isomorphic"
FP_DISTINCT = "fp-distinct"
SKIPPED = "skipped"


@dataclass(frozen=True)
class PairwiseReport:
    labels: tuple[str, ...]
    p: int
    verdicts: tuple[tuple[str, ...], ...]
    fingerprints: tuple[Fingerprint, ...]
    witnesses: dict = field(default_factory=dict, compare=False)
    note: str = EVIDENCE_NOTE

    def verdict(self, a: str, b: str) -> str:
        return self.verdicts[self.labels.index(a)][self.labels.index(b)]

    def to_json(self) -> dict:
        return {
            "prime": self.p,
            "note": self.note,
            "labels": list(self.labels),
            "verdicts": [list(r) for r in self.verdicts],
            "fingerprints": {l: f.to_json() for l, f in zip(self.labels, self.fingerprints)},
            "witnesses": {f"{a}|{b}": [[str(int(x)) for x in r] for r in w]
                          for (a, b), w in self.witnesses.items()},
        }

    def render(self) -> str:
        short = {DISTINCT_BY_FINGERPRINT: "fp", FP_ISOMORPHIC: "ISO", FP_DISTINCT: "no", SKIPPED: "--"}
        width = max(len(l) for l in self.labels)
        head = " " * (width + 1) + " ".join(f"{i + 1:>3}" for i in range(len(self.labels)))
        lines = [f"pairwise report over F_{self.p}", head]
        for i, (l, row) in enumerate(zip(self.labels, self.verdicts)):
            lines.append(f"{l:<{width}} " + " ".join(f"{short[v]:>3}" for v in row))
        lines.append("fp = distinct by fingerprint, ISO = isomorphic over F_p, "
                     "no = not isomorphic over F_p, -- = skipped")
        lines.append(self.note)
        return "\n".join(lines)


def pairwise_report(algebras: Sequence[HomTrialgebra], p: int) -> PairwiseReport:
    """Fingerprints first; exhaustive F_p search only for fingerprint-equal pairs."""
    if len({A.dim for A in algebras}) > 1:
        raise ValueError("algebras must share a dimension")
    fps = [fingerprint(A) for A in algebras]
    reduced: list[FpAlgebra | None] = []
    for A in algebras:
        try:
            reduced.append(reduce_mod_p(A, p))
        except ValueError:
            reduced.append(None)
    labels = tuple(A.label for A in algebras)
    k = len(algebras)
    table = [[""] * k for _ in range(k)]
    witnesses = {}
    for i in range(k):
        for j in range(i, k):
            if fps[i] != fps[j]:
                v = DISTINCT_BY_FINGERPRINT
            elif reduced[i] is None or reduced[j] is None:
                v = SKIPPED
            else:
                res = isomorphic_over_fp(reduced[i], reduced[j])
                v = FP_ISOMORPHIC if res.isomorphic else FP_DISTINCT
                if res.isomorphic:
                    witnesses[(labels[i], labels[j])] = res.witness
            table[i][j] = table[j][i] = v
    return PairwiseReport(labels, p, tuple(tuple(r) for r in table), tuple(fps), witnesses)


def report_json(report: PairwiseReport) -> str:
    return json.dumps(report.to_json(), indent=2)
