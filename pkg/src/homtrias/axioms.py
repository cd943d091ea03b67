"""Identity checking on basis elements, with witnesses for every failure."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import OPS, HomTrialgebra, Op, ProductTensor, TwistMap, basis_vector
from .linalg import format_scalar

L, R, M = Op.LEFT, Op.RIGHT, Op.MIDDLE


@dataclass(frozen=True)
class Witness:
    triple: tuple[int, ...]   # 0-based basis indices
    component: int            # 0-based output coordinate
    lhs: Fraction
    rhs: Fraction
    sides: tuple[int, int] = (0, 1)  # which members of a chained equality disagree

    def to_json(self) -> dict:
        return {
            "triple": [i + 1 for i in self.triple],
            "component": self.component + 1,
            "lhs": format_scalar(self.lhs),
            "rhs": format_scalar(self.rhs),
            "sides": list(self.sides),
        }


@dataclass(frozen=True)
class AxiomReport:
    identity: str
    passed: bool
    witnesses: tuple[Witness, ...] = field(default=())

    def __post_init__(self):
        if self.passed != (not self.witnesses):
            raise ValueError("passed must be true exactly when there are no witnesses")

    def to_json(self) -> dict:
        return {"identity": self.identity, "passed": self.passed,
                "witnesses": [w.to_json() for w in self.witnesses]}

    def render(self, max_witnesses: int = 3) -> str:
        if self.passed:
            return f"PASS {self.identity}"
        head = f"FAIL {self.identity} ({len(self.witnesses)} witness(es))"
        shown = [
            f"    e{w.triple[0] + 1},e{w.triple[1] + 1}" + (f",e{w.triple[2] + 1}" if len(w.triple) > 2 else "")
            + f" component {w.component + 1}: {format_scalar(w.lhs)} != {format_scalar(w.rhs)}"
            + (f" (sides {w.sides[0] + 1},{w.sides[1] + 1})" if w.sides != (0, 1) else "")
            for w in self.witnesses[:max_witnesses]
        ]
        return "\n".join([head] + shown)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


def _report(identity: str, witnesses: list[Witness]) -> AxiomReport:
    witnesses.sort(key=lambda w: (w.triple, w.component, w.sides))
    return AxiomReport(identity, not witnesses, tuple(witnesses))


# A term of a ternary identity is ("L", inner, outer) for (x inner y) outer α(z)
# or ("R", inner, outer) for α(x) outer (y inner z).
TRIASSOCIATIVITY: tuple[tuple[str, tuple[tuple[str, Op, Op], ...]], ...] = (
    ("Ax1", (("L", L, L), ("R", L, L))),
    ("Ax2", (("L", L, L), ("R", R, L), ("R", M, L))),
    ("Ax3", (("L", R, L), ("R", L, R))),
    ("Ax4", (("L", L, R), ("R", R, R), ("L", M, R))),
    ("Ax5", (("L", R, R), ("R", R, R))),
    ("Ax6", (("L", M, L), ("R", L, M))),
    ("Ax7", (("L", L, M), ("R", R, M))),
    ("Ax8", (("L", R, M), ("R", M, R))),
    ("Ax9", (("L", M, M), ("R", M, M))),
)


def _term(tensors: dict[Op, ProductTensor], alpha: TwistMap, kind: str, inner: Op, outer: Op,
          x, y, z):
    if kind == "L":
        return tensors[outer].apply(tensors[inner].apply(x, y), alpha.apply(z))
    return tensors[outer].apply(alpha.apply(x), tensors[inner].apply(y, z))


def check_identity(identity: str, terms, tensors: dict[Op, ProductTensor], alpha: TwistMap) -> AxiomReport:
    """Check a (possibly chained) equality of twisted ternary terms on all basis triples."""
    n = alpha.dim
    basis = [basis_vector(n, i) for i in range(n)]
    witnesses = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                values = [_term(tensors, alpha, *t, basis[i], basis[j], basis[k]) for t in terms]
                for s, t in combinations(range(len(values)), 2):
                    for r in range(n):
                        if values[s][r] != values[t][r]:
                            witnesses.append(Witness((i, j, k), r, values[s][r], values[t][r], (s, t)))
    return _report(identity, witnesses)


def _tensor_map(A: HomTrialgebra) -> dict[Op, ProductTensor]:
    return {L: A.left, R: A.right, M: A.middle}


def check_triassociativity(A: HomTrialgebra) -> list[AxiomReport]:
    """The nine twisted triassociativity axioms, in order Ax1..Ax9.

    Chained equalities (Ax2, Ax4) are compared pairwise; each witness records
    which two members disagree.
    """
    tensors = _tensor_map(A)
    return [check_identity(name, terms, tensors, A.alpha) for name, terms in TRIASSOCIATIVITY]


def check_multiplicative(A: HomTrialgebra) -> list[AxiomReport]:
    """α(x∘y) = α(x)∘α(y) for each of the three products."""
    n = A.dim
    reports = []
    for op in OPS:
        t = A.tensor(op)
        witnesses = []
        for i in range(n):
            for j in range(n):
                lhs = A.alpha.apply(t.product(i, j))
                rhs = t.apply(A.alpha.image(i), A.alpha.image(j))
                for r in range(n):
                    if lhs[r] != rhs[r]:
                        witnesses.append(Witness((i, j), r, lhs[r], rhs[r]))
        reports.append(_report(f"mult-{op.value}", witnesses))
    return reports


def is_trialgebra(A: HomTrialgebra) -> bool:
    return all(r.passed for r in check_triassociativity(A))


def is_multiplicative(A: HomTrialgebra) -> bool:
    return all(r.passed for r in check_multiplicative(A))


def check_hom_associative(t: ProductTensor, alpha: TwistMap) -> AxiomReport:
    """(x∗y)∗α(z) = α(x)∗(y∗z)."""
    _same_dim(t, alpha)
    return check_identity("hom-assoc", (("L", L, L), ("R", L, L)), {L: t}, alpha)


def _ternary(identity: str, alpha: TwistMap, lhs, rhs) -> AxiomReport:
    n = alpha.dim
    basis = [basis_vector(n, i) for i in range(n)]
    witnesses = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a = lhs(basis[i], basis[j], basis[k])
                b = rhs(basis[i], basis[j], basis[k])
                for r in range(n):
                    if a[r] != b[r]:
                        witnesses.append(Witness((i, j, k), r, a[r], b[r]))
    return _report(identity, witnesses)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def check_hom_leibniz(bracket: ProductTensor, alpha: TwistMap) -> AxiomReport:
    """Right Hom-Leibniz: [[x,y],α(z)] = [[x,z],α(y)] + [α(x),[y,z]]."""
    _same_dim(bracket, alpha)
    b, tw = bracket.apply, alpha.apply
    return _ternary(
        "hom-leibniz", alpha,
        lambda x, y, z: b(b(x, y), tw(z)),
        lambda x, y, z: _add(b(b(x, z), tw(y)), b(tw(x), b(y, z))),
    )


def check_hom_leibniz_poisson(dot: ProductTensor, bracket: ProductTensor, alpha: TwistMap) -> list[AxiomReport]:
    """Items i) to iii): Hom-associative dot, Hom-Leibniz bracket, and the
    compatibility [x·y, α(z)] = α(x)·[y,z] + [x,z]·α(y)."""
    _same_dim(dot, alpha)
    _same_dim(bracket, alpha)
    d, b, tw = dot.apply, bracket.apply, alpha.apply
    item1 = check_hom_associative(dot, alpha)
    item2 = check_hom_leibniz(bracket, alpha)
    item3 = _ternary(
        "lp-compat", alpha,
        lambda x, y, z: b(d(x, y), tw(z)),
        lambda x, y, z: _add(d(tw(x), b(y, z)), d(b(x, z), tw(y))),
    )
    return [
        AxiomReport("lp-i-hom-assoc", item1.passed, item1.witnesses),
        AxiomReport("lp-ii-hom-leibniz", item2.passed, item2.witnesses),
        AxiomReport("lp-iii-compat", item3.passed, item3.witnesses),
    ]


def check_commutator_identity(star: ProductTensor, bracket: ProductTensor, alpha: TwistMap) -> AxiomReport:
    """[x,y]∗α(z) = [x∗z,α(y)] + [α(x),y∗z]."""
    _same_dim(star, alpha)
    s, b, tw = star.apply, bracket.apply, alpha.apply
    return _ternary(
        "commutator-identity", alpha,
        lambda x, y, z: s(b(x, y), tw(z)),
        lambda x, y, z: _add(b(s(x, z), tw(y)), b(tw(x), s(y, z))),
    )


def _same_dim(t: ProductTensor, alpha: TwistMap) -> None:
    if t.dim != alpha.dim:
        raise ValueError(f"product of dimension {t.dim} with a dimension-{alpha.dim} twist")

