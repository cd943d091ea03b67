"""Structures derived from a Hom-associative trialgebra.

Every construction is a total function. Results that are claimed to be
trialgebras (or Hom-associative / Hom-Leibniz-Poisson algebras) carry the
corresponding axiom reports; nothing here raises when an identity fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import axioms
from .algebra import HomTrialgebra, ProductTensor, TwistMap
from .axioms import AxiomReport


@dataclass(frozen=True)
class Constructed:
    algebra: HomTrialgebra
    reports: tuple[AxiomReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


@dataclass(frozen=True)
class ProductPair:
    """A single product with its twist, checked for Hom-associativity."""

    product: ProductTensor
    alpha: TwistMap
    report: AxiomReport


@dataclass(frozen=True)
class BracketPair:
    """A product, a bracket and the twist, with the identities that apply."""

    product: ProductTensor
    bracket: ProductTensor
    alpha: TwistMap
    reports: tuple[AxiomReport, ...]

    def report(self, identity: str) -> AxiomReport:
        return next(r for r in self.reports if r.identity == identity)


def _derived(A: HomTrialgebra, name: str, left, right, middle) -> Constructed:
    B = HomTrialgebra(A.dim, left, right, middle, A.alpha, f"{name}({A.label})",
                      {"construction": name, "source": A.label})
    return Constructed(B, tuple(axioms.check_triassociativity(B)))


def sum_right_middle(A: HomTrialgebra) -> Constructed:
    """(⊣, ⊥, ∗) with x∗y = x⊢y + x⊥y, placed in the left, right, middle slots."""
    star = A.right.combine(A.middle)
    return _derived(A, "sum-right-middle", A.left, A.middle, star)


def total_sum_product(A: HomTrialgebra) -> ProductPair:
    """x∗y = x⊣y + x⊢y + x⊥y."""
    star = A.left.combine(A.right).combine(A.middle)
    return ProductPair(star, A.alpha, axioms.check_hom_associative(star, A.alpha))


def signed_sum_product(A: HomTrialgebra) -> ProductPair:
    """x∗y = x⊣y + x⊢y - x⊥y."""
    star = A.left.combine(A.right).combine(A.middle, 1, -1)
    return ProductPair(star, A.alpha, axioms.check_hom_associative(star, A.alpha))


def augment_right(A: HomTrialgebra) -> Constructed:
    """Replace ⊢ by x⊢'y = x⊢y + x⊣y; ⊥ is carried through unchanged."""
    return _derived(A, "augment-right", A.left, A.right.combine(A.left), A.middle)


def opposite(A: HomTrialgebra) -> Constructed:
    """x⊣op y = y⊢x, x⊢op y = y⊣x, x⊥op y = y⊥x."""
    return _derived(A, "opposite", A.right.swapped(), A.left.swapped(), A.middle.swapped())


def commutator_pair(A: HomTrialgebra) -> BracketPair:
    """x∗y = x⊣y - y⊢x and [x,y] = x⊥y - y⊥x.

    The attached identity is [x,y]∗α(z) = [x∗z,α(y)] + [α(x),y∗z].
    """
    star = A.left.combine(A.right.swapped(), 1, -1)
    bracket = A.middle.combine(A.middle.swapped(), 1, -1)
    return BracketPair(star, bracket, A.alpha,
                       (axioms.check_commutator_identity(star, bracket, A.alpha),))


def leibniz_poisson_pair(A: HomTrialgebra) -> BracketPair:
    """x·y = x⊥y and [x,y] = x⊣y - x⊢y."""
    dot = A.middle
    bracket = A.left.combine(A.right, 1, -1)
    return BracketPair(dot, bracket, A.alpha,
                       tuple(axioms.check_hom_leibniz_poisson(dot, bracket, A.alpha)))


def leibniz_poisson_pair_corollary(A: HomTrialgebra) -> BracketPair:
    """x·y = x⊣y + x⊢y - x⊥y and [x,y] = x·y - y·x."""
    dot = A.left.combine(A.right).combine(A.middle, 1, -1)
    bracket = dot.combine(dot.swapped(), 1, -1)
    return BracketPair(dot, bracket, A.alpha,
                       tuple(axioms.check_hom_leibniz_poisson(dot, bracket, A.alpha)))


CONSTRUCTIONS = {
    "sum-right-middle": sum_right_middle,
    "total-sum": total_sum_product,
    "signed-sum": signed_sum_product,
    "augment-right": augment_right,
    "opposite": opposite,
    "commutator-pair": commutator_pair,
    "lp-pair": leibniz_poisson_pair,
    "lp-pair-corollary": leibniz_poisson_pair_corollary,
}


def as_algebra(result, source: HomTrialgebra, name: str) -> HomTrialgebra:
    """Pack any construction result into the algebra file model.

    Single products go in the left slot; a (product, bracket) pair uses the
    left and right slots. Unused slots are zero.
    """
    prov = {"construction": name, "source": source.label}
    if isinstance(result, Constructed):
        return result.algebra.relabel(result.algebra.label, prov)
    zero = ProductTensor.zeros(source.dim)
    if isinstance(result, ProductPair):
        B = HomTrialgebra(source.dim, result.product, zero, zero, result.alpha)
    else:
        B = HomTrialgebra(source.dim, result.product, result.bracket, zero, result.alpha)
        prov["slots"] = {"left": "product", "right": "bracket"}
    return B.relabel(f"{name}({source.label})", prov)


def reports_of(result) -> tuple[AxiomReport, ...]:
    if isinstance(result, ProductPair):
        return (result.report,)
    return tuple(result.reports)
