import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homtrias import catalog, subspaces as S
from homtrias.algebra import OPS, HomTrialgebra, ProductTensor, TwistMap, basis_vector
from homtrias.linalg import Matrix, stack

from test_algebra import algebras


def zero_algebra(n=2):
    return HomTrialgebra.zero(n, TwistMap.identity(n))


def box(n, values):
    for entries in itertools.product(values, repeat=n * n):
        yield Matrix(n, n, tuple(Fraction(x) for x in entries))


def apply(X, v):
    return tuple(sum((X[r, k] * v[k] for k in range(X.cols)), Fraction(0)) for r in range(X.rows))


def in_centroid_direct(A, X):
    a = A.alpha.a
    if a @ X != X @ a:
        return False
    for op in OPS:
        t = A.tensor(op)
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = apply(X, t.product(i, j))
                if lhs != t.apply(X.column(i), A.alpha.image(j)) or lhs != t.apply(A.alpha.image(i), X.column(j)):
                    return False
    return True


# --- examples ---------------------------------------------------------------------------------

def test_twist_commutant_of_jordan_block_brute_force():
    A = catalog.instantiate("TH2.4")
    assert A.alpha.a.to_rows() == [[1, 1], [0, 1]]
    space = S.solve(S.twist_commutant_rows(A), (2, 2))
    assert space.dimension == 2
    a = A.alpha.a
    for X in box(2, range(-2, 3)):
        assert (a @ X == X @ a) == space.contains(X)


def test_identity_twist_gives_vacuous_commutant():
    assert S.twist_commutant_rows(zero_algebra()).is_zero()


def test_zero_algebra_spaces_are_everything():
    A = zero_algebra(2)
    assert S.derivation_space(A, S.MINUS).dimension == 4
    assert S.centroid_space(A)[0].dimension == 4
    assert S.central_derivations(A).dimension == 4
    assert S.inner_span(A).dimension == 0
    assert S.center(A).dimension == 2


@pytest.mark.parametrize("eid", catalog.list_entries(2))
@pytest.mark.parametrize("conv", [S.PLUS, S.MINUS])
def test_derivations_brute_force_dim2(eid, conv):
    A = catalog.instantiate(eid)
    space = S.derivation_space(A, conv)
    for X in box(2, (-1, 0, 1)):
        assert S.satisfies_derivation_rule(A, X, conv) == space.contains(X)


@pytest.mark.parametrize("eid", catalog.list_entries(2))
def test_centroid_brute_force_dim2(eid):
    A = catalog.instantiate(eid)
    space, _ = S.centroid_space(A)
    for X in box(2, (-1, 0, 1)):
        assert in_centroid_direct(A, X) == space.contains(X)


def test_th2_4_derivation_support():
    # the only free entry sits in printed row 2, column 1: X(e2) = c·e1
    space = S.derivation_space(catalog.instantiate("TH2.4"), S.MINUS)
    assert space.dimension == 1
    assert space.symbolic("I") == [["0", "0"], ["I21", "0"]]


def test_th3_1_pattern_and_dim():
    space = S.derivation_space(catalog.instantiate("TH3.1"), S.MINUS)
    assert space.dimension == 3
    assert space.symbolic("I") == [["I11", "0", "0"], ["0", "I22", "I23"], ["0", "-I22", "-I23"]]


def test_th3_19_dim():
    assert S.derivation_space(catalog.instantiate("TH3.19"), S.MINUS).dimension == 1


def test_ad_map_examples():
    A = catalog.instantiate("TH2.9")
    assert S.ad_map(A, basis_vector(2, 0)).column(0) == (0, 0)
    B = catalog.instantiate("TH2.7")
    assert S.ad_map(B, basis_vector(2, 1)).column(0) == (0, 0)
    assert S.ad_map(B, (0, 0)).is_zero()
    with pytest.raises(ValueError):
        S.ad_map(B, (1, 0, 0))


def test_commutative_symmetric_inner_span_is_zero():
    c = [[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
    c[0][0] = [Fraction(1), Fraction(0)]
    c[0][1] = c[1][0] = [Fraction(0), Fraction(1)]
    t = ProductTensor.from_nested(c)
    A = HomTrialgebra(2, t, t, t, TwistMap.identity(2))
    assert S.inner_span(A).dimension == 0


def test_centroid_examples():
    space, _ = S.centroid_space(catalog.instantiate("TH2.7"))
    assert space.dimension == 1 and space.contains(Matrix.identity(2))
    assert S.centroid_space(catalog.instantiate("TH2.4"))[0].dimension == 2
    six, _ = S.centroid_space(catalog.instantiate("TH3.6"))
    assert six.dimension == 3
    assert six.symbolic("c") == [["c11", "0", "c13"], ["0", "c22", "0"], ["-c11", "0", "-c13"]]
    one, _ = S.centroid_space(catalog.instantiate("TH2.1"))
    assert one.symbolic("c") == [["0", "0"], ["c21", "0"]]


def test_quadratic_report_marks_identity_as_holding():
    A = catalog.instantiate("TH2.7")
    space, verdicts = S.centroid_space(A)
    assert [v.holds for v in verdicts] == [True]


def test_centralizer_examples():
    A = catalog.instantiate("TH2.7")
    assert S.center(A).dimension == 0
    assert S.centralizer(A, []).dimension == 0
    assert S.central_derivations(A).dimension == 0
    Z = zero_algebra(3)
    assert S.center(Z).dimension == 3


def test_centralizer_brute_force_th2_1():
    A = catalog.instantiate("TH2.1")
    Z = S.center(A)
    for x in itertools.product(range(-2, 3), repeat=2):
        x = tuple(Fraction(v) for v in x)
        ax = A.alpha.apply(x)
        kills = all(A.tensor(op).apply(ax, basis_vector(2, l)) == (0, 0)
                    and A.tensor(op).apply(basis_vector(2, l), ax) == (0, 0)
                    for op in OPS[:2] for l in range(2))
        assert kills == S.SubspaceBasis((2, 1), Z.basis).contains(Matrix(2, 1, x))


def test_central_with_convention_is_smaller():
    for eid in ("TH3.10", "TH2.4", "TH3.20"):
        A = catalog.instantiate(eid)
        assert S.central_derivations(A, S.PLUS).dimension <= S.central_derivations(A).dimension


def test_closure_examples():
    for eid in ("TH2.4",):
        assert all(v.holds for v in S.closure_checks(catalog.instantiate(eid)))
    assert all(v.holds for v in S.closure_checks(zero_algebra()))


def test_rendering_and_json():
    space = S.derivation_space(catalog.instantiate("TH3.1"))
    text = space.render("I")
    assert text.startswith("Der[minus]: dimension 3")
    doc = space.to_json("I")
    assert doc["dimension"] == 3 and len(doc["basis"]) == 3


# --- properties -------------------------------------------------------------------------------

@given(algebras())
def test_solver_soundness(A):
    n = A.dim
    for rows, space in ((S.derivation_system(A, S.MINUS), S.derivation_space(A, S.MINUS)),
                        (S.derivation_system(A, S.PLUS), S.derivation_space(A, S.PLUS)),
                        (S.centroid_rows(A), S.centroid_space(A)[0])):
        for b in space.basis:
            v = b.flatten()
            assert all(sum(rows[r, k] * v[k] for k in range(n * n)) == 0 for r in range(rows.rows))


@given(algebras(), st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_scalars_in_centroid_when_twist_is_identity(A, lam):
    A = HomTrialgebra(A.dim, A.left, A.right, A.middle, TwistMap.identity(A.dim))
    space, _ = S.centroid_space(A)
    assert space.contains(Matrix.identity(A.dim).scale(lam))


@given(algebras())
def test_monotone_in_constraints(A):
    n = A.dim
    der = S.derivation_space(A, S.MINUS).dimension
    both = S.intersection_space(A, S.derivation_system(A, S.MINUS), S.centroid_rows(A)).dimension
    assert both <= der
    assert S.solve(stack(S.twist_commutant_rows(A), cols=n * n), (n, n)).dimension >= der


@given(algebras())
def test_direct_rule_agrees_with_rows(A):
    for conv in (S.PLUS, S.MINUS):
        for b in S.derivation_space(A, conv).basis:
            assert S.satisfies_derivation_rule(A, b, conv)
