import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homtrias import algebra
from homtrias.algebra import AlgebraFormatError, HomTrialgebra, Op, ProductTensor, TwistMap, from_tables
from homtrias.linalg import Matrix


def small_algebra():
    return from_tables(2, [("⊣", 0, 1, [1, 0]), (Op.RIGHT, 1, 1, ["1/2", 1]), ("⊥", 1, 0, [0, -3])],
                       [[0, 1], [1, 0]], "toy")


def test_multiply_reads_structure_constants():
    A = small_algebra()
    assert algebra.multiply(A, Op.LEFT, (1, 0), (0, 1)) == (1, 0)
    assert algebra.multiply(A, Op.RIGHT, (0, 2), (0, 1)) == (1, 2)
    # bilinearity on a mixed pair
    assert algebra.multiply(A, Op.MIDDLE, (0, 1), (3, 5)) == (0, -9)
    assert algebra.apply_twist(A, (2, 7)) == (7, 2)


def test_op_aliases():
    assert Op.parse("⊣") is Op.LEFT and Op.parse("right") is Op.RIGHT and Op.parse("⊥") is Op.MIDDLE
    with pytest.raises(ValueError):
        Op.parse("*")


def test_duplicate_and_range_errors():
    with pytest.raises(ValueError, match="duplicate"):
        from_tables(2, [("⊣", 0, 0, [1, 0]), ("⊣", 0, 0, [0, 1])])
    with pytest.raises(ValueError, match="out of range"):
        from_tables(2, [("⊣", 2, 0, [1, 0])])


def test_mismatched_dimensions_rejected():
    with pytest.raises(ValueError):
        HomTrialgebra(2, ProductTensor.zeros(2), ProductTensor.zeros(3), ProductTensor.zeros(2), TwistMap.identity(2))


def test_json_round_trip_and_sparse_products():
    A = small_algebra()
    doc = json.loads(algebra.dumps(A))
    assert [e["i"] for e in doc["left"]] == [1] and doc["right"][0]["v"] == ["1/2", "1"]
    assert algebra.loads(algebra.dumps(A)) == A


def test_parse_errors_name_source_line_and_field(tmp_path):
    text = algebra.dumps(small_algebra()).replace('"-3"', '"q"')
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(AlgebraFormatError) as info:
        algebra.load(path)
    err = info.value
    assert err.source == str(path) and err.field == "middle[0]"
    lines = text.splitlines()
    key_line = next(k for k, line in enumerate(lines, 1) if '"middle"' in line)
    assert err.line == key_line + 1 and lines[err.line - 1].strip() == "{"
    assert str(path) in str(err) and "middle[0]" in str(err)


@pytest.mark.parametrize("mutate, field", [
    (lambda d: d.update(dim=0), "dim"),
    (lambda d: d.update(alpha=[["1"]]), "alpha"),
    (lambda d: d["left"].append({"i": 3, "j": 1, "v": ["0", "0"]}), "left[1]"),
    (lambda d: d["left"].append({"i": 1, "j": 2, "v": ["0", "1"]}), "products"),
])
def test_structural_errors(mutate, field):
    doc = algebra.to_json(small_algebra())
    mutate(doc)
    with pytest.raises(AlgebraFormatError) as info:
        algebra.loads(json.dumps(doc, indent=2))
    assert info.value.field == field


def test_invalid_json_reports_line():
    with pytest.raises(AlgebraFormatError) as info:
        algebra.loads('{\n "dim": 2,\n oops\n}', "x.json")
    assert info.value.line == 3


scalars = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def algebras(draw):
    n = draw(st.integers(1, 3))
    tensors = [ProductTensor.from_nested([[[draw(scalars) for _ in range(n)] for _ in range(n)] for _ in range(n)])
               for _ in range(3)]
    a = Matrix.from_rows([[draw(scalars) for _ in range(n)] for _ in range(n)])
    return HomTrialgebra(n, *tensors, TwistMap(n, a), draw(st.text(max_size=8)))


@given(algebras())
def test_file_round_trip(A):
    B = algebra.loads(algebra.dumps(A))
    assert B == A and B.label == A.label


@given(algebras())
def test_combine_is_entrywise(A):
    s = A.left.combine(A.right, 2, Fraction(-1, 3))
    for i in range(A.dim):
        for j in range(A.dim):
            assert s.product(i, j) == tuple(2 * x - Fraction(1, 3) * y
                                            for x, y in zip(A.left.product(i, j), A.right.product(i, j)))
    assert A.left.swapped().swapped() == A.left


@given(algebras(), scalars, st.data())
def test_multiply_is_bilinear(A, lam, data):
    vec = st.lists(scalars, min_size=A.dim, max_size=A.dim).map(tuple)
    x, x2, y = data.draw(vec), data.draw(vec), data.draw(vec)
    for op in Op:
        combo = tuple(lam * a + b for a, b in zip(x, x2))
        lhs = algebra.multiply(A, op, combo, y)
        rhs = tuple(lam * a + b for a, b in zip(algebra.multiply(A, op, x, y), algebra.multiply(A, op, x2, y)))
        assert lhs == rhs
