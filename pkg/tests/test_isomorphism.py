import itertools
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from homtrias import _kernels, catalog, isomorphism as iso
from homtrias.algebra import HomTrialgebra, TwistMap

needs_numba = pytest.mark.skipif(_kernels.numba is None, reason="numba not installed")


def test_zero_algebra_fingerprint():
    fp = iso.fingerprint(HomTrialgebra.zero(2, TwistMap.identity(2)))
    assert (fp.dim_der_minus, fp.dim_der_plus, fp.dim_centroid, fp.dim_square) == (4, 4, 4, 0)
    assert fp.charpoly_alpha == (1, -2, 1) and fp.rank_alpha == 2


def test_th2_1_vs_th2_4():
    a, b = iso.fingerprint(catalog.instantiate("TH2.1")), iso.fingerprint(catalog.instantiate("TH2.4"))
    assert (a.dim_centroid, b.dim_centroid) == (1, 2)
    assert "dim_centroid" in a.differences(b)


def test_th3_1_centroid():
    assert iso.fingerprint(catalog.instantiate("TH3.1")).dim_centroid == 3


def test_reduce_mod_p():
    F = iso.reduce_mod_p(catalog.instantiate("TH2.9"), 3)
    assert F.alpha[1, 1] == 2 and F.tensors[0, 0, 0, 0] == 2
    assert set(np.unique(iso.reduce_mod_p(catalog.instantiate("TH2.1"), 2).tensors)) <= {0, 1}
    with pytest.raises(ValueError, match="divisible"):
        iso.reduce_mod_p(catalog.instantiate("TH3.3", {"a": Fraction(3, 2)}), 2)
    with pytest.raises(ValueError, match="prime"):
        iso.reduce_mod_p(catalog.instantiate("TH2.1"), 7)


@pytest.mark.parametrize("n, p, order", [(2, 2, 6), (2, 3, 48), (3, 2, 168), (3, 3, 11232)])
def test_gl_orders(n, p, order):
    gs = iso.gl_group(n, p)
    assert len(gs) == order
    flat = [tuple(g.flatten()) for g in gs]
    assert flat == sorted(flat)


def test_inverse_and_transport():
    rng = np.random.default_rng(1)
    F = iso.reduce_mod_p(catalog.instantiate("TH3.6"), 3)
    for _ in range(10):
        g = iso.random_gl(3, 3, rng)
        assert np.array_equal(g @ iso.inverse_mod_p(g, 3) % 3, np.eye(3, dtype=np.int64))
        G = iso.transport(F, g)
        assert iso.is_isomorphism(g, F, G)
        assert iso.transport(G, iso.inverse_mod_p(g, 3)) == F


def test_self_isomorphism_is_identity():
    for eid in catalog.list_entries():
        F = iso.reduce_mod_p(catalog.instantiate(eid), 3)
        res = iso.isomorphic_over_fp(F, F)
        assert res.isomorphic and np.array_equal(res.witness, np.eye(F.dim, dtype=np.int64))
        assert "identity" in res.render()


def test_transport_found_and_symmetric():
    rng = np.random.default_rng(2)
    for eid in ("TH2.4", "TH2.11", "TH3.20"):
        F = iso.reduce_mod_p(catalog.instantiate(eid), 3)
        G = iso.transport(F, iso.random_gl(F.dim, 3, rng))
        ab, ba = iso.isomorphic_over_fp(F, G), iso.isomorphic_over_fp(G, F)
        assert ab.isomorphic and ba.isomorphic
        assert iso.is_isomorphism(ab.witness, F, G) and iso.is_isomorphism(ba.witness, G, F)


def test_witness_is_lexicographically_least():
    F = iso.reduce_mod_p(catalog.instantiate("TH2.11"), 3)
    G = iso.transport(F, np.array([[2, 1], [1, 1]]))
    res = iso.isomorphic_over_fp(F, G)
    all_witnesses = [g for g in iso.gl_group(2, 3) if iso.is_isomorphism(g, F, G)]
    assert np.array_equal(res.witness, all_witnesses[0])


def test_mismatch_errors():
    A = iso.reduce_mod_p(catalog.instantiate("TH2.1"), 3)
    with pytest.raises(ValueError):
        iso.isomorphic_over_fp(A, iso.reduce_mod_p(catalog.instantiate("TH2.1"), 2))
    with pytest.raises(ValueError):
        iso.isomorphic_over_fp(A, iso.reduce_mod_p(catalog.instantiate("TH3.1"), 3))


def test_fingerprint_invariance_sample():
    rng = np.random.default_rng(3)
    for eid in ("TH2.4", "TH3.5", "TH3.20"):
        F = iso.reduce_mod_p(catalog.instantiate(eid), 3)
        base = iso.fp_fingerprint(F)
        for _ in range(5):
            assert iso.fp_fingerprint(iso.transport(F, iso.random_gl(F.dim, 3, rng))) == base


def test_fp_fingerprint_agrees_with_rational_at_good_prime():
    A = catalog.instantiate("TH3.6")
    q, f = iso.fingerprint(A), iso.fp_fingerprint(iso.reduce_mod_p(A, 5))
    assert (q.dim_centroid, q.dim_der_minus, q.dim_square, q.dim_center) == \
           (f.dim_centroid, f.dim_der_minus, f.dim_square, f.dim_center)


def test_fp_charpoly():
    assert iso.fp_charpoly([[1, 1], [0, 1]], 3) == (1, 1, 1)  # t^2 - 2t + 1 with -2 = 1 mod 3


def test_pairwise_report_labels():
    one = iso.pairwise_report([catalog.instantiate("TH2.1")], 3)
    assert one.verdicts == ((iso.FP_ISOMORPHIC,),)
    bad = catalog.instantiate("TH3.3", {"a": Fraction(1, 3)})
    rep = iso.pairwise_report([bad, bad.relabel("copy")], 3)
    assert rep.verdict(bad.label, "copy") == iso.SKIPPED
    assert "evidence" in rep.render()
    with pytest.raises(ValueError):
        iso.pairwise_report([catalog.instantiate("TH2.1"), catalog.instantiate("TH3.1")], 3)


def test_count_oracle_matches_python_enumeration():
    A = catalog.instantiate("TH2.4")
    rows = iso.space_rows(A, "centroid")
    m = np.array([iso._reduce(x, 3) for x in rows.entries]).reshape(rows.rows, rows.cols)
    count = sum(all(int(np.dot(r, v)) % 3 == 0 for r in m) for v in itertools.product(range(3), repeat=4))
    assert iso.count_oracle(A, "centroid", 3).count == count == 9


def test_count_oracle_skips_bad_primes():
    r = iso.count_oracle(catalog.instantiate("TH2.5"), "der-minus", 2)
    assert r.count is None and "pivot" in r.skipped and r.agrees is None


# --- kernels ----------------------------------------------------------------------------------

int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@needs_numba
@given(int_matrices, st.sampled_from([2, 3, 5]))
def test_rank_kernels_agree(rows, p):
    m = np.array(rows, dtype=np.int64)
    assert _kernels.rank_mod_p_numba(m, p) == _kernels.rank_mod_p_numpy(m, p)


@needs_numba
@given(int_matrices, st.sampled_from([2, 3]))
def test_count_kernels_agree_and_match_rank(rows, p):
    m = np.array(rows, dtype=np.int64)
    n = _kernels.count_kernel_numba(m, p)
    assert n == _kernels.count_kernel_numpy(m, p)
    assert n == p ** (m.shape[1] - _kernels.rank_mod_p_numpy(m, p))


@needs_numba
@pytest.mark.parametrize("a, b", [("TH2.1", "TH2.2"), ("TH2.5", "TH2.8"), ("TH2.7", "TH2.13"), ("TH3.1", "TH3.2")])
def test_search_kernels_agree(a, b):
    A = iso.reduce_mod_p(catalog.instantiate(a), 3)
    B = iso.reduce_mod_p(catalog.instantiate(b), 3)
    gs = iso.gl_group(A.dim, 3)
    args = (gs, A.tensors, A.alpha, B.tensors, B.alpha, 3)
    assert _kernels.find_isomorphism_numba(*args) == _kernels.find_isomorphism_numpy(*args)
    args = (gs, A.tensors, A.alpha, A.tensors, A.alpha, 3)
    assert _kernels.find_isomorphism_numba(*args) == _kernels.find_isomorphism_numpy(*args)


def test_env_flag_selects_numpy():
    env = dict(os.environ, HOMTRIAS_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from homtrias import _kernels; print(_kernels.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
