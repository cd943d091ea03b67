"""Time the numba kernels against their numpy counterparts.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both implementations are called directly, so the HOMTRIAS_DISABLE_NUMBA flag
does not matter here. Numba compile time is paid in a warm-up call and
reported separately.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from homtrias import _kernels, catalog, isomorphism, subspaces


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    # full GL_3(F_3) sweep with no witness: the worst case for the search
    A = isomorphism.reduce_mod_p(catalog.instantiate("TH3.1"), 3)
    B = isomorphism.reduce_mod_p(catalog.instantiate("TH3.2"), 3)
    gs = isomorphism.gl_group(3, 3)
    yield "iso search GL3(F3), no witness", (gs, A.tensors, A.alpha, B.tensors, B.alpha, 3), "find_isomorphism"

    # kernel count over all 3^9 maps for a dim-3 centroid system
    rows = subspaces.centroid_rows(catalog.instantiate("TH3.6"))
    m = np.array([int(x) for x in rows.entries], dtype=np.int64).reshape(rows.rows, rows.cols)
    yield "count kernel 3^9 maps", (m, 3), "count_kernel"

    rng = np.random.default_rng(0)
    big = rng.integers(0, 5, size=(200, 81)).astype(np.int64)
    yield "rank mod 5, 200x81", (big, 5), "rank_mod_p"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels.numba is None:
        print("numba is not installed; nothing to compare")
        return 1
    print(f"{'case':<34} {'numpy s':>10} {'numba s':>10} {'speedup':>8} {'compile s':>10}")
    for name, inputs, kernel in cases():
        np_fn = getattr(_kernels, f"{kernel}_numpy")
        nb_fn = getattr(_kernels, f"{kernel}_numba")
        t = time.perf_counter()
        expected = nb_fn(*inputs)
        compile_s = time.perf_counter() - t
        got = np_fn(*inputs)
        if got != expected:
            raise SystemExit(f"{name}: numpy {got} != numba {expected}")
        t_np = _best(lambda: np_fn(*inputs), args.repeat)
        t_nb = _best(lambda: nb_fn(*inputs), args.repeat)
        print(f"{name:<34} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x {compile_s:>10.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
