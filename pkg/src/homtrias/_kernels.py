"""Integer kernels over F_p: rank, exhaustive kernel counting, isomorphism search.

Each kernel has a numba ``@njit`` implementation and a pure-numpy one with the
same signature and results. Set ``HOMTRIAS_DISABLE_NUMBA=1`` to force the
numpy path (it is also used when numba is not importable).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("HOMTRIAS_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# --- numpy ----------------------------------------------------------------------------------

def rank_mod_p_numpy(m: np.ndarray, p: int) -> int:
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        f = a[:, c].copy()
        f[r] = 0
        a = (a - np.outer(f, a[r])) % p
        r += 1
    return r


def count_kernel_numpy(m: np.ndarray, p: int) -> int:
    """Number of v in F_p^cols with m·v = 0, by enumerating every v."""
    m = np.asarray(m, dtype=np.int64) % p
    cols = m.shape[1]
    grids = np.indices((p,) * cols).reshape(cols, -1)  # one column per candidate
    if m.shape[0] == 0:
        return grids.shape[1]
    return int(np.count_nonzero(np.all((m @ grids) % p == 0, axis=0)))


def find_isomorphism_numpy(gs: np.ndarray, ta: np.ndarray, aa: np.ndarray, tb: np.ndarray,
                           ab: np.ndarray, p: int) -> int:
    """Index of the first g with g∘α_A = α_B∘g and g(x∘y) = g(x)∘g(y), or -1."""
    chunk = 4096
    for start in range(0, gs.shape[0], chunk):
        g = gs[start:start + chunk]
        ok = np.all((np.einsum("nij,jk->nik", g, aa) - np.einsum("ij,njk->nik", ab, g)) % p == 0, axis=(1, 2))
        idx = np.nonzero(ok)[0]
        if idx.size == 0:
            continue
        gg = g[idx]
        lhs = np.einsum("nrk,tijk->ntijr", gg, ta)
        rhs = np.einsum("nai,nbj,tabr->ntijr", gg, gg, tb)
        good = np.all((lhs - rhs) % p == 0, axis=(1, 2, 3, 4))
        hit = np.nonzero(good)[0]
        if hit.size:
            return int(start + idx[hit[0]])
    return -1


# --- numba ----------------------------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _inv_mod(a, p):
        result = 1
        e = p - 2
        b = a % p
        while e > 0:
            if e & 1:
                result = (result * b) % p
            b = (b * b) % p
            e >>= 1
        return result

    @numba.njit(cache=True)
    def rank_mod_p_numba(m, p):
        a = m.copy() % p
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            pr = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for k in range(cols):
                    t = a[r, k]
                    a[r, k] = a[pr, k]
                    a[pr, k] = t
            inv = _inv_mod(a[r, c], p)
            for k in range(cols):
                a[r, k] = (a[r, k] * inv) % p
            for i in range(rows):
                if i != r and a[i, c] != 0:
                    f = a[i, c]
                    for k in range(cols):
                        a[i, k] = (a[i, k] - f * a[r, k]) % p
            r += 1
        return r

    @numba.njit(cache=True)
    def count_kernel_numba(m, p):
        a = m % p
        rows, cols = a.shape
        v = np.zeros(cols, dtype=np.int64)
        total = 1
        for _ in range(cols):
            total *= p
        count = 0
        for _ in range(total):
            ok = True
            for i in range(rows):
                s = 0
                for k in range(cols):
                    s += a[i, k] * v[k]
                if s % p != 0:
                    ok = False
                    break
            if ok:
                count += 1
            # odometer increment, last coordinate fastest
            k = cols - 1
            while k >= 0:
                v[k] += 1
                if v[k] < p:
                    break
                v[k] = 0
                k -= 1
        return count

    @numba.njit(cache=True)
    def find_isomorphism_numba(gs, ta, aa, tb, ab, p):
        ng, n = gs.shape[0], gs.shape[1]
        nt = ta.shape[0]
        for idx in range(ng):
            g = gs[idx]
            ok = True
            for i in range(n):
                for k in range(n):
                    s = 0
                    for j in range(n):
                        s += g[i, j] * aa[j, k] - ab[i, j] * g[j, k]
                    if s % p != 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            for t in range(nt):
                for i in range(n):
                    for j in range(n):
                        for r in range(n):
                            lhs = 0
                            for k in range(n):
                                lhs += g[r, k] * ta[t, i, j, k]
                            rhs = 0
                            for a in range(n):
                                if g[a, i] == 0:
                                    continue
                                for b in range(n):
                                    rhs += g[a, i] * g[b, j] * tb[t, a, b, r]
                            if (lhs - rhs) % p != 0:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                return idx
        return -1

else:  # pragma: no cover
    rank_mod_p_numba = count_kernel_numba = find_isomorphism_numba = None


# --- dispatch -------------------------------------------------------------------------------

def _i64(x) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(x, dtype=np.int64))


def rank_mod_p(m, p: int) -> int:
    m = _i64(m)
    if m.size == 0:
        return 0
    if USE_NUMBA:
        return int(rank_mod_p_numba(m, p))
    return rank_mod_p_numpy(m, p)


def count_kernel(m, p: int) -> int:
    m = _i64(m)
    if USE_NUMBA:
        return int(count_kernel_numba(m, p))
    return count_kernel_numpy(m, p)


def find_isomorphism(gs, ta, aa, tb, ab, p: int) -> int:
    args = [_i64(x) for x in (gs, ta, aa, tb, ab)]
    if USE_NUMBA:
        return int(find_isomorphism_numba(*args, p))
    return find_isomorphism_numpy(*args, p)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
