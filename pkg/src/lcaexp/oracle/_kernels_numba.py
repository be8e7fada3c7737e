"""numba kernels for the dynamical oracle (left side; callers reflect for the right)."""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def max_escape_time(coef, m, lhat, top_lo, top_hi):
    """Largest escape time over windows whose top column code lies in [top_lo, top_hi).

    A window fixes positions 0, -1, ..., -(D-1) (D = lhat*r) of a vector series
    whose top column (position 0) is nonzero; it escapes at step s if A^s v is
    nonzero somewhere at a position >= 1. Returns (M, window) with M the maximum
    escape time, or M = -1 and the lexicographically first window that does not
    escape within lhat steps.

    Depth-first over columns. ``T[s, j]`` holds (A^s v)_j for every position j
    already determined by the fixed columns; fixing column d determines exactly
    one new position per level, j = s*r - d.
    """
    K = coef.shape[0]
    n = coef.shape[1]
    r = (K - 1) // 2
    D = max(lhat * r, 1)
    base = m**n
    off = D - 1
    npos = off + lhat * r + r + 1
    inf = lhat + 1
    T = np.zeros((lhat + 1, npos, n), dtype=np.int64)
    code = np.zeros(D, dtype=np.int64)
    smin = np.empty(D + 1, dtype=np.int64)
    smin[0] = inf
    empty = np.zeros((0, n), dtype=np.int64)
    if top_lo >= top_hi:
        return 0, empty
    M = 0
    d = 0
    code[0] = top_lo
    while True:
        c = code[d]
        for i in range(n - 1, -1, -1):
            T[0, off - d, i] = c % m
            c //= m
        cur = smin[d]
        for s in range(1, lhat + 1):
            j = s * r - d
            nonzero = False
            for i in range(n):
                acc = 0
                for kk in range(K):
                    idx = j + kk - r + off
                    for q in range(n):
                        acc += coef[kk, i, q] * T[s - 1, idx, q]
                v = acc % m
                T[s, j + off, i] = v
                if v != 0:
                    nonzero = True
            if nonzero and j >= 1 and s < cur:
                cur = s
        smin[d + 1] = cur
        prune = False
        if cur <= lhat:
            if cur <= M:
                prune = True
            elif (cur - 1) * r <= d + 1:
                M = cur
                prune = True
        if not prune:
            if d + 1 >= D:
                window = np.zeros((D, n), dtype=np.int64)
                for t in range(D):
                    c = code[t]
                    for i in range(n - 1, -1, -1):
                        window[t, i] = c % m
                        c //= m
                return -1, window
            d += 1
            code[d] = 0
            continue
        while True:
            code[d] += 1
            limit = top_hi if d == 0 else base
            if code[d] < limit:
                break
            d -= 1
            if d < 0:
                return M, empty


@njit(cache=True, nogil=True)
def first_bounded(coef, m, configs, steps):
    """Index of the first config whose orbit stays at positions <= 0 for ``steps`` steps.

    ``configs[s, t]`` is the vector at position -t. Returns -1 if none.
    """
    K = coef.shape[0]
    n = coef.shape[1]
    r = (K - 1) // 2
    S = configs.shape[0]
    W = configs.shape[1]
    off = W - 1 + steps * r
    npos = off + steps * r + 1
    cur = np.zeros((npos, n), dtype=np.int64)
    nxt = np.zeros((npos, n), dtype=np.int64)
    for sidx in range(S):
        cur[:, :] = 0
        nxt[:, :] = 0
        for t in range(W):
            for i in range(n):
                cur[off - t, i] = configs[sidx, t, i]
        lo = off - (W - 1)
        hi = off
        bounded = True
        for _ in range(steps):
            nlo = max(lo - r, 0)
            nhi = min(hi + r, npos - 1)
            for idx in range(nlo, nhi + 1):
                for i in range(n):
                    acc = 0
                    for kk in range(K):
                        src = idx + kk - r
                        if src < lo or src > hi:
                            continue
                        for q in range(n):
                            acc += coef[kk, i, q] * cur[src, q]
                    nxt[idx, i] = acc % m
            cur, nxt = nxt, cur
            lo, hi = nlo, nhi
            for idx in range(off + 1, hi + 1):
                for i in range(n):
                    if cur[idx, i] != 0:
                        bounded = False
                        break
                if not bounded:
                    break
            if not bounded:
                break
        if bounded:
            return sidx
    return -1
