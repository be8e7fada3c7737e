"""Vectorised numpy versions of the oracle kernels.

Same contracts and results as the numba kernels; ``max_escape_time`` runs the
search breadth-first so each column layer is one array operation.
"""

import numpy as np


def _digits(codes, m, n):
    out = np.empty(codes.shape + (n,), dtype=np.int64)
    c = codes.copy()
    for i in range(n - 1, -1, -1):
        out[..., i] = c % m
        c //= m
    return out


def max_escape_time(coef, m, lhat, top_lo, top_hi):
    K, n = coef.shape[0], coef.shape[1]
    r = (K - 1) // 2
    D = max(lhat * r, 1)
    base = m**n
    off = D - 1
    npos = off + lhat * r + r + 1
    inf = lhat + 1
    if top_lo >= top_hi:
        return 0, np.zeros((0, n), dtype=np.int64)
    codes = np.arange(top_lo, top_hi, dtype=np.int64)[:, None]
    T = np.zeros((len(codes), lhat + 1, npos, n), dtype=np.int64)
    smin = np.full(len(codes), inf, dtype=np.int64)
    M = 0
    for d in range(D):
        if d > 0:
            F = len(codes)
            new_col = np.tile(np.arange(base, dtype=np.int64), F)[:, None]
            codes = np.hstack([np.repeat(codes, base, axis=0), new_col])
            T = np.repeat(T, base, axis=0)
            smin = np.repeat(smin, base)
        T[:, 0, off - d, :] = _digits(codes[:, d], m, n)
        for s in range(1, lhat + 1):
            j = s * r - d
            lo = j - r + off
            # (F, K, n) neighbourhood of level s-1 around position j
            nb = T[:, s - 1, lo : lo + K, :]
            val = np.einsum("kiq,fkq->fi", coef, nb) % m
            T[:, s, j + off, :] = val
            if j >= 1:
                hit = val.any(axis=1) & (s < smin)
                smin[hit] = s
        known = smin <= lhat
        exact = known & ((smin - 1) * r <= d + 1)
        if exact.any():
            M = max(M, int(smin[exact].max()))
        keep = ~(known & (smin <= M))
        codes, T, smin = codes[keep], T[keep], smin[keep]
        if len(codes) == 0:
            return M, np.zeros((0, n), dtype=np.int64)
    return -1, _digits(codes[0], m, n)


def first_bounded(coef, m, configs, steps):
    K, n = coef.shape[0], coef.shape[1]
    r = (K - 1) // 2
    S, W = configs.shape[0], configs.shape[1]
    if S == 0:
        return -1
    off = W - 1 + steps * r
    npos = off + steps * r + 1
    pad = r
    cur = np.zeros((S, npos + 2 * pad, n), dtype=np.int64)
    for t in range(W):
        cur[:, pad + off - t, :] = configs[:, t, :]
    bounded = np.ones(S, dtype=bool)
    for _ in range(steps):
        nxt = np.zeros_like(cur)
        for kk in range(K):
            shift = kk - r
            src = cur[:, pad + shift : pad + shift + npos, :]
            nxt[:, pad : pad + npos, :] += src @ coef[kk].T
        cur = nxt % m
        bounded &= ~cur[:, pad + off + 1 : pad + npos, :].any(axis=(1, 2))
        if not bounded.any():
            return -1
    hits = np.flatnonzero(bounded)
    return int(hits[0]) if len(hits) else -1
