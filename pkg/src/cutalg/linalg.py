"""Exact linear algebra: matrices over GF(p) and integer kernels."""

from __future__ import annotations

import numpy as np


def _as_mod(a, p: int) -> np.ndarray:
    return np.array(a, dtype=np.int64).reshape(np.shape(a)) % p


def rref_mod_p(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p) and the pivot columns.

    Entries stay below ``p`` so products fit in int64 for ``p < 2**31``.
    """
    m = _as_mod(a, p)
    if m.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = m[r] * inv % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


PANEL = 128


def _mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` through float64 products, exact while ``k * p**2 < 2**53``."""
    k = a.shape[1]
    if k * (p - 1) ** 2 >= 2 ** 53:
        return (a.astype(object) @ b.astype(object) % p).astype(np.int64)
    return np.fmod(a.astype(np.float64) @ b.astype(np.float64), p).astype(np.int64)


def rank_mod_p(a, p: int) -> int:
    """Rank over GF(p) by blocked LU elimination.

    Each panel of ``PANEL`` columns is factored directly; its row operations
    reach the trailing columns through one triangular solve and one matrix
    product.
    """
    m = _as_mod(a, p)
    if m.size == 0:
        return 0
    if m.shape[0] < m.shape[1]:
        m = np.ascontiguousarray(m.T)
    rows, cols = m.shape
    r = 0
    c0 = 0
    while c0 < cols and r < rows:
        c1 = min(cols, c0 + PANEL)
        panel = m[r:, c0:c1]
        height = rows - r
        lower = np.zeros((height, c1 - c0), dtype=np.int64)
        k = 0
        for j in range(c1 - c0):
            nz = np.nonzero(panel[k:, j])[0]
            if nz.size == 0:
                continue
            t = k + nz[0]
            if t != k:
                m[[r + k, r + t]] = m[[r + t, r + k]]
                lower[[k, t]] = lower[[t, k]]
            inv = pow(int(panel[k, j]), -1, p)
            f = panel[k + 1:, j] * inv % p
            hit = np.nonzero(f)[0]
            if hit.size:
                idx = k + 1 + hit
                panel[idx, j:] = (panel[idx, j:] - np.outer(f[hit], panel[k, j:])) % p
            lower[k + 1:, k] = f
            k += 1
            if k == height:
                break
        if k and c1 < cols:
            top = m[r:r + k, c1:]
            for i in range(1, k):
                row = lower[i, :i]
                nzr = np.nonzero(row)[0]
                if nzr.size:
                    top[i] = (top[i] - _mulmod(row[nzr][None, :], top[nzr], p)[0]) % p
            if height > k:
                m[r + k:, c1:] = (m[r + k:, c1:] - _mulmod(lower[k:, :k], top, p)) % p
        r += k
        c0 = c1
    return r


def nullspace_mod_p(a, p: int) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` over GF(p), one vector per row."""
    a = np.asarray(a)
    cols = a.shape[1]
    r, piv = rref_mod_p(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-r[i, f]) % p
    return basis


def integer_kernel(a) -> list[list[int]]:
    """Z-basis of the integer kernel of ``a`` (rows x cols integer matrix).

    Row-reduces ``[a^T | I]`` with unimodular integer operations; the rows
    whose left block vanishes carry a lattice basis of the kernel, returned
    in Hermite normal form.
    """
    a = [[int(x) for x in row] for row in np.asarray(a, dtype=object)]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    work = [[a[i][j] for i in range(rows)] + [int(k == j) for k in range(cols)] for j in range(cols)]
    r = 0
    for c in range(rows):
        while True:
            nz = [i for i in range(r, cols) if work[i][c] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(work[i][c]))
            work[r], work[k] = work[k], work[r]
            done = True
            for i in range(r + 1, cols):
                if work[i][c]:
                    q = work[i][c] // work[r][c]
                    work[i] = [x - q * y for x, y in zip(work[i], work[r])]
                    if work[i][c]:
                        done = False
            if done:
                r += 1
                break
        if r == cols:
            break
    kernel = [row[rows:] for row in work[r:]]
    return _size_reduce(kernel)


def _size_reduce(vectors: list[list[int]]) -> list[list[int]]:
    """Echelonize a lattice basis over Z (Hermite form) for stable output."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    n = len(vecs[0])
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(vecs)) if vecs[i][c] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(vecs[i][c]))
            vecs[r], vecs[k] = vecs[k], vecs[r]
            others = [i for i in range(r + 1, len(vecs)) if vecs[i][c]]
            for i in others:
                q = vecs[i][c] // vecs[r][c]
                vecs[i] = [x - q * y for x, y in zip(vecs[i], vecs[r])]
            if all(vecs[i][c] == 0 for i in range(r + 1, len(vecs))):
                if vecs[r][c] < 0:
                    vecs[r] = [-x for x in vecs[r]]
                for i in range(r):
                    q = vecs[i][c] // vecs[r][c]
                    if q:
                        vecs[i] = [x - q * y for x, y in zip(vecs[i], vecs[r])]
                r += 1
                break
        if r == len(vecs):
            break
    return vecs
