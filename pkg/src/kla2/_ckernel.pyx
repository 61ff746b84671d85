# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Bruhat and Kazhdan-Lusztig table kernels.

Elements are indexed 0..n-1 in order of non-decreasing length.  ``lmul[g, i]``
is the index of ``g * elem_i`` (or -1 when it falls outside the table) and
``ldesc[i]`` is the left descent bitmask (bit g set iff ``g * elem_i`` is
shorter).  Contracts are identical to :mod:`kla2._pykernel`.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _least_bit(long mask):
    cdef int g = 0
    while not (mask >> g) & 1:
        g += 1
    return g


def bruhat_matrix(long[::1] lengths, long[:, ::1] lmul, long[::1] ldesc):
    cdef Py_ssize_t n = lengths.shape[0]
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] B = out
    cdef Py_ssize_t u, w, v, gu
    cdef int g
    cdef long bit
    if n == 0:
        return out
    B[0, 0] = 1
    for w in range(1, n):
        g = _least_bit(ldesc[w])
        bit = 1 << g
        v = lmul[g, w]
        B[w, w] = 1
        for u in range(w):
            if lengths[u] >= lengths[w]:
                break
            if ldesc[u] & bit:
                gu = lmul[g, u]
                B[u, w] = B[gu, v]
            else:
                B[u, w] = B[u, v]
    return out


def kl_coefficients(long[::1] lengths, long[:, ::1] lmul, long[::1] ldesc,
                    unsigned char[:, ::1] bruhat, int depth):
    """Coefficient array ``P[u, w, k]`` of ``q**k`` in ``P_{u,w}``."""
    cdef Py_ssize_t n = lengths.shape[0]
    out = np.zeros((n, n, depth), dtype=np.int64)
    cdef long[:, :, ::1] P = out
    mu_z_arr = np.zeros((n, n), dtype=np.int64)
    mu_c_arr = np.zeros((n, n), dtype=np.int64)
    mu_n_arr = np.zeros(n, dtype=np.int64)
    cdef long[:, ::1] mu_z = mu_z_arr
    cdef long[:, ::1] mu_c = mu_c_arr
    cdef long[::1] mu_n = mu_n_arr
    cdef Py_ssize_t u, w, v, gu, z, j, k, cnt
    cdef int g, shift, gap, top
    cdef long bit, coef, m
    if n == 0:
        return out
    for w in range(n):
        P[w, w, 0] = 1
        if w == 0:
            continue
        g = _least_bit(ldesc[w])
        bit = 1 << g
        v = lmul[g, w]
        for u in range(w):
            if not bruhat[u, w]:
                continue
            gu = lmul[g, u]
            if ldesc[u] & bit:
                for k in range(depth):
                    P[u, w, k] = P[gu, v, k]
                for k in range(1, depth):
                    P[u, w, k] += P[u, v, k - 1]
                if P[u, v, depth - 1] != 0:
                    raise OverflowError("degree exceeds table depth")
            else:
                for k in range(depth):
                    P[u, w, k] = P[u, v, k]
                for k in range(1, depth):
                    P[u, w, k] += P[gu, v, k - 1]
                if P[gu, v, depth - 1] != 0:
                    raise OverflowError("degree exceeds table depth")
            cnt = mu_n[v]
            for j in range(cnt):
                z = mu_z[v, j]
                if not (ldesc[z] & bit):
                    continue
                if not bruhat[u, z]:
                    continue
                m = mu_c[v, j]
                shift = (lengths[w] - lengths[z]) // 2
                for k in range(depth - shift):
                    P[u, w, k + shift] -= m * P[u, z, k]
                for k in range(depth - shift, depth):
                    if P[u, z, k] != 0:
                        raise OverflowError("degree exceeds table depth")
            for k in range(depth):
                if P[u, w, k] < 0:
                    raise ArithmeticError(
                        f"negative KL coefficient at ({u}, {w}, q^{k})")
        # record the mu-list of w for later columns
        cnt = 0
        for u in range(w):
            if not bruhat[u, w]:
                continue
            gap = lengths[w] - lengths[u]
            if gap % 2 == 0:
                continue
            top = (gap - 1) // 2
            if top >= depth:
                continue
            coef = P[u, w, top]
            if coef != 0:
                mu_z[w, cnt] = u
                mu_c[w, cnt] = coef
                cnt += 1
        mu_n[w] = cnt
    return out
