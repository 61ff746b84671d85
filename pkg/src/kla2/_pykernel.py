"""Pure-Python Bruhat and Kazhdan-Lusztig table kernels.

Same inputs and outputs as the compiled ``_ckernel`` module; used when the
extension is not built or when ``KLA2_PURE_PYTHON`` is set.
"""
import numpy as np


def _least_bit(mask):
    return (mask & -mask).bit_length() - 1


def bruhat_matrix(lengths, lmul, ldesc):
    lengths = [int(x) for x in lengths]
    ldesc = [int(x) for x in ldesc]
    lmul = [[int(x) for x in row] for row in lmul]
    n = len(lengths)
    rows = [bytearray(n) for _ in range(n)]  # rows[w][u] == (u <= w)
    if n:
        rows[0][0] = 1
    for w in range(1, n):
        g = _least_bit(ldesc[w])
        bit = 1 << g
        lg = lmul[g]
        below = rows[lg[w]]
        col = rows[w]
        col[w] = 1
        lw = lengths[w]
        for u in range(w):
            if lengths[u] >= lw:
                break
            if ldesc[u] & bit:
                col[u] = below[lg[u]]
            else:
                col[u] = below[u]
    out = np.zeros((n, n), dtype=np.uint8)
    for w in range(n):
        out[:, w] = np.frombuffer(bytes(rows[w]), dtype=np.uint8)
    return out


def _shift_sub(acc, m, poly, shift):
    for k, c in enumerate(poly):
        if c:
            acc[k + shift] -= m * c


def kl_coefficients(lengths, lmul, ldesc, bruhat, depth):
    lengths = [int(x) for x in lengths]
    ldesc = [int(x) for x in ldesc]
    lmul = [[int(x) for x in row] for row in lmul]
    n = len(lengths)
    below = [np.flatnonzero(bruhat[:, w]).tolist() for w in range(n)]
    # cols[w][u] -> list of coefficients (trailing zeros allowed)
    cols = [None] * n
    mu = [None] * n
    zero = [0] * depth
    for w in range(n):
        col = {w: [1] + [0] * (depth - 1)}
        cols[w] = col
        mu[w] = []
        if w == 0:
            continue
        g = _least_bit(ldesc[w])
        bit = 1 << g
        lg = lmul[g]
        v = lg[w]
        cv = cols[v]
        lw = lengths[w]
        terms = [(z, m, (lw - lengths[z]) // 2, cols[z]) for z, m in mu[v] if ldesc[z] & bit]
        for u in below[w]:
            if u == w:
                continue
            gu = lg[u]
            a = cv.get(gu, zero)
            b = cv.get(u, zero)
            if ldesc[u] & bit:
                acc = list(a) + [0]
                for k, c in enumerate(b):
                    acc[k + 1] += c
            else:
                acc = list(b) + [0]
                for k, c in enumerate(a):
                    acc[k + 1] += c
            for z, m, shift, cz in terms:
                p = cz.get(u)
                if p is not None:
                    acc.extend([0] * (len(p) + shift - len(acc)))
                    _shift_sub(acc, m, p, shift)
            if any(acc[depth:]):
                raise OverflowError("degree exceeds table depth")
            acc = acc[:depth]
            if min(acc) < 0:
                raise ArithmeticError(f"negative KL coefficient at ({u}, {w})")
            col[u] = acc
        for u, p in col.items():
            gap = lw - lengths[u]
            if gap % 2 and p[(gap - 1) // 2]:
                mu[w].append((u, p[(gap - 1) // 2]))
        mu[w].sort()
    out = np.zeros((n, n, depth), dtype=np.int64)
    for w in range(n):
        for u, p in cols[w].items():
            out[u, w, :] = p
    return out
