# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: same contract as _kernels_py.

All field arithmetic is table-indexed (dense uint16 add/mul tables), so the
inner loops are pure array lookups.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"


def gram(unsigned short[:, ::1] mul, unsigned short[:, ::1] add,
         unsigned short[:, ::1] a, unsigned short[:, ::1] b):
    """S[i, j] = field dot product of row a[i] with row b[j]."""
    cdef Py_ssize_t ra = a.shape[0], rb = b.shape[0], n = a.shape[1]
    cdef Py_ssize_t i, j, k
    cdef unsigned short acc
    out_arr = np.zeros((ra, rb), dtype=np.uint16)
    cdef unsigned short[:, ::1] out = out_arr
    for i in range(ra):
        for j in range(rb):
            acc = 0
            for k in range(n):
                acc = add[acc, mul[a[i, k], b[j, k]]]
            out[i, j] = acc
    return out_arr


def min_codeword_weight(unsigned short[:, ::1] mul, unsigned short[:, ::1] add,
                        unsigned short[::1] neg, unsigned short[:, ::1] gen, int q2):
    """Minimum nonzero-codeword weight of the row space (projective scan).

    For each pinned leading coordinate the free message tail runs through an
    odometer; each step applies the field delta of one digit to the kept
    codeword, so the work per message is O(n).
    """
    cdef Py_ssize_t k = gen.shape[0], n = gen.shape[1]
    cdef Py_ssize_t p0, pos, j
    cdef long long total, step
    cdef int best = <int> n, w
    cdef unsigned short d, old
    cdef unsigned short[::1] cw = np.zeros(n, dtype=np.uint16)
    cdef long long[::1] digits = np.zeros(k, dtype=np.int64)

    for p0 in range(k):
        total = 1
        for pos in range(p0 + 1, k):
            total *= q2
        for pos in range(k):
            digits[pos] = 0
        for j in range(n):
            cw[j] = gen[p0, j]
        step = 0
        while True:
            w = 0
            for j in range(n):
                if cw[j] != 0:
                    w += 1
            if w < best:
                best = w
                if best == 1:
                    return 1
            step += 1
            if step >= total:
                break
            pos = p0 + 1
            while True:
                old = <unsigned short> digits[pos]
                if old == q2 - 1:
                    digits[pos] = 0
                    d = neg[old]
                    for j in range(n):
                        cw[j] = add[cw[j], mul[d, gen[pos, j]]]
                    pos += 1
                else:
                    digits[pos] = old + 1
                    d = add[old + 1, neg[old]]
                    for j in range(n):
                        cw[j] = add[cw[j], mul[d, gen[pos, j]]]
                    break
    return best


def first_dependent(unsigned short[:, ::1] mul, unsigned short[:, ::1] add,
                    unsigned short[::1] inv, unsigned short[::1] neg,
                    unsigned short[:, ::1] hcols, long[:, ::1] combos):
    """Index into combos of the first column subset with rank < size, else -1.

    hcols holds the check matrix transposed (hcols[c] = column c).
    """
    cdef Py_ssize_t nb = combos.shape[0], s = combos.shape[1], r = hcols.shape[1]
    cdef Py_ssize_t bi, c, ri, rank, piv, cc
    cdef unsigned short pinv, f, nf, tmp
    work_arr = np.zeros((r, s), dtype=np.uint16)
    cdef unsigned short[:, ::1] m = work_arr
    for bi in range(nb):
        for c in range(s):
            for ri in range(r):
                m[ri, c] = hcols[combos[bi, c], ri]
        rank = 0
        for c in range(s):
            if rank == r:
                break
            piv = -1
            for ri in range(rank, r):
                if m[ri, c] != 0:
                    piv = ri
                    break
            if piv < 0:
                continue
            if piv != rank:
                for cc in range(c, s):
                    tmp = m[rank, cc]
                    m[rank, cc] = m[piv, cc]
                    m[piv, cc] = tmp
            pinv = inv[m[rank, c]]
            for ri in range(rank + 1, r):
                f = m[ri, c]
                if f != 0:
                    nf = neg[mul[f, pinv]]
                    for cc in range(c, s):
                        m[ri, cc] = add[m[ri, cc], mul[nf, m[rank, cc]]]
            rank += 1
        if rank < s:
            return bi
    return -1
