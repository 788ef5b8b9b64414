"""Numpy/pure-python kernel backend.

Same contract as the compiled extension: dense uint16 add/mul tables index
all field arithmetic.  Scalar (table-free) variants exist for fields too
large for pair tables; they take the field context directly.
"""

from __future__ import annotations

import itertools

import numpy as np

BACKEND = "python"


def _fold_add(add: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Field-sum along axis 1 by pairwise folding."""
    cur = rows
    while cur.shape[1] > 1:
        if cur.shape[1] % 2:
            pad = np.zeros((cur.shape[0], 1), dtype=cur.dtype)
            cur = np.concatenate([cur, pad], axis=1)
        cur = add[cur[:, 0::2], cur[:, 1::2]]
    return cur[:, 0]


def gram(mul: np.ndarray, add: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """S[i, j] = field dot product of row a[i] with row b[j]."""
    out = np.empty((a.shape[0], b.shape[0]), dtype=np.uint16)
    for i in range(a.shape[0]):
        out[i] = _fold_add(add, mul[a[i][None, :], b])
    return out


def matrix_rank(mul: np.ndarray, add: np.ndarray, inv: np.ndarray, neg: np.ndarray,
                mat: np.ndarray) -> int:
    m = mat.copy()
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if m[r, c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        prow = mul[m[rank], inv[m[rank, c]]]
        m[rank] = prow
        for r in range(rank + 1, rows):
            f = m[r, c]
            if f:
                m[r] = add[m[r], mul[neg[f], prow]]
        rank += 1
    return rank


def min_codeword_weight(mul: np.ndarray, add: np.ndarray, neg: np.ndarray,
                        gen: np.ndarray, q2: int, block: int = 1 << 13) -> int:
    """Minimum Hamming weight over the row space, excluding the zero word.

    Messages are enumerated projectively: first nonzero coordinate pinned to
    1, remaining coordinates free; weight is scalar-invariant.  (neg is
    unused here; the compiled twin needs it for incremental updates.)
    """
    k, n = gen.shape
    best = n
    for p0 in range(k):
        total = q2 ** (k - p0 - 1)
        base = gen[p0]
        done = 0
        while done < total:
            cnt = int(min(block, total - done))
            idx = np.arange(done, done + cnt, dtype=np.int64)
            cw = np.broadcast_to(base, (cnt, n)).copy()
            tmp = idx
            for r in range(p0 + 1, k):
                dig = tmp % q2
                tmp = tmp // q2
                cw = add[cw, mul[dig[:, None], gen[r][None, :]]]
            w = int(np.count_nonzero(cw, axis=1).min())
            if w < best:
                best = w
                if best == 1:
                    return 1
            done += cnt
    return best


def _rank_lists(mul_l, add_l, inv_l, neg_l, mat, rows: int, cols: int) -> int:
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if mat[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        pinv = inv_l[prow[c]]
        for r in range(rank + 1, rows):
            f = mat[r][c]
            if f:
                nf = neg_l[mul_l[f][pinv]]
                row = mat[r]
                mrow = mul_l[nf]
                for cc in range(c, cols):
                    row[cc] = add_l[row[cc]][mrow[prow[cc]]]
        rank += 1
    return rank


def first_dependent(mul: np.ndarray, add: np.ndarray, inv: np.ndarray, neg: np.ndarray,
                    hcols: np.ndarray, combos) -> int:
    """Index (into combos) of the first column subset with rank < size, or -1.

    hcols is the matrix transposed: hcols[c] is column c of the check matrix.
    """
    mul_l = mul.tolist()
    add_l = add.tolist()
    inv_l = inv.tolist()
    neg_l = neg.tolist()
    cols_l = hcols.tolist()
    if hasattr(combos, "tolist"):
        combos = combos.tolist()
    r = len(cols_l[0])
    for bi, comb in enumerate(combos):
        s = len(comb)
        mat = [[cols_l[c][ri] for c in comb] for ri in range(r)]
        if _rank_lists(mul_l, add_l, inv_l, neg_l, mat, r, s) < s:
            return bi
    return -1


# ---------------------------------------------------------------------------
# table-free fallbacks for fields beyond the pair-table limit
# ---------------------------------------------------------------------------

def gram_scalar(ctx, a, b) -> np.ndarray:
    out = np.zeros((len(a), len(b)), dtype=np.int64)
    for i, ra in enumerate(a):
        for j, rb in enumerate(b):
            acc = 0
            for x, y in zip(ra, rb):
                acc = ctx.add(acc, ctx.mul(int(x), int(y)))
            out[i, j] = acc
    return out


def matrix_rank_scalar(ctx, mat) -> int:
    m = [[int(x) for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = next((r for r in range(rank, rows) if m[r][c]), -1)
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pinv = ctx.inv(m[rank][c])
        prow = [ctx.mul(x, pinv) for x in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, rows):
            f = m[r][c]
            if f:
                nf = ctx.neg(f)
                m[r] = [ctx.add(x, ctx.mul(nf, y)) for x, y in zip(m[r], prow)]
        rank += 1
    return rank


def min_codeword_weight_scalar(ctx, gen) -> int:
    rows = [[int(x) for x in r] for r in gen]
    k = len(rows)
    n = len(rows[0])
    q2 = ctx.q2
    best = n
    for p0 in range(k):
        for tail in itertools.product(range(q2), repeat=k - p0 - 1):
            cw = list(rows[p0])
            for r, m in enumerate(tail):
                if m:
                    grow = rows[p0 + 1 + r]
                    cw = [ctx.add(x, ctx.mul(m, y)) for x, y in zip(cw, grow)]
            best = min(best, sum(1 for x in cw if x))
            if best == 1:
                return 1
    return best


def first_dependent_scalar(ctx, hcols, combos) -> int:
    r = len(hcols[0])
    for bi, comb in enumerate(combos):
        s = len(comb)
        mat = [[int(hcols[c][ri]) for c in comb] for ri in range(r)]
        if matrix_rank_scalar(ctx, mat) < s:
            return bi
    return -1
