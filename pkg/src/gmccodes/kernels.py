"""Backend selection for the hot exact-arithmetic kernels.

The compiled extension (``gmccodes._kernels``, Cython) is used when it was
built; otherwise the numpy/python backend.  ``GMC_FORCE_PY_KERNELS=1``
forces the fallback, which is how the benchmark compares the two.  Fields
beyond the dense pair-table limit are routed to table-free scalar code.
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled  # built by setup.py; optional
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None


def has_compiled() -> bool:
    return _compiled is not None


def active_backend() -> str:
    if _compiled is None or os.environ.get("GMC_FORCE_PY_KERNELS") == "1":
        return "python"
    return "compiled"


def get_backend(name: str | None = None):
    name = name or active_backend()
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    if name == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {name!r}")


def _as_u16(a) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(a, dtype=np.uint16))


def gram(ctx, a, b, backend: str | None = None) -> np.ndarray:
    """S[i, j] = sum_k a[i, k] * b[j, k] over GF(q²)."""
    if not ctx.has_pair_tables:
        return _kernels_py.gram_scalar(ctx, np.asarray(a), np.asarray(b))
    mod = get_backend(backend)
    return np.asarray(
        mod.gram(ctx.mul_table, ctx.add_table, _as_u16(a), _as_u16(b))
    )


def matrix_rank(ctx, mat, backend: str | None = None) -> int:
    if not ctx.has_pair_tables:
        return _kernels_py.matrix_rank_scalar(ctx, np.asarray(mat))
    return _kernels_py.matrix_rank(
        ctx.mul_table, ctx.add_table, ctx.inv_table, ctx.neg_table, _as_u16(mat)
    )


def min_codeword_weight(ctx, gen, backend: str | None = None) -> int:
    """Minimum nonzero-codeword weight of the row space of gen (full rank)."""
    if not ctx.has_pair_tables:
        return _kernels_py.min_codeword_weight_scalar(ctx, np.asarray(gen))
    mod = get_backend(backend)
    return int(mod.min_codeword_weight(ctx.mul_table, ctx.add_table, ctx.neg_table,
                                       _as_u16(gen), ctx.q2))


def min_dependent_columns(ctx, h, d_max: int, backend: str | None = None,
                          batch: int = 4096) -> int:
    """Smallest s ≤ d_max such that some s columns of h are dependent; 0 if none."""
    h = np.asarray(h)
    rows, n = h.shape
    if d_max >= 1 and bool((h == 0).all(axis=0).any()):
        return 1
    if d_max < 2:
        return 0
    if not ctx.has_pair_tables:
        hcols = [list(map(int, h[:, c])) for c in range(n)]
        for s in range(2, d_max + 1):
            if _kernels_py.first_dependent_scalar(
                ctx, hcols, list(itertools.combinations(range(n), s))
            ) >= 0:
                return s
        return 0

    # s = 2: two columns are dependent iff they normalise identically
    mul, inv = ctx.mul_table, ctx.inv_table
    seen: set[tuple[int, ...]] = set()
    for c in range(n):
        col = h[:, c]
        lead = col[np.flatnonzero(col)[0]]
        key = tuple(mul[col, inv[lead]].tolist())
        if key in seen:
            return 2
        seen.add(key)

    mod = get_backend(backend)
    hcols = _as_u16(h.T)
    for s in range(3, d_max + 1):
        combos = itertools.combinations(range(n), s)
        while True:
            chunk = np.fromiter(
                itertools.chain.from_iterable(itertools.islice(combos, batch)),
                dtype=np.int64,
            ).reshape(-1, s)
            if chunk.size == 0:
                break
            hit = mod.first_dependent(
                ctx.mul_table, ctx.add_table, ctx.inv_table, ctx.neg_table,
                hcols, chunk,
            )
            if hit >= 0:
                return s
            if chunk.shape[0] < batch:
                break
    return 0


def subset_test_count(n: int, d_max: int) -> int:
    """Number of rank tests a full dependent-column search may need."""
    return sum(math.comb(n, s) for s in range(1, d_max + 1))
