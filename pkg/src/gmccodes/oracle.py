"""Exhaustive ground truth, independent of the closed forms.

Everything here recomputes from first principles: non-orthogonal exponent
pairs by summing the actual inner products, the self-orthogonality of a
generator matrix entry by entry, the minimal failure footprint by scanning
the congruences, and code distances by enumerating codewords or column
subsets.  Budgets are explicit; exhaustion raises, it never degrades to a
silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, selforth
from .evalcode import (
    CodeConfig,
    EvaluationData,
    GenMatrix,
    Monomial,
    evaluation_matrix,
)
from .gf import FieldCtx

DEFAULT_CODEWORD_BUDGET = 100_000_000
DEFAULT_RANK_TEST_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """The requested exhaustive search exceeds the stated budget."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what} needs {needed} steps, budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


@dataclass(frozen=True)
class OrthoReport:
    """Exact non-orthogonal pair sets and the largest safe t they allow."""

    dx: frozenset[tuple[int, int]]
    dy: frozenset[tuple[int, int]]
    max_self_orthogonal_t: int

    def pairs(self):
        """The combined set: X-pair crossed with Y-pair, componentwise."""
        return frozenset(
            ((x1, y1), (x2, y2)) for (x1, x2) in self.dx for (y1, y2) in self.dy
        )


def conj_entries(ctx: FieldCtx, entries: np.ndarray) -> np.ndarray:
    """Entrywise q-th power of a matrix of encodings."""
    if ctx.q2 <= (1 << 20):
        return ctx.conj_table[entries]
    out = np.array([[ctx.conj(int(x)) for x in row] for row in entries],
                   dtype=entries.dtype)
    return out


def _univariate_pairs(ctx: FieldCtx, points: list[int], weights: list[int],
                      count: int) -> set[tuple[int, int]]:
    # S[e, e'] = sum_k norm(w_k) * x_k^e * conj(x_k)^e'
    norms = [ctx.norm(wv) for wv in weights]
    conj_pts = [ctx.conj(x) for x in points]
    a_rows, arow = [], list(norms)
    b_rows, brow = [], [1] * len(points)
    for _ in range(count):
        a_rows.append(arow)
        b_rows.append(brow)
        arow = [ctx.mul(x, y) for x, y in zip(arow, points)]
        brow = [ctx.mul(x, y) for x, y in zip(brow, conj_pts)]
    s = kernels.gram(ctx, np.array(a_rows, dtype=np.uint32),
                     np.array(b_rows, dtype=np.uint32))
    e, ep = np.nonzero(s)
    return {(int(i), int(j)) for i, j in zip(e, ep)}


def x_nonorthogonal_pairs(ctx: FieldCtx, ev: EvaluationData) -> set[tuple[int, int]]:
    """All (e1, e1') with nonzero univariate Hermitian product in X."""
    return _univariate_pairs(ctx, [f.val for f in ev.px], [f.val for f in ev.v],
                             ev.cfg.n_x)


def y_nonorthogonal_pairs(ctx: FieldCtx, ev: EvaluationData) -> set[tuple[int, int]]:
    """All (e2, e2') with nonzero univariate Hermitian product in Y."""
    return _univariate_pairs(ctx, [f.val for f in ev.py], [f.val for f in ev.w],
                             ev.cfg.n_y)


def bivariate_nonorthogonal_pairs(ctx: FieldCtx, ev: EvaluationData):
    """Direct bivariate recomputation over every monomial pair (small configs)."""
    cfg = ev.cfg
    monos = [Monomial(e1, e2) for e1 in range(cfg.n_x) for e2 in range(cfg.n_y)]
    mat = evaluation_matrix(ctx, ev, monos)
    s = kernels.gram(ctx, mat, conj_entries(ctx, mat))
    i, j = np.nonzero(s)
    return {(tuple(monos[a]), tuple(monos[b])) for a, b in zip(i, j)}


def ortho_report(ctx: FieldCtx, ev: EvaluationData) -> OrthoReport:
    dx = x_nonorthogonal_pairs(ctx, ev)
    dy = y_nonorthogonal_pairs(ctx, ev)
    cap = ev.cfg.n_x + 1  # beyond this no Δ_t fits the exponent box anyway
    best = cap
    for x1, x2 in dx:
        for y1, y2 in dy:
            tf = max((x1 + 1) * (y1 + 1), (x2 + 1) * (y2 + 1))
            if tf < best:
                best = tf
    return OrthoReport(frozenset(dx), frozenset(dy), best)


def is_hermitian_self_orthogonal(ctx: FieldCtx, g: GenMatrix | np.ndarray) -> bool:
    """G · conj(G)ᵀ = 0, entry by entry."""
    entries = g.entries if isinstance(g, GenMatrix) else np.asarray(g)
    s = kernels.gram(ctx, entries, conj_entries(ctx, entries))
    return not bool(np.asarray(s).any())


def tstar_scan(lam: int, tau: int, rho: int, sigma: int, n_y: int):
    """(min total footprint, witness) over the congruence-defined failure set.

    X pairs are all 0 ≤ e1 < e1' < n_x with e1+e1' ≡ L (mod λ) and
    e1 ≡ e1' (mod τ); Y pairs are all e2+e2' > n_y−2.  Exhaustive.
    """
    base = selforth.lattice_base(lam, tau, rho)
    n_x = lam * tau * sigma
    ypairs = [
        (e2, e2p)
        for e2 in range(n_y)
        for e2p in range(n_y)
        if e2 + e2p > n_y - 2
    ]
    best = None
    witness = None
    for e1 in range(n_x):
        for e1p in range(e1 + 1, n_x):
            if (e1 + e1p - base.L) % lam or (e1 - e1p) % tau:
                continue
            for e2, e2p in ypairs:
                tf = max((e1 + 1) * (e2 + 1), (e1p + 1) * (e2p + 1))
                if best is None or tf < best:
                    best = tf
                    witness = ((e1, e2), (e1p, e2p))
    return best, witness


def tstar_bruteforce(lam: int, tau: int, rho: int, sigma: int, n_y: int) -> int:
    """Minimal total footprint over all failure points, by exhaustive scan."""
    best, _ = tstar_scan(lam, tau, rho, sigma, n_y)
    if best is None:
        return lam * tau * sigma + 1
    return best


def congruence_pairs(lam: int, tau: int, L: int, n_x: int) -> set[tuple[int, int]]:
    """Brute-force scan of the two X congruences with e1 < e1' < n_x."""
    return {
        (e1, e1p)
        for e1 in range(n_x)
        for e1p in range(e1 + 1, n_x)
        if (e1 + e1p - L) % lam == 0 and (e1 - e1p) % tau == 0
    }


def max_self_orthogonal_t(ctx: FieldCtx, cfg: CodeConfig) -> int:
    """Largest t whose Δ_t×Δ_t pairs all have zero Hermitian product."""
    from .evalcode import build_evaluation_data

    ev = build_evaluation_data(ctx, cfg)
    return ortho_report(ctx, ev).max_self_orthogonal_t


def min_distance_exhaustive(ctx: FieldCtx, g: GenMatrix,
                            max_codewords: int = DEFAULT_CODEWORD_BUDGET) -> int:
    """Minimum weight by enumerating the full message space (projectively)."""
    total = ctx.q2 ** g.k
    if total > max_codewords:
        raise BudgetExceeded("codeword enumeration", total, max_codewords)
    return kernels.min_codeword_weight(ctx, g.entries)


def dual_min_distance(ctx: FieldCtx, g: GenMatrix, d_max: int,
                      max_rank_tests: int = DEFAULT_RANK_TEST_BUDGET) -> int | None:
    """Minimum distance of the Hermitian dual, as the smallest dependent
    column subset of the entrywise q-th-power matrix; None if it exceeds d_max.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    needed = kernels.subset_test_count(g.n, d_max)
    if needed > max_rank_tests:
        raise BudgetExceeded("dependent-column search", needed, max_rank_tests)
    h = conj_entries(ctx, g.entries)
    hit = kernels.min_dependent_columns(ctx, h, d_max)
    return hit if hit else None
