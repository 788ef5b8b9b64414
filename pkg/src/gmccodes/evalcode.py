"""Evaluation-code construction over GF(q²).

Builds the two coordinate ingredients (a root-of-unity product grid with a
norm-prescribed weight vector in the X variable; a subfield point set with
a Vandermonde-kernel weight vector in the Y variable) and from them the
separable-weight generator matrices whose rows evaluate the monomials
of the hyperbolic exponent set Δ_t.

Orderings are fixed once and for all so every matrix and file is
reproducible: the X grid is row-major in (i, j, ℓ), columns cross X-major
with the Y points, and Δ_t rows sort by (footprint, e2, e1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import gf, kernels, selforth
from .gf import Felt, FieldCtx


class ConfigError(ValueError):
    """Inadmissible construction parameters; the message names the constraint."""


class Monomial(NamedTuple):
    e1: int
    e2: int

    @property
    def footprint(self) -> int:
        return (self.e1 + 1) * (self.e2 + 1)


@dataclass(frozen=True)
class CodeConfig:
    """Construction parameters (q; λ, τ, ρ, σ; n_Y) and optional t."""

    q: int
    lam: int
    tau: int
    rho: int
    sigma: int
    n_y: int
    t: int | None = None

    @property
    def n_x(self) -> int:
        return self.lam * self.tau * self.sigma

    @property
    def n(self) -> int:
        return self.n_x * self.n_y

    @property
    def sigma_cap(self) -> int:
        return self.rho // gcd(self.lam * self.tau, self.rho)

    def validate(self) -> "CodeConfig":
        q = self.q
        try:
            gf.split_prime_power(q)
        except gf.FieldError as exc:
            raise ConfigError(str(exc)) from None
        if q < 4:
            raise ConfigError(f"q={q} violates q >= 4")
        if self.lam <= 1 or (q - 1) % self.lam:
            raise ConfigError(f"lambda={self.lam} must be a divisor of q-1={q - 1} with lambda > 1")
        if self.tau <= 1 or (q + 1) % self.tau:
            raise ConfigError(f"tau={self.tau} must be a divisor of q+1={q + 1} with tau > 1")
        if self.rho <= 1 or (q + 1) % self.rho:
            raise ConfigError(f"rho={self.rho} must be a divisor of q+1={q + 1} with rho > 1")
        if gcd(self.lam, self.tau) != 1:
            raise ConfigError(f"gcd(lambda, tau) = {gcd(self.lam, self.tau)} violates gcd(lambda, tau) = 1")
        cap = self.sigma_cap
        if cap < 2:
            raise ConfigError(
                f"rho/gcd(lambda*tau, rho) = {cap} violates rho/gcd(lambda*tau, rho) >= 2"
            )
        if not 2 <= self.sigma <= cap:
            raise ConfigError(
                f"sigma={self.sigma} violates 2 <= sigma <= rho/gcd(lambda*tau, rho) = {cap}"
            )
        if self.n_y < 2:
            raise ConfigError(f"n_y={self.n_y} violates n_y >= 2")
        if self.n_y > q:
            raise ConfigError(f"n_y={self.n_y} violates n_y <= q={q}")
        if self.t is not None and not 2 <= self.t <= self.n_x + 1:
            raise ConfigError(
                f"t={self.t} violates 2 <= t <= n_x+1 = {self.n_x + 1}"
                " (larger t forces X-exponents e1 >= n_x)"
            )
        return self

    @property
    def is_admissible(self) -> bool:
        try:
            self.validate()
        except ConfigError:
            return False
        return True

    def with_t(self, t: int) -> "CodeConfig":
        return CodeConfig(self.q, self.lam, self.tau, self.rho, self.sigma, self.n_y, t)

    def ctx(self) -> FieldCtx:
        return gf.ctx_for_prime_power(self.q)


@dataclass(frozen=True)
class EvaluationData:
    """Point sets and weight vectors, in the fixed coordinate order."""

    ctx: FieldCtx
    cfg: CodeConfig
    px: tuple[Felt, ...]
    v: tuple[Felt, ...]
    py: tuple[Felt, ...]
    w: tuple[Felt, ...]
    s: tuple[Felt, ...]
    L: int


def delta_set(t: int, n_x: int, n_y: int) -> list[Monomial]:
    """Monomials with (e1+1)(e2+1) < t inside the exponent box.

    Sorted by (footprint, e2, e1), the generator-matrix row order.
    """
    out = [
        Monomial(a, b)
        for b in range(n_y)
        for a in range(min(n_x, t - 1))
        if (a + 1) * (b + 1) < t
    ]
    out.sort(key=lambda mo: (mo.footprint, mo.e2, mo.e1))
    return out


def footprint_bound(delta: Sequence[Monomial], n_x: int, n_y: int) -> int:
    """min (n_x − e1)(n_y − e2): lower bound on the code's minimum distance."""
    if not delta:
        raise ConfigError("footprint bound of an empty monomial set")
    return min((n_x - m[0]) * (n_y - m[1]) for m in delta)


def px_index(cfg: CodeConfig, i: int, j: int, l: int) -> int:
    return (i * cfg.tau + j) * cfg.sigma + l


def build_px(ctx: FieldCtx, cfg: CodeConfig) -> list[Felt]:
    """X evaluation points ζ_λ^i ζ_τ^j ζ_ρ^ℓ, row-major in (i, j, ℓ)."""
    cfg.validate()
    zl = gf.root_of_unity(ctx, cfg.lam)
    zt = gf.root_of_unity(ctx, cfg.tau)
    zr = gf.root_of_unity(ctx, cfg.rho)
    zl_pows = _powers(zl, cfg.lam)
    zt_pows = _powers(zt, cfg.tau)
    zr_pows = _powers(zr, cfg.sigma)
    px = [
        zl_pows[i] * zt_pows[j] * zr_pows[l]
        for i in range(cfg.lam)
        for j in range(cfg.tau)
        for l in range(cfg.sigma)
    ]
    if len({f.val for f in px}) != len(px):
        raise ConfigError("X evaluation points are not pairwise distinct")
    return px


def _powers(z: Felt, count: int) -> list[Felt]:
    out = [z.ctx.one]
    for _ in range(count - 1):
        out.append(out[-1] * z)
    return out


def build_s(ctx: FieldCtx, sigma: int) -> list[Felt]:
    """Nonzero subfield constants s_0..s_{σ−1} with zero sum."""
    if sigma < 2:
        raise ConfigError(f"sigma={sigma} violates sigma >= 2")
    one = ctx.one
    if sigma == 2:
        return [one, -one]
    if ctx.q <= 2:
        raise ConfigError("sigma >= 3 requires q > 2")
    partial = (sigma - 2) % ctx.p  # sum of the leading ones, a prime-field value
    forbidden = {0, ctx.neg(partial)}
    pick = next(
        ctx.felt(v) for v in ctx.subfield_elements() if v not in forbidden
    )
    s = [one] * (sigma - 2) + [pick]
    total = ctx.zero
    for x in s:
        total = total + x
    s.append(-total)
    assert all(x.val for x in s)
    return s


def build_v(ctx: FieldCtx, cfg: CodeConfig, L: int, s: Sequence[Felt] | None = None) -> list[Felt]:
    """X weight vector: v(i,j,ℓ) is a norm-equation solution of ζ_λ^{−iL} s_ℓ."""
    cfg.validate()
    if s is None:
        s = build_s(ctx, cfg.sigma)
    zl = gf.root_of_unity(ctx, cfg.lam)
    v: list[Felt] = []
    for i in range(cfg.lam):
        zi = zl ** ((-i * L) % cfg.lam)
        cell = [gf.norm_solve(ctx, zi * s[l]) for l in range(cfg.sigma)]
        for _ in range(cfg.tau):
            v.extend(cell)
    return v


def build_py_w(ctx: FieldCtx, cfg: CodeConfig,
               py: Sequence[Felt] | None = None) -> tuple[list[Felt], list[Felt]]:
    """Y points (first n_Y subfield elements unless overridden) and weights.

    The weights solve w(j)^(q+1) = w_q(j) for the Vandermonde-kernel vector
    w_q of the points; for n_Y = 2 this gives w_q = (−1, 1), so the two
    weight norms cancel.
    """
    cfg.validate()
    if py is None:
        py = [ctx.from_subfield(a) for a in range(cfg.n_y)]
    else:
        py = list(py)
        if len(py) != cfg.n_y:
            raise ConfigError(f"expected {cfg.n_y} Y points, got {len(py)}")
    wq = gf.vandermonde_kernel(ctx, py)
    w = [gf.norm_solve(ctx, c) for c in wq]
    return py, w


def build_evaluation_data(ctx: FieldCtx, cfg: CodeConfig,
                          py: Sequence[Felt] | None = None) -> EvaluationData:
    cfg.validate()
    base = selforth.lattice_base(cfg.lam, cfg.tau, cfg.rho)
    s = build_s(ctx, cfg.sigma)
    px = build_px(ctx, cfg)
    v = build_v(ctx, cfg, base.L, s)
    py_pts, w = build_py_w(ctx, cfg, py)
    return EvaluationData(ctx, cfg, tuple(px), tuple(v), tuple(py_pts), tuple(w),
                          tuple(s), base.L)


def hermitian_ip(ctx: FieldCtx, a: Sequence[Felt], b: Sequence[Felt]) -> Felt:
    """Sesquilinear product Σ a_k b_k^q (conjugation on the second argument)."""
    if len(a) != len(b):
        raise gf.FieldError(f"length mismatch: {len(a)} vs {len(b)}")
    acc = 0
    for x, y in zip(a, b):
        acc = ctx.add(acc, ctx.mul(x.val, ctx.conj(y.val)))
    return Felt(ctx, acc)


def evaluation_matrix(ctx: FieldCtx, ev: EvaluationData,
                      monomials: Sequence[Monomial]) -> np.ndarray:
    """One row per monomial: row[c] = Q_c · x_c^e1 · y_c^e2, columns X-major."""
    cfg = ev.cfg
    n_x, n_y = cfg.n_x, cfg.n_y
    pxv = [f.val for f in ev.px]
    pyv = [f.val for f in ev.py]
    qv = [
        ctx.mul(ev.v[x].val, ev.w[y].val)
        for x in range(n_x)
        for y in range(n_y)
    ]
    max_e1 = max((m.e1 for m in monomials), default=0)
    max_e2 = max((m.e2 for m in monomials), default=0)
    xp = _power_rows(ctx, pxv, max_e1)
    yp = _power_rows(ctx, pyv, max_e2)
    out = np.zeros((len(monomials), n_x * n_y), dtype=np.uint32)
    for r, (e1, e2) in enumerate(monomials):
        xrow = xp[e1]
        yrow = yp[e2]
        c = 0
        for x in range(n_x):
            fx = xrow[x]
            for y in range(n_y):
                out[r, c] = ctx.mul(qv[c], ctx.mul(fx, yrow[y]))
                c += 1
    return out


def _power_rows(ctx: FieldCtx, vals: list[int], max_e: int) -> list[list[int]]:
    rows = [[1] * len(vals)]
    for _ in range(max_e):
        rows.append([ctx.mul(a, b) for a, b in zip(rows[-1], vals)])
    return rows


@dataclass(frozen=True, eq=False)
class GenMatrix:
    """Generator matrix of the code spanned by the Δ_t monomial evaluations."""

    ctx: FieldCtx
    cfg: CodeConfig
    t: int
    monomials: tuple[Monomial, ...]
    entries: np.ndarray  # (|Δ_t|, n) integer encodings

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    def rank(self) -> int:
        return kernels.matrix_rank(self.ctx, self.entries)

    def row(self, i: int) -> list[Felt]:
        return [Felt(self.ctx, int(x)) for x in self.entries[i]]


def build_gen_matrix(ctx: FieldCtx, cfg: CodeConfig, t: int | None = None,
                     ev: EvaluationData | None = None) -> GenMatrix:
    t = cfg.t if t is None else t
    if t is None:
        raise ConfigError("no t given (neither argument nor config field)")
    cfg.with_t(t).validate()
    if ev is None:
        ev = build_evaluation_data(ctx, cfg)
    monos = delta_set(t, cfg.n_x, cfg.n_y)
    entries = evaluation_matrix(ctx, ev, monos)
    return GenMatrix(ctx, cfg, t, tuple(monos), entries)


def matrix_csv_lines(g: GenMatrix) -> list[str]:
    """Header names, header values (n, k = |Δ_t|, q), then encoded rows."""
    lines = ["n,k,q", f"{g.n},{g.k},{g.cfg.q}"]
    for row in g.entries:
        lines.append(",".join(str(int(x)) for x in row))
    return lines


def write_matrix_csv(g: GenMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(matrix_csv_lines(g)) + "\n")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def iter_admissible_configs(q: int, n_ys: Sequence[int] = (2,)) -> Iterator[CodeConfig]:
    """All admissible (λ, τ, ρ, σ, n_Y) for a given q, in deterministic order."""
    for lam in _divisors(q - 1):
        if lam <= 1:
            continue
        for tau in _divisors(q + 1):
            if tau <= 1 or gcd(lam, tau) != 1:
                continue
            for rho in _divisors(q + 1):
                if rho <= 1:
                    continue
                cap = rho // gcd(lam * tau, rho)
                if cap < 2:
                    continue
                for sigma in range(2, cap + 1):
                    for n_y in n_ys:
                        cfg = CodeConfig(q, lam, tau, rho, sigma, n_y)
                        if cfg.is_admissible:
                            yield cfg
