"""Quantum-side parameters: code dimension, Singleton defect, the exact
Gilbert–Varshamov existence test, and the three named code families.

Every comparison against the existence bound is exact big-integer
arithmetic; the relevant powers (q^(n−k+2) at q = 32, n−k ≈ 120) far exceed
machine words and floating point would mis-flag near-boundary rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import selforth
from .evalcode import CodeConfig, ConfigError
from .gf import split_prime_power


@dataclass(frozen=True)
class QuantumRecord:
    """One [[n, k, d]]_q parameter row with its defect and existence flag."""

    q: int
    n: int
    k: int
    d: int
    defect: int
    beats_qgv: bool
    config: CodeConfig | None = None


def size_delta(t: int, n_y: int) -> int:
    """|Δ_t| = Σ_{i=1..n_Y} floor((t−1)/i), the code dimension at distance t."""
    if t < 1 or n_y < 1:
        raise ValueError("t and n_y must be positive")
    return sum((t - 1) // i for i in range(1, n_y + 1))


def singleton_defect(rec: QuantumRecord) -> int:
    """n + 2 − k − 2d; zero exactly for quantum MDS parameters."""
    return rec.n + 2 - rec.k - 2 * rec.d


def qgv_beats(q: int, n: int, k: int, d: int) -> bool:
    """True iff the existence inequality fails (the parameters beat the bound).

    Inequality: (q^(n−k+2) − 1)/(q² − 1) ≥ Σ_{i=1..d−1} (q² − 1)^(i−1) C(n, i).
    """
    if not n > k >= 2:
        raise ValueError(f"need n > k >= 2, got n={n}, k={k}")
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if (n - k) % 2:
        raise ValueError(f"need n ≡ k (mod 2), got n={n}, k={k}")
    lhs = (q ** (n - k + 2) - 1) // (q * q - 1)
    rhs = sum((q * q - 1) ** (i - 1) * comb(n, i) for i in range(1, d))
    return lhs < rhs


def closed_form_tstar(cfg: CodeConfig) -> selforth.TstarResult:
    if cfg.n_y == 2:
        return selforth.tstar_two_points(cfg.lam, cfg.tau, cfg.rho, cfg.sigma)
    return selforth.tstar_ny_points(cfg.lam, cfg.tau, cfg.rho, cfg.sigma, cfg.n_y)


def stabilizer_params(cfg: CodeConfig, d: int, *, oracle_verified: bool = False) -> QuantumRecord:
    """The [[n, n − 2|Δ_d|, d]]_q record for a self-orthogonal construction.

    Guarded: d must lie inside the closed-form threshold, or the caller must
    assert that the oracle verified self-orthogonality at t = d.
    """
    cfg.validate()
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if not oracle_verified:
        ts = closed_form_tstar(cfg)
        if not ts.ok or d > ts.t_star:
            have = f"T*={ts.t_star}" if ts.ok else f"status={ts.status}"
            raise ValueError(
                f"d={d} is not covered by the closed form ({have}); "
                "verify self-orthogonality with the oracle first"
            )
    n = cfg.n
    k = n - 2 * size_delta(d, cfg.n_y)
    rec = QuantumRecord(cfg.q, n, k, d, n + 2 - k - 2 * d, qgv_beats(cfg.q, n, k, d), cfg)
    if rec.defect < 0:
        raise AssertionError(f"negative Singleton defect for {rec}")
    return rec


_FAMILIES = ("fam1", "fam2", "fam3")


def family(name: str, q: int) -> list[QuantumRecord]:
    """All records of one named family at a given q, d = 2 .. d_max."""
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {_FAMILIES}")
    if name == "fam1":
        if q <= 2 or q % 2 or q % 3 != 2:
            raise ConfigError(f"fam1 requires even q > 2 with q ≡ 2 (mod 3); got q={q}")
        cfg = CodeConfig(q, q - 1, (q + 1) // 3, q + 1, 2, 2)
        d_max = (4 * q - 2) // 3
    elif name == "fam2":
        if q < 11 or q % 8 != 3:
            raise ConfigError(f"fam2 requires q >= 11 with q ≡ 3 (mod 8); got q={q}")
        cfg = CodeConfig(q, q - 1, (q + 1) // 4, 4, 2, 3)
        d_max = (5 * q + 1) // 4
    else:
        if q % 8 != 7:
            raise ConfigError(f"fam3 requires q ≡ 7 (mod 8); got q={q}")
        cfg = CodeConfig(q, (q - 1) // 2, (q + 1) // 2, 8, 2, 3)
        d_max = (5 * q + 1) // 4
    cfg.validate()
    ts = closed_form_tstar(cfg)
    if not ts.ok or ts.t_star < d_max:
        raise AssertionError(
            f"closed form gives {ts.status}/{ts.t_star}, below the family range {d_max}"
        )
    return [stabilizer_params(cfg, d) for d in range(2, d_max + 1)]


def _two_point_config_of_length(q: int, n_x: int) -> CodeConfig | None:
    """An admissible (λ, τ, ρ, σ, n_Y=2) with λτσ = n_x, if one exists."""
    from .evalcode import iter_admissible_configs

    for cfg in iter_admissible_configs(q, (2,)):
        if cfg.n_x == n_x:
            return cfg
    return None


def long_code_qgv_records(q: int) -> list[QuantumRecord]:
    """Records at n = 2(q²−1), d ∈ [5, ⌊3q/2⌋], asserting each beats the bound.

    k follows the two-point dimension rule; a realizing two-point config is
    attached when one exists for this q (it does for q = 32, not for all q).
    """
    if q < 11:
        raise ValueError(f"q must be at least 11, got q={q}")
    split_prime_power(q)
    n = 2 * (q * q - 1)
    cfg = _two_point_config_of_length(q, q * q - 1)
    out = []
    for d in range(5, (3 * q) // 2 + 1):
        k = n - 2 * (d - 1 + (d - 1) // 2)
        beats = qgv_beats(q, n, k, d)
        if not beats:
            raise AssertionError(
                f"[[{n},{k},{d}]]_{q} unexpectedly satisfies the existence inequality"
            )
        out.append(QuantumRecord(q, n, k, d, n + 2 - k - 2 * d, True, cfg))
    return out
