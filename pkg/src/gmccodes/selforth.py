"""Closed-form self-orthogonality thresholds for the bivariate construction.

Pairs of X-exponents that can break Hermitian orthogonality satisfy two
congruences (sum ≡ L mod λ, difference ≡ 0 mod τ) and, ordered e1 < e1',
form a shifted lattice ``(T1,T2) + i(λ/2,λ/2) + j(−τ/2,τ/2)`` with i,j ≥ 0.
Everything in this module is exact integer arithmetic over that lattice: the
case table fixing (L, T1, T2), the lattice enumeration, and the minimised
total footprint T* for both the 2-point and the general n_Y-point choice of
the second variable.  t ≤ T* guarantees the constructed code is Hermitian
self-orthogonal; the oracle module re-derives the same quantities by
exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass

Pair = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class LatticeBase:
    """Case row: congruence offset L and base point (t1, t2) of the lattice.

    ``excluded`` marks the regime (λ, τ odd, ρ = 2, λ ≥ τ+2) where the
    lattice decomposition provably misses some congruence pairs; closed
    forms refuse to answer there and callers fall back to the oracle.
    """

    case_id: int
    lam: int
    tau: int
    rho: int
    L: int
    t1: int
    t2: int
    excluded: bool = False


@dataclass(frozen=True)
class TstarResult:
    """Minimised total footprint plus the witnessing exponent pair.

    status is "ok", "guard_failed" (the n_Y-point validity guards do not
    hold) or "excluded" (see LatticeBase); t_star and witness are None
    unless "ok".
    """

    status: str
    t_star: int | None
    witness: Pair | None
    branch: str
    c0: int
    d0: int
    k1: int | None = None
    k2: int | None = None
    k3: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def lattice_base(lam: int, tau: int, rho: int) -> LatticeBase:
    """Select the (L, T1, T2) row for the given parameter regime."""
    if lam <= 1 or tau <= 1 or rho <= 1:
        raise ValueError("lambda, tau, rho must all exceed 1")
    if lam % 2 == 0:
        case, L = 1, 2 * tau - 2
        t1, t2 = (lam - 2) // 2, (lam + 4 * tau - 2) // 2
    elif lam < tau or tau % 2 == 0 or rho == 2:
        case, L = 2, tau - 2
        t1, t2 = lam - 1, lam + tau - 1
    else:
        case, L = 3, 2 * tau - 2
        t1, t2 = (lam + tau - 2) // 2, (lam + 3 * tau - 2) // 2
    excluded = lam % 2 == 1 and tau % 2 == 1 and rho == 2 and lam >= tau + 2
    return LatticeBase(case, lam, tau, rho, L, t1, t2, excluded)


def x_failure_points(base: LatticeBase, n_x: int) -> list[tuple[int, int]]:
    """All lattice points (e1, e1') with integral coordinates, e1 ≥ 0, e1' < n_x.

    Empty for the excluded regime: there the lattice is not a faithful
    description and the caller must use the exhaustive oracle instead.
    """
    if base.excluded:
        return []
    lam, tau, t1, t2 = base.lam, base.tau, base.t1, base.t2
    budget = 2 * (n_x - 1 - t2)  # i*lam + j*tau may not exceed this
    pts = []
    if budget < 0:
        return pts
    for i in range(budget // lam + 1):
        rem = budget - i * lam
        for j in range(rem // tau + 1):
            if (i * lam + j * tau) % 2:
                continue  # half-integer coordinates
            e1 = t1 + (i * lam - j * tau) // 2
            if e1 < 0:
                break  # e1 decreases with j
            pts.append((e1, t2 + (i * lam + j * tau) // 2))
    pts.sort()
    return pts


def total_footprint(pair: Pair) -> int:
    """max of the two monomial footprints (e+1)(f+1)."""
    (e1, e2), (e1p, e2p) = pair
    if min(e1, e2, e1p, e2p) < 0:
        raise ValueError("exponents must be non-negative")
    return max((e1 + 1) * (e2 + 1), (e1p + 1) * (e2p + 1))


def _minimise(c0: int, d0: int, tau: int, mult: int, e2_hi: int) -> tuple[int, Pair, str, int, int, int]:
    """Shared branch logic: minimise max(mult*C_j, D_j) over admissible j.

    mult is 2 for the 2-point construction and n_Y in general; e2_hi is the
    witness Y-exponent on the C side (1 resp. n_Y−1).
    """
    if tau % 2 == 0:
        k1 = max((2 * (c0 - 1)) // tau, 0)
        k2 = max(_ceil_div(2 * (mult * c0 - d0), (mult + 1) * tau), 0)
        k3 = max((2 * (mult * c0 - d0) + mult * tau) // ((mult + 1) * tau), 0)
        j_c1, j_d, j_c3 = k1, k2, k2 - 1
    else:
        k1 = max((c0 - 1) // tau, 0)
        k2 = max(_ceil_div(mult * c0 - d0, (mult + 1) * tau), 0)
        k3 = max((mult * c0 - d0 + mult * tau) // ((mult + 1) * tau), 0)
        j_c1, j_d, j_c3 = 2 * k1, 2 * k2, 2 * k2 - 2

    if k1 < k2:
        j, branch = j_c1, "C@k1"
    elif k3 == k2:
        j, branch = j_d, "D@k2"
    elif k3 == k2 - 1:
        j, branch = j_c3, "C@k2-1"
    else:  # k3 is floor(x+const) of k2's ceil argument; only these two cases occur
        raise AssertionError(f"unexpected constants k1={k1} k2={k2} k3={k3}")

    cj = c0 - (j * tau) // 2
    dj = d0 + (j * tau) // 2
    witness: Pair = ((cj - 1, e2_hi), (dj - 1, 0))
    t_star = total_footprint(witness)
    expected = dj if branch == "D@k2" else mult * cj
    if t_star != expected:
        raise AssertionError("branch value disagrees with witness footprint")
    return t_star, witness, branch, k1, k2, k3


def tstar_two_points(lam: int, tau: int, rho: int, sigma: int) -> TstarResult:
    """Largest guaranteed-self-orthogonal t when two Y-points are used."""
    base = lattice_base(lam, tau, rho)
    c0, d0 = base.t1 + 1, base.t2 + 1
    if base.excluded:
        return TstarResult("excluded", None, None, "excluded", c0, d0)
    t_star, witness, branch, k1, k2, k3 = _minimise(c0, d0, tau, 2, 1)
    return TstarResult("ok", t_star, witness, branch, c0, d0, k1, k2, k3)


def tstar_ny_points(lam: int, tau: int, rho: int, sigma: int, n_y: int) -> TstarResult:
    """Largest guaranteed-self-orthogonal t for n_Y points in the second variable.

    The closed form is only valid under two guards: n_Y·C0 ≤ D0+λ (the
    lattice minimum sits at i = 0) and D0 ≥ λ (it sits at Y-split l = 0).
    Outside them the result carries status "guard_failed" and no value;
    the exhaustive scan still applies.
    """
    if n_y < 2:
        raise ValueError("n_y must be at least 2")
    base = lattice_base(lam, tau, rho)
    c0, d0 = base.t1 + 1, base.t2 + 1
    if base.excluded:
        return TstarResult("excluded", None, None, "excluded", c0, d0)
    if n_y * c0 > d0 + lam or d0 < lam:
        return TstarResult("guard_failed", None, None, "guard_failed", c0, d0)
    t_star, witness, branch, k1, k2, k3 = _minimise(c0, d0, tau, n_y, n_y - 1)
    return TstarResult("ok", t_star, witness, branch, c0, d0, k1, k2, k3)
