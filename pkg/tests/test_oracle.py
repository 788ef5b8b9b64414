"""Oracle tests: exact pair sets, self-orthogonality, threshold scans,
and the two distance searches."""

from __future__ import annotations

import pytest

from gmccodes import oracle, quantum
from gmccodes.evalcode import (
    CodeConfig,
    build_evaluation_data,
    build_gen_matrix,
    footprint_bound,
)
from gmccodes.gf import ctx_for_prime_power
from gmccodes.selforth import lattice_base, tstar_two_points, x_failure_points

FAM1_Q8 = CodeConfig(8, 7, 3, 9, 2, 2)
EXAMPLE_Q8 = CodeConfig(8, 7, 3, 9, 2, 3)
FAM3_Q7 = CodeConfig(7, 3, 4, 8, 2, 3)
Q7_2PT = CodeConfig(7, 3, 4, 8, 2, 2)

FAMILY_CONFIGS = [
    FAM1_Q8,
    CodeConfig(11, 10, 3, 4, 2, 3),   # fam2 parameterization at q=11
    CodeConfig(11, 5, 6, 12, 2, 3),   # alternative q=11 config, same length
    FAM3_Q7,
]


def _ev(cfg):
    ctx = ctx_for_prime_power(cfg.q)
    return ctx, build_evaluation_data(ctx, cfg)


@pytest.mark.parametrize("cfg", FAMILY_CONFIGS)
def test_x_pairs_contained_in_failure_lattice(cfg):
    ctx, ev = _ev(cfg)
    dx = oracle.x_nonorthogonal_pairs(ctx, ev)
    base = lattice_base(cfg.lam, cfg.tau, cfg.rho)
    lat = set(x_failure_points(base, cfg.n_x))
    lat |= {(b, a) for a, b in lat}
    assert dx <= lat
    assert all(a != b for a, b in dx)  # diagonal pairs are always orthogonal
    # symmetry of the defect set
    assert {(b, a) for a, b in dx} == dx


def test_x_pairs_known_membership():
    ctx, ev = _ev(FAM1_Q8)
    dx = oracle.x_nonorthogonal_pairs(ctx, ev)
    # (4,7): satisfies both congruences, not exempt mod rho=9 -> non-orthogonal
    assert (4, 7) in dx
    base = lattice_base(7, 3, 9)
    for a, b in dx:
        assert (a + b - base.L) % 7 == 0 and (a - b) % 3 == 0


def test_x_pairs_rho_exemption():
    # worked q=8, n_Y=3 example: (1, 10) is a lattice point but 1 ≡ 10 (mod 9)
    ctx, ev = _ev(EXAMPLE_Q8)
    dx = oracle.x_nonorthogonal_pairs(ctx, ev)
    assert (1, 10) not in dx
    assert (4, 7) in dx


def test_y_pairs_two_points():
    ctx, ev = _ev(FAM1_Q8)
    dy = oracle.y_nonorthogonal_pairs(ctx, ev)
    assert (0, 0) not in dy
    assert (1, 0) in dy and (0, 1) in dy
    assert dy <= {(1, 0), (0, 1), (1, 1)}


@pytest.mark.parametrize("cfg", [FAM3_Q7, EXAMPLE_Q8, CodeConfig(7, 3, 4, 8, 2, 4)])
def test_y_pairs_respect_sum_threshold(cfg):
    ctx, ev = _ev(cfg)
    dy = oracle.y_nonorthogonal_pairs(ctx, ev)
    for e2, e2p in dy:
        assert e2 + e2p > cfg.n_y - 2
    # the boundary sum is a nonzero power sum, so those pairs are all present
    for e2 in range(cfg.n_y):
        e2p = cfg.n_y - 1 - e2
        assert (e2, e2p) in dy


@pytest.mark.parametrize("cfg", [Q7_2PT, FAM1_Q8, FAM3_Q7])
def test_bivariate_factorization(cfg):
    ctx, ev = _ev(cfg)
    rep = oracle.ortho_report(ctx, ev)
    direct = oracle.bivariate_nonorthogonal_pairs(ctx, ev)
    assert direct == {
        ((x1, y1), (x2, y2)) for x1, x2 in rep.dx for y1, y2 in rep.dy
    }
    assert rep.pairs() == direct


def test_self_orthogonality_and_monotonicity():
    ctx = ctx_for_prime_power(8)
    ev = build_evaluation_data(ctx, EXAMPLE_Q8)
    flags = {}
    for t in range(2, 17):
        g = build_gen_matrix(ctx, EXAMPLE_Q8, t, ev)
        flags[t] = oracle.is_hermitian_self_orthogonal(ctx, g)
    assert all(flags[t] for t in range(2, 16))
    assert flags[16] is False  # one past the manually checked range
    # nested monomial sets make the flag monotone
    for t in range(3, 17):
        if flags[t]:
            assert flags[t - 1]


def test_max_self_orthogonal_t():
    ctx, ev = _ev(EXAMPLE_Q8)
    assert oracle.ortho_report(ctx, ev).max_self_orthogonal_t == 15
    assert oracle.max_self_orthogonal_t(ctx, EXAMPLE_Q8) == 15


@pytest.mark.parametrize("cfg", FAMILY_CONFIGS)
def test_closed_form_is_a_lower_bound(cfg):
    ctx, ev = _ev(cfg)
    rep = oracle.ortho_report(ctx, ev)
    ts = quantum.closed_form_tstar(cfg)
    assert ts.ok
    assert rep.max_self_orthogonal_t >= ts.t_star
    assert tstar_two_points(7, 3, 9, 2).t_star == 10  # anchor for the q=8 entry


def test_closed_form_never_overpromises_across_sweep():
    # end-to-end soundness: on every admissible config of the sweep, the
    # exact inner products allow at least the closed-form threshold
    from gmccodes.evalcode import iter_admissible_configs

    checked = 0
    for q in (7, 8, 11, 13):
        for cfg in iter_admissible_configs(q, (2, 3)):
            from gmccodes.selforth import lattice_base

            if lattice_base(cfg.lam, cfg.tau, cfg.rho).excluded:
                continue
            ts = quantum.closed_form_tstar(cfg)
            if not ts.ok:
                continue
            ctx, ev = _ev(cfg)
            rep = oracle.ortho_report(ctx, ev)
            assert rep.max_self_orthogonal_t >= ts.t_star, cfg
            checked += 1
    assert checked >= 40


def test_tstar_bruteforce_values():
    assert oracle.tstar_bruteforce(7, 3, 9, 2, 2) == 10
    assert oracle.tstar_bruteforce(7, 3, 9, 2, 3) == 11
    best, witness = oracle.tstar_scan(7, 3, 9, 2, 3)
    assert best == 11
    (e1, e2), (e1p, e2p) = witness
    assert e2 + e2p == 2 and (e1 + e1p - 4) % 7 == 0


def test_excluded_regime_exact_end_to_end():
    # (11; 5,3,2,2): the lattice closed form refuses; the congruence scan
    # must stay a safe floor under the exact threshold, and every exact
    # non-orthogonal X-pair must still be lattice-representable
    cfg = CodeConfig(11, 5, 3, 2, 2, 2)
    ctx, ev = _ev(cfg)
    rep = oracle.ortho_report(ctx, ev)
    assert rep.max_self_orthogonal_t == 10
    assert oracle.tstar_bruteforce(5, 3, 2, 2, 2) == 7  # conservative floor
    base = lattice_base(5, 3, 2)
    assert base.excluded
    for a, b in rep.dx:
        if a < b:
            assert (a - b) % 2 != 0  # pairs exempt mod rho=2 never show up
            i, ri = divmod(a + b - base.t1 - base.t2, 5)
            j, rj = divmod(b - a - (base.t2 - base.t1), 3)
            assert ri == 0 and rj == 0 and i >= 0 and j >= 0
            assert (i * 5 - j * 3) % 2 == 0


def test_min_distance_exhaustive():
    ctx = ctx_for_prime_power(7)
    ev = build_evaluation_data(ctx, Q7_2PT)
    g2 = build_gen_matrix(ctx, Q7_2PT, 2, ev)
    assert oracle.min_distance_exhaustive(ctx, g2) == 48  # single all-nonzero row
    g3 = build_gen_matrix(ctx, Q7_2PT, 3, ev)
    assert oracle.min_distance_exhaustive(ctx, g3) == footprint_bound(
        g3.monomials, 24, 2
    )
    with pytest.raises(oracle.BudgetExceeded):
        oracle.min_distance_exhaustive(ctx, g3, max_codewords=100)


def test_dual_min_distance():
    ctx = ctx_for_prime_power(7)
    ev = build_evaluation_data(ctx, Q7_2PT)
    g2 = build_gen_matrix(ctx, Q7_2PT, 2, ev)
    assert oracle.dual_min_distance(ctx, g2, 5) == 2
    g3 = build_gen_matrix(ctx, Q7_2PT, 3, ev)
    assert oracle.dual_min_distance(ctx, g3, 5) == 3
    # d_max below the true value reports None, never a wrong number
    g4 = build_gen_matrix(ctx, Q7_2PT, 4, ev)
    assert oracle.dual_min_distance(ctx, g4, 3) is None
    with pytest.raises(oracle.BudgetExceeded):
        oracle.dual_min_distance(ctx, g4, 5, max_rank_tests=10)
    with pytest.raises(ValueError):
        oracle.dual_min_distance(ctx, g4, 0)


def test_budget_exception_contents():
    try:
        raise oracle.BudgetExceeded("x", 10, 5)
    except oracle.BudgetExceeded as exc:
        assert exc.needed == 10 and exc.budget == 5 and "x" in str(exc)


def test_congruence_pairs_scan():
    pairs = oracle.congruence_pairs(7, 3, 4, 42)
    assert (4, 7) in pairs
    for a, b in pairs:
        assert a < b < 42
        assert (a + b - 4) % 7 == 0 and (a - b) % 3 == 0
