"""Command-line surface: construct and verify codes, compute thresholds,
generate families, test the existence bound, and emit the frozen tables.

Exit codes: 0 all requested checks passed; 1 a check failed (non-orthogonal
matrix, closed-form/oracle mismatch, frozen-table mismatch); 2 bad
parameters; 3 oracle budget exceeded.

Oracle budgets are read from GMC_CODEWORD_BUDGET and GMC_RANK_TEST_BUDGET
(exhaustive codeword count and dependent-column rank tests; defaults 1e8
and 1e7).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import __version__, gf, kernels, oracle, presets, quantum
from .evalcode import (
    CodeConfig,
    ConfigError,
    build_evaluation_data,
    build_gen_matrix,
    footprint_bound,
    write_matrix_csv,
)
from .quantum import qgv_beats, size_delta


def _codeword_budget() -> int:
    return int(os.environ.get("GMC_CODEWORD_BUDGET", oracle.DEFAULT_CODEWORD_BUDGET))


def _rank_test_budget() -> int:
    return int(os.environ.get("GMC_RANK_TEST_BUDGET", oracle.DEFAULT_RANK_TEST_BUDGET))


def _add_config_args(p: argparse.ArgumentParser, with_t: bool) -> None:
    p.add_argument("--q", type=int, required=True, help="field size q (prime power)")
    p.add_argument("--lambda", dest="lam", type=int, required=True,
                   help="divisor of q-1, > 1")
    p.add_argument("--tau", type=int, required=True, help="divisor of q+1, > 1")
    p.add_argument("--rho", type=int, required=True, help="divisor of q+1, > 1")
    p.add_argument("--sigma", type=int, required=True,
                   help="2 <= sigma <= rho/gcd(lambda*tau, rho)")
    p.add_argument("--ny", type=int, required=True, help="number of Y points (>= 2)")
    if with_t:
        p.add_argument("--t", type=int, required=True, help="design distance (2 <= t <= n_x+1)")
    p.add_argument("--py", type=str, default=None,
                   help="optional Y points: comma-separated GF(q) encodings, e.g. '0,1,3'")


def _cfg_from_args(args, t: int | None = None) -> CodeConfig:
    return CodeConfig(args.q, args.lam, args.tau, args.rho, args.sigma, args.ny,
                      t if t is not None else getattr(args, "t", None)).validate()


def _py_points(args, ctx):
    if args.py is None:
        return None
    vals = [int(x) for x in args.py.split(",")]
    bad = [v for v in vals if not 0 <= v < ctx.q]
    if bad:
        raise ConfigError(f"Y point encodings {bad} out of range for GF({ctx.q})")
    return [ctx.from_subfield(v) for v in vals]


def _record_dict(cfg: CodeConfig, d: int, n: int, k: int, beats: bool,
                 verified: bool | None, comment: str | None = None) -> dict:
    rec = {
        "schema": 1,
        "q": cfg.q, "lambda": cfg.lam, "tau": cfg.tau, "rho": cfg.rho,
        "sigma": cfg.sigma, "ny": cfg.n_y,
        "t": d, "n": n, "k": k, "d": d,
        "defect": n + 2 - k - 2 * d,
        "beats_qgv": beats,
        "self_orthogonal_verified": verified,
    }
    if comment is not None:
        rec["comment"] = comment
    return rec


def cmd_construct(args) -> int:
    t0 = time.perf_counter()
    cfg = _cfg_from_args(args, t=args.t)
    ctx = cfg.ctx()
    ev = build_evaluation_data(ctx, cfg, _py_points(args, ctx))
    g = build_gen_matrix(ctx, cfg, args.t, ev)
    ts = quantum.closed_form_tstar(cfg)
    k_quantum = g.n - 2 * g.k
    fp = footprint_bound(g.monomials, cfg.n_x, cfg.n_y)
    if ts.ok and args.t <= ts.t_star:
        status = f"guaranteed (t <= T* = {ts.t_star})"
    elif ts.ok:
        status = f"oracle-needed (t > T* = {ts.t_star})"
    else:
        status = f"oracle-needed (closed form: {ts.status})"
    print(f"n = {g.n}")
    print(f"k = {k_quantum}")
    print(f"|delta_t| = {g.k}")
    print(f"footprint bound = {fp}")
    print(f"self-orthogonality: {status}")
    if args.out:
        write_matrix_csv(g, args.out)
        print(f"matrix written to {args.out}")
    print(f"elapsed: {time.perf_counter() - t0:.3f}s")
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    cfg = _cfg_from_args(args, t=args.t)
    ctx = cfg.ctx()
    ev = build_evaluation_data(ctx, cfg, _py_points(args, ctx))
    g = build_gen_matrix(ctx, cfg, args.t, ev)
    ok = oracle.is_hermitian_self_orthogonal(ctx, g)
    print(f"self-orthogonal: {ok}")
    rc = 0 if ok else 1
    if args.dual_distance:
        try:
            dd = oracle.dual_min_distance(ctx, g, args.dual_distance,
                                          max_rank_tests=_rank_test_budget())
        except oracle.BudgetExceeded as exc:
            print(f"dual distance: budget exceeded ({exc})")
            return 3
        print(f"dual distance: {dd if dd is not None else f'> {args.dual_distance}'}")
    if args.min_distance:
        try:
            d = oracle.min_distance_exhaustive(ctx, g, max_codewords=_codeword_budget())
        except oracle.BudgetExceeded as exc:
            print(f"minimum distance: budget exceeded ({exc})")
            return 3
        fp = footprint_bound(g.monomials, cfg.n_x, cfg.n_y)
        print(f"minimum distance: {d} (footprint bound {fp})")
    print(f"elapsed: {time.perf_counter() - t0:.3f}s")
    return rc


def cmd_tstar(args) -> int:
    cfg = _cfg_from_args(args)
    ts = quantum.closed_form_tstar(cfg)
    if ts.ok:
        (e1, e2), (e1p, e2p) = ts.witness
        print(f"T* (closed form) = {ts.t_star}")
        print(f"witness: X^{e1}Y^{e2}, X^{e1p}Y^{e2p}  i.e. (({e1},{e2}),({e1p},{e2p}))")
        print(f"branch: {ts.branch}  constants: C0={ts.c0} D0={ts.d0} "
              f"k1={ts.k1} k2={ts.k2} k3={ts.k3}")
    else:
        print(f"T* (closed form): not available ({ts.status}); use --oracle")
    if args.oracle:
        brute = oracle.tstar_bruteforce(cfg.lam, cfg.tau, cfg.rho, cfg.sigma, cfg.n_y)
        print(f"T* (exhaustive scan) = {brute}")
        if ts.ok and brute != ts.t_star:
            print("MISMATCH between closed form and exhaustive scan", file=sys.stderr)
            return 1
    return 0


def cmd_family(args) -> int:
    recs = quantum.family(args.name, args.q)
    cfg = recs[0].config
    if args.format == "json":
        payload = {
            "schema": 1,
            "family": args.name,
            "rows": [_record_dict(cfg, r.d, r.n, r.k, r.beats_qgv, None) for r in recs],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"config: q={cfg.q} lambda={cfg.lam} tau={cfg.tau} rho={cfg.rho} "
          f"sigma={cfg.sigma} ny={cfg.n_y}")
    for rec in recs:
        print(f"[[{rec.n},{rec.k},{rec.d}]]_{rec.q}  defect={rec.defect}  "
              f"beats_qgv={'yes' if rec.beats_qgv else 'no'}")
    return 0


def cmd_qgv(args) -> int:
    beats = qgv_beats(args.q, args.n, args.k, args.d)
    print(f"beats: {'yes' if beats else 'no'}")
    return 0


def _verified_flags(rows) -> dict[int, bool]:
    """Oracle self-orthogonality per row index, grouped by shared config.

    Rows sort by footprint, so the matrix for the group's largest d contains
    each smaller d's matrix as a leading block.
    """
    out: dict[int, bool] = {}
    groups: dict[CodeConfig, list[int]] = {}
    for i, row in enumerate(rows):
        cfg = CodeConfig(row.q, row.lam, row.tau, row.rho, row.sigma, row.n_y)
        groups.setdefault(cfg, []).append(i)
    for cfg, idxs in groups.items():
        ctx = cfg.ctx()
        t_max = max(rows[i].d for i in idxs)
        g = build_gen_matrix(ctx, cfg, t_max)
        s = np.asarray(kernels.gram(ctx, g.entries, oracle.conj_entries(ctx, g.entries)))
        for i in idxs:
            m = size_delta(rows[i].d, cfg.n_y)
            out[i] = not bool(s[:m, :m].any())
    return out


def cmd_table(args) -> int:
    rows = presets.PRESETS[args.preset]
    verified = _verified_flags(rows) if args.verify else {}
    mismatches = []
    out_rows = []
    for i, row in enumerate(rows):
        cfg = CodeConfig(row.q, row.lam, row.tau, row.rho, row.sigma, row.n_y).validate()
        n = cfg.n
        k = n - 2 * size_delta(row.d, row.n_y)
        beats = qgv_beats(row.q, n, k, row.d)
        if (n, k, beats) != (row.n, row.k, row.beats_qgv):
            mismatches.append(
                f"row {i}: computed (n={n}, k={k}, beats={beats}), "
                f"frozen (n={row.n}, k={row.k}, beats={row.beats_qgv})"
            )
        if args.verify and not verified.get(i, False):
            mismatches.append(f"row {i}: self-orthogonality verification failed")
        out_rows.append((row, n, k, beats, verified.get(i) if args.verify else None))

    if args.format == "json":
        payload = {
            "schema": 1,
            "preset": args.preset,
            "rows": [
                _record_dict(CodeConfig(r.q, r.lam, r.tau, r.rho, r.sigma, r.n_y),
                             r.d, n, k, beats, ver, r.comment)
                for (r, n, k, beats, ver) in out_rows
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("q,lambda,tau,rho,sigma,ny,d,n,k,defect,beats_qgv,comment")
        for (r, n, k, beats, _ver) in out_rows:
            defect = n + 2 - k - 2 * r.d
            comment = r.comment.replace(",", ";")
            print(f"{r.q},{r.lam},{r.tau},{r.rho},{r.sigma},{r.n_y},"
                  f"{r.d},{n},{k},{defect},{beats},{comment}")
    else:  # md
        print("| q,lambda,tau,rho,sigma,ny | code | beats QGV | comment |")
        print("|---|---|---|---|")
        for (r, n, k, beats, _ver) in out_rows:
            cfgs = f"{r.q},{r.lam},{r.tau},{r.rho},{r.sigma},{r.n_y}"
            print(f"| {cfgs} | [[{n},{k},{r.d}]]_{r.q} | "
                  f"{'Yes' if beats else 'No'} | {r.comment} |")

    if mismatches:
        for msg in mismatches:
            print(f"TABLE MISMATCH {msg}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gmc",
        description="Exact-arithmetic toolkit for Hermitian self-orthogonal "
                    "bivariate evaluation codes and their quantum parameters.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a generator matrix and report parameters")
    _add_config_args(p, with_t=True)
    p.add_argument("--out", type=str, default=None, help="write the matrix as CSV")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exhaustively verify Hermitian self-orthogonality")
    _add_config_args(p, with_t=True)
    p.add_argument("--dual-distance", type=int, default=None, metavar="D",
                   help="also search dependent column subsets up to size D")
    p.add_argument("--min-distance", action="store_true",
                   help="also enumerate codewords for the exact minimum distance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tstar", help="closed-form self-orthogonality threshold")
    _add_config_args(p, with_t=False)
    p.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive scan and compare")
    p.set_defaults(func=cmd_tstar)

    p = sub.add_parser("family", help="emit a named code family")
    p.add_argument("--name", choices=["fam1", "fam2", "fam3"], required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("qgv", help="test parameters against the existence bound")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_qgv)

    p = sub.add_parser("table", help="emit a frozen table and check it")
    p.add_argument("--preset", choices=sorted(presets.PRESETS), required=True)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--verify", action="store_true",
                   help="also verify self-orthogonality of every row's construction")
    p.set_defaults(func=cmd_table)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, gf.FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
