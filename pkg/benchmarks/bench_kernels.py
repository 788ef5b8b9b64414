"""Benchmark the compiled kernel backend against the python fallback.

Workloads are the three hot oracle paths: exhaustive codeword-weight
enumeration, Gram products for self-orthogonality checks, and the
dependent-column scan behind the dual-distance search.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from gmccodes import kernels, oracle
from gmccodes.evalcode import CodeConfig, build_evaluation_data, build_gen_matrix
from gmccodes.gf import ctx_for_prime_power


def _time(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ctx7 = ctx_for_prime_power(7)
    cfg7 = CodeConfig(7, 3, 4, 8, 2, 2)
    ev7 = build_evaluation_data(ctx7, cfg7)
    g4 = build_gen_matrix(ctx7, cfg7, 4, ev7)

    ctx32 = ctx_for_prime_power(32)
    cfg32 = CodeConfig(32, 31, 11, 33, 3, 2)
    g42 = build_gen_matrix(ctx32, cfg32, 42)
    g42_conj = oracle.conj_entries(ctx32, g42.entries)

    h4 = oracle.conj_entries(ctx7, g4.entries)

    workloads = [
        ("weight enumeration  (GF(49), 49^4 messages)",
         lambda be: kernels.min_codeword_weight(ctx7, g4.entries, backend=be)),
        ("gram product        (GF(1024), 61x2046)",
         lambda be: kernels.gram(ctx32, g42.entries, g42_conj, backend=be)),
        ("dependent columns   (GF(49), 4x48, subsets <= 3)",
         lambda be: kernels.min_dependent_columns(ctx7, h4, 3, backend=be)),
    ]

    backends = ["python"] + (["compiled"] if kernels.has_compiled() else [])
    if len(backends) == 1:
        print("compiled backend not built; timing the python backend only")
    print(f"{'workload':<52}" + "".join(f"{be:>12}" for be in backends) + f"{'speedup':>10}")
    for name, fn in workloads:
        times = {}
        results = {}
        for be in backends:
            results[be] = None
            times[be] = _time(lambda be=be: results.__setitem__(be, fn(be)))
        vals = list(results.values())
        if isinstance(vals[0], np.ndarray):
            assert all(np.array_equal(vals[0], v) for v in vals[1:])
        else:
            assert len({v if not isinstance(v, np.ndarray) else None for v in vals}) == 1
        line = f"{name:<52}" + "".join(f"{times[be]:>11.4f}s" for be in backends)
        if len(backends) == 2:
            line += f"{times['python'] / times['compiled']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
