#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python twins.

Times the three hot operations on a realistic workload (the Steiner pencil
of an 8-point configuration over F_101): per-point splitting types, a batch
form evaluation, and batched small ranks.

    python benchmarks/bench_kernels.py --points 2000
"""

import argparse
import random
import time

from jumplines.algebra import prime_field
from jumplines.forms import basis_size, monomials
from jumplines.geom import plane_points, random_config
from jumplines.kernels import backends
from jumplines.steiner import steiner_pencil


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2000, help="plane points per scan")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    p = 101
    field = prime_field(p)
    cfg = random_config(8, field, seed=args.seed)
    sp = steiner_pencil(cfg)
    a0 = [int(v) for v in sp.A0.entries]
    a1 = [int(v) for v in sp.A1.entries]
    a2 = [int(v) for v in sp.A2.entries]
    pts = plane_points(p)[: args.points]
    flat = [c for pt in pts for c in pt]

    rng = random.Random(args.seed)
    deg = 12
    coeffs = [rng.randrange(p) for _ in range(basis_size(deg))]
    exps = [v for e in monomials(deg) for v in e]

    mats = [[rng.randrange(p) for _ in range(20 * 21)] for _ in range(400)]

    impls = backends()
    rows = []
    for name, impl in sorted(impls.items()):
        t_scan = timeit(lambda: impl.splitting_scan(a0, a1, a2, 5, 7, flat, p), repeat=1 if name == "pure" else 3)
        t_eval = timeit(lambda: impl.eval_form_many(coeffs, exps, flat, p))
        t_rank = timeit(lambda: [impl.rank_mod_p(m, 20, 21, p) for m in mats])
        rows.append((name, t_scan, t_eval, t_rank))

    print(f"workload: {args.points} plane points, 8-point pencil over F_{p}")
    print(f"{'backend':<10} {'splitting_scan':>15} {'eval_form_many':>15} {'rank x400':>12}")
    for name, t_scan, t_eval, t_rank in rows:
        print(f"{name:<10} {t_scan:>13.4f}s {t_eval:>13.4f}s {t_rank:>10.4f}s")
    if len(rows) == 2:
        by = {r[0]: r[1:] for r in rows}
        if "compiled" in by and "pure" in by:
            ratios = [p_ / c_ for c_, p_ in zip(by["compiled"], by["pure"])]
            print(
                "speedup compiled vs pure: "
                + ", ".join(f"{r:.0f}x" for r in ratios)
                + " (scan, eval, rank)"
            )


if __name__ == "__main__":
    main()
