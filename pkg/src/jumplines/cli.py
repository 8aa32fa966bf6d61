"""Command-line surface.

Subcommands: gen, jump, monoidal, gamma, pencil4, degrees, verify, render.
Exit codes: 0 success, 1 usage error, 2 degenerate input, 3 verdict failure.
Every command is replayable: identical flags and seeds give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import DegenerateInputError, FieldSpec, distinct_degree_profile, up_squarefree_part
from .forms import monoidal_det
from .geom import PointConfig, random_config
from .intersect import jumping_length, tangency_degree
from .jumping import (
    gamma_points,
    jumping_scan,
    length_accounting,
    lift_eliminant_roots,
    pencil4_eliminant,
)
from .render import render_svg
from .verify import SHIPPED_SEEDS, run_all


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_config(args) -> PointConfig:
    if getattr(args, "config", None):
        with open(args.config) as fh:
            return PointConfig.from_json(fh.read())
    if getattr(args, "count", None):
        field = FieldSpec.from_tag(args.field)
        return random_config(args.count, field, seed=args.seed, retries=args.retries)
    raise UsageError("provide --config FILE or --count/--seed/--field")


def _add_config_source(sub, with_count=True):
    sub.add_argument("--config", help="configuration JSON file")
    if with_count:
        sub.add_argument("--count", type=int, help="generate: number of points")
        sub.add_argument("--field", default="fp:101", help="q or fp:<p> (default fp:101)")
        sub.add_argument("--seed", type=int, default=1, help="generator seed")
        sub.add_argument("--retries", type=int, default=1000, help="generator retry budget")


def build_parser() -> _Parser:
    ap = _Parser(prog="jumplines", description=__doc__.splitlines()[0])
    sp = ap.add_subparsers(dest="command", required=True)

    g = sp.add_parser("gen", help="generate a general-position configuration")
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--field", default="fp:101")
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--retries", type=int, default=1000)
    g.add_argument("--out", default=None)

    j = sp.add_parser("jump", help="exhaustive jumping-line scan over the plane")
    _add_config_source(j)
    j.add_argument("--format", choices=("json", "csv"), default="json")
    j.add_argument("--threads", type=int, default=1)
    j.add_argument("--out", default=None)

    mo = sp.add_parser("monoidal", help="monoidal determinant of an odd configuration")
    _add_config_source(mo)
    mo.add_argument("--out", default=None)

    ga = sp.add_parser("gamma", help="rational extra jumping points of an even configuration")
    _add_config_source(ga)
    ga.add_argument("--out", default=None)

    p4 = sp.add_parser("pencil4", help="eliminant pipeline for an 8-point configuration")
    _add_config_source(p4)
    p4.add_argument("--transform-seed", type=int, default=0)
    p4.add_argument("--out", default=None)

    de = sp.add_parser("degrees", help="intersection-theory degree table")
    de.add_argument("--n-max", type=int, default=12)
    de.add_argument("--out", default=None)

    ve = sp.add_parser("verify", help="run the full verification suite")
    ve.add_argument("--seeds", default=",".join(str(s) for s in SHIPPED_SEEDS),
                    help="comma-separated seed list")
    ve.add_argument("--p", type=int, default=101)
    ve.add_argument("--threads", type=int, default=1)
    ve.add_argument("--trials", type=int, default=4, help="curves intersected in the base-locus check")
    ve.add_argument("--out", default=None)

    re = sp.add_parser("render", help="SVG picture of a rational configuration")
    _add_config_source(re)
    re.add_argument("--grid", type=int, default=160)
    re.add_argument("--out", default=None)
    return ap


def cmd_gen(args) -> int:
    field = FieldSpec.from_tag(args.field)
    cfg = random_config(args.count, field, seed=args.seed, retries=args.retries)
    _write(args.out, cfg.to_json())
    return 0


def cmd_jump(args) -> int:
    cfg = _load_config(args)
    rep = jumping_scan(cfg, threads=args.threads)
    _write(args.out, rep.to_json() if args.format == "json" else rep.to_csv())
    return 0 if rep.all_verdicts_true() else 3


def cmd_monoidal(args) -> int:
    cfg = _load_config(args)
    mono = monoidal_det(cfg)
    _write(args.out, json.dumps(mono.to_json_obj(cfg.field), indent=2) + "\n")
    return 0


def cmd_gamma(args) -> int:
    cfg = _load_config(args)
    pts = gamma_points(cfg)
    f = cfg.field
    payload = {
        "count": len(pts),
        "gamma": [[f.to_json(c) for c in pt] for pt in pts],
    }
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_pencil4(args) -> int:
    cfg = _load_config(args)
    f = cfg.field
    res = pencil4_eliminant(cfg, transform_seed=args.transform_seed)
    sf = up_squarefree_part(f, res.r12)
    payload = {
        "degrees": {"r16": len(res.r16) - 1, "r4": len(res.r4) - 1, "r12": len(res.r12) - 1},
        "r12": [f.to_json(c) for c in res.r12],
        "r16": [f.to_json(c) for c in res.r16],
        "r4": [f.to_json(c) for c in res.r4],
        "squarefree": len(sf) == len(res.r12),
        "closure_degree_buckets": distinct_degree_profile(f, sf) if f.kind == "fp" else None,
        "transform": [f.to_json(v) for v in res.transform.entries],
        "attempts": res.attempts,
        "lifted_rational_roots": [[f.to_json(c) for c in pt] for pt in lift_eliminant_roots(cfg, res)]
        if f.kind == "fp"
        else None,
    }
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_degrees(args) -> int:
    rows = []
    for n in range(2, args.n_max + 1):
        dim, deg = tangency_degree(n)
        total, z_part, gamma_part = length_accounting(n)
        rows.append(
            {
                "n": n,
                "dim": dim,
                "deg": deg,
                "jumping_length": jumping_length(n),
                "z_part": z_part,
                "gamma_part": gamma_part,
            }
        )
    _write(args.out, json.dumps(rows, indent=2) + "\n")
    return 0


def cmd_verify(args) -> int:
    seeds = tuple(int(s) for s in args.seeds.split(",") if s)
    results, bundles = run_all(seeds=seeds, p=args.p, threads=args.threads, trials=args.trials)
    lines = [r.line() for r in results]
    report = {
        "seeds": list(seeds),
        "p": args.p,
        "reseeds": {b.seed: b.reseeds for b in bundles if b.reseeds},
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    for line in lines:
        print(line)
    if args.out:
        _write(args.out, json.dumps(report, indent=2) + "\n")
    return 0 if report["all_passed"] else 3


def cmd_render(args) -> int:
    cfg = _load_config(args)
    _write(args.out, render_svg(cfg, grid=args.grid))
    return 0


_DISPATCH = {
    "gen": cmd_gen,
    "jump": cmd_jump,
    "monoidal": cmd_monoidal,
    "gamma": cmd_gamma,
    "pencil4": cmd_pencil4,
    "degrees": cmd_degrees,
    "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DegenerateInputError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
