"""Command-line entry point.

Subcommands: verify (randomized corpus), witness (inspect a block
file), probe (sharpness families), search (extremal search /
conjecture probe), gram (build a block from a factor list).

Exit codes: 0 all pass, 1 mathematical violation found, 2 usage or
input error, 3 bound breach in search (reproducer saved).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import checks, extremal, io, verify, witnesses
from .errors import BlockIneqError, BoundExceeded
from .extremal import SearchConfig
from .tolerances import ToleranceCfg

PARAM_FAMILIES = ("niceex", "schur", "projection")
FIXED_FAMILIES = ("dominance", "normal-schur", "referee")


def _parse_dims(text):
    dims = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            dims += list(range(int(lo), int(hi) + 1))
        elif part:
            dims.append(int(part))
    if not dims:
        raise ValueError(f"could not parse dims {text!r}")
    return dims


def _add_tol_flags(p):
    p.add_argument("--tol-rel", type=float, default=1e-9)
    p.add_argument("--tol-abs", type=float, default=1e-12)


def _tol(args):
    return ToleranceCfg(rel=args.tol_rel, abs=args.tol_abs)


def _build_parser():
    parser = argparse.ArgumentParser(prog="blockineq")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the randomized verification corpus")
    p.add_argument("--dims", default="2..4", help="e.g. '2..4' or '2,3,5'")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--suite", default="all", choices=("all",) + verify.SUITES)
    p.add_argument("--out", default="verify_report.json")
    _add_tol_flags(p)

    p = sub.add_parser("witness", help="inspect witnesses for a block JSON file")
    p.add_argument("block_file")
    p.add_argument("--op", default="plus", help="plus | schur | minus")
    p.add_argument("--out", default="witness_report.json")
    _add_tol_flags(p)

    p = sub.add_parser("probe", help="evaluate a sharpness family")
    p.add_argument("--family", required=True, choices=PARAM_FAMILIES + FIXED_FAMILIES)
    p.add_argument("--t-min", type=float, default=0.1)
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--t-steps", type=int, default=99)
    p.add_argument("--out", default="probe_report.json")
    p.add_argument("--plot", action="store_true", help="render a PNG next to the report")
    _add_tol_flags(p)

    p = sub.add_parser("search", help="extremal search for the sharpness constants")
    p.add_argument("--kind", required=True, choices=("triangle", "theorem_plus", "theorem_schur"))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--step-init", type=float, default=0.5)
    p.add_argument("--step-decay", type=float, default=0.9)
    p.add_argument("--out", default="search_report.json")
    p.add_argument("--plot", action="store_true")
    _add_tol_flags(p)

    p = sub.add_parser("gram", help="build a validated block from a factor-list file")
    p.add_argument("factors_file")
    p.add_argument("--out", default="block.json")
    _add_tol_flags(p)
    return parser


def _cmd_verify(args, argv):
    tol = _tol(args)
    dims = _parse_dims(args.dims)
    result = verify.run_suite(dims, args.trials, args.seed, args.suite, tol)
    manifest = io.make_manifest(argv, args.seed, tol)
    io.dump_json(
        {"manifest": manifest.to_jsonable(), "summary": result.summary, "rows": result.rows},
        args.out,
    )
    io.write_csv(result.rows, os.path.splitext(args.out)[0] + ".csv")
    print(
        f"checks_run={result.summary['checks_run']} failures={result.summary['failures']} "
        f"worst_margin={result.summary['worst_margin']:.3e}"
    )
    if result.failures:
        n, trial, check_id = result.failures[0]
        print(
            f"VIOLATION: {check_id} at n={n} trial={trial}; "
            f"reproduce with --dims {n} --trials {trial + 1} --seed {args.seed}",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_witness(args, argv):
    tol = _tol(args)
    blk = io.block_from_json(io.load_json(args.block_file), tol)
    if args.op in ("plus", "schur"):
        agm, geo = witnesses.theorem_witness(blk, args.op, tol)
        reports = [agm, geo]
        if args.op == "plus":
            reports.append(witnesses.mean_witness(blk, "plus", tol))
    elif args.op == "minus":
        geo, agm = witnesses.minus_witness(blk, tol)
        reports = [geo, agm, witnesses.mean_witness(blk, "minus", tol)]
    else:
        raise ValueError(f"unknown op {args.op!r}")
    manifest = io.make_manifest(argv, None, tol, [args.block_file])
    io.dump_json(
        {
            "manifest": manifest.to_jsonable(),
            "block_psd_margin": blk.psd_margin,
            "reports": [rep.to_jsonable() for rep in reports],
        },
        args.out,
    )
    for rep in reports:
        vs = rep.V if isinstance(rep.V, list) else [rep.V]
        print(f"{rep.claim_id}: margin={rep.margin:.6e} pass={rep.passed}")
        print(np.array_str(np.asarray(vs[0]), precision=6, suppress_small=True))
    return 0 if all(rep.passed for rep in reports) else 1


def _probe_rows(args, tol):
    fam = args.family
    if fam in FIXED_FAMILIES:
        probe = {
            "dominance": extremal.probe_dominance_pair,
            "normal-schur": extremal.probe_normal_schur_pair,
            "referee": extremal.probe_referee,
        }[fam]
        r = probe(tol)
        return [{"param": r.param, "ratio": r.ratio, "bound": r.bound, "gap": r.gap}], r.bound
    if args.t_steps < 1 or not args.t_min < args.t_max:
        raise ValueError("need t-min < t-max and t-steps >= 1")
    grid = np.linspace(args.t_min, args.t_max, args.t_steps)
    rows = []
    if fam == "projection":
        for a in grid:
            ratio, closed = checks.projection_ratio(float(a), tol)
            rows.append({"param": float(a), "ratio": ratio, "closed_form": closed})
        return rows, None
    op = "plus" if fam == "niceex" else "schur"
    for t in grid:
        r = extremal.probe_niceex(float(t), op, tol)
        rows.append({"param": r.param, "ratio": r.ratio, "bound": r.bound, "gap": r.gap})
    return rows, 0.25


def _cmd_probe(args, argv):
    tol = _tol(args)
    rows, bound = _probe_rows(args, tol)
    best = max(rows, key=lambda row: row["ratio"])
    manifest = io.make_manifest(argv, None, tol)
    report = {
        "manifest": manifest.to_jsonable(),
        "family": args.family,
        "rows": rows,
        "argmax": best,
    }
    io.dump_json(report, args.out)
    print(f"family={args.family} argmax_param={best['param']:.6g} max_ratio={best['ratio']:.9g}")
    if args.plot:
        from .plots import plot_probe_rows

        png = os.path.splitext(args.out)[0] + ".png"
        plot_probe_rows(rows, bound if bound is not None else max(r["ratio"] for r in rows), png)
        print(f"figure written to {png}")
    return 0


def _search_report(result):
    reproducible = os.environ.get("SOURCE_DATE_EPOCH") is not None
    cfg = result.config
    return {
        "config": {
            "kind": cfg.kind,
            "n": cfg.n,
            "k": cfg.k,
            "budget": cfg.budget,
            "restarts": cfg.restarts,
            "seed": cfg.seed,
            "step_init": cfg.step_init,
            "step_decay": cfg.step_decay,
        },
        "best_value": result.best_value,
        "bound": result.bound,
        "best_point": [io.matrix_to_json(M) for M in result.best_point],
        "eval_count": result.eval_count,
        "trajectory": [[int(e), float(v)] for e, v in result.trajectory],
        "restart_seeds": result.restart_seeds,
        "best_restart": result.best_restart,
        "wall_time": 0.0 if reproducible else result.wall_time,
    }


def _cmd_search(args, argv):
    tol = _tol(args)
    cfg = SearchConfig(
        kind=args.kind,
        n=args.n,
        k=args.k,
        budget=args.budget,
        restarts=args.restarts,
        seed=args.seed,
        step_init=args.step_init,
        step_decay=args.step_decay,
    )
    cfg.validate()
    manifest = io.make_manifest(argv, args.seed, tol)
    try:
        if cfg.kind == "triangle" and cfg.k % 2 == 1 and cfg.k > 1:
            result, summary = extremal.conjecture_report(cfg.k, cfg.n, cfg)
        else:
            result, summary = extremal.search(cfg), None
    except BoundExceeded as exc:
        repro_path = args.out + ".reproducer.json"
        repro = exc.reproducer or {}
        io.dump_json(
            {
                "manifest": manifest.to_jsonable(),
                "value": exc.value,
                "bound": exc.bound,
                "restart": repro.get("restart"),
                "point": [io.matrix_to_json(M) for M in repro.get("point", [])],
            },
            repro_path,
        )
        print(f"BOUND EXCEEDED: {exc} (reproducer saved to {repro_path})", file=sys.stderr)
        return 3
    report = {"manifest": manifest.to_jsonable(), **_search_report(result)}
    if summary is not None:
        report["conjecture_summary"] = summary
    io.dump_json(report, args.out)
    print(
        f"kind={cfg.kind} best_value={result.best_value:.9g} bound={result.bound:g} "
        f"evals={result.eval_count}"
    )
    if args.plot:
        from .plots import plot_search_result

        png = os.path.splitext(args.out)[0] + ".png"
        plot_search_result(result, png)
        print(f"figure written to {png}")
    return 0


def _cmd_gram(args, argv):
    tol = _tol(args)
    pairs = io.factors_from_json(io.load_json(args.factors_file))
    from .blocks import gram_block

    blk = gram_block(pairs, tol)
    manifest = io.make_manifest(argv, None, tol, [args.factors_file])
    io.dump_json({"manifest": manifest.to_jsonable(), "block": io.block_to_json(blk)}, args.out)
    print(f"block written to {args.out} (psd margin {blk.psd_margin:.3e})")
    return 0


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handler = {
        "verify": _cmd_verify,
        "witness": _cmd_witness,
        "probe": _cmd_probe,
        "search": _cmd_search,
        "gram": _cmd_gram,
    }[args.command]
    try:
        return handler(args, ["blockineq"] + argv)
    except BoundExceeded:
        raise  # handled inside _cmd_search; anywhere else is a bug
    except (BlockIneqError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
