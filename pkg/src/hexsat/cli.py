"""Command-line entry point.

Subcommands: encode, canon, holes, witness, run, selftest.  Exit codes:
0 success, 1 domain error (one-line diagnostic on stderr), 2 usage error.
Identical invocations produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import canon, encoder, solver, witness
from .geometry import has_empty_kgon
from .pointio import read_points_file, write_points_file
from .selftest import run_selftest


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexsat",
        description="Exact-geometry CNF toolkit for empty-hexagon search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="write a formula as DIMACS plus varmap")
    enc.add_argument("--mode", required=True, choices=["hole6", "gon6", "naive-hole"])
    enc.add_argument("--n", type=int, required=True)
    enc.add_argument("--k", type=int, help="hole size for naive-hole mode")
    enc.add_argument("--out", required=True, help="output CNF path")

    can = sub.add_parser("canon", help="canonicalize a points file")
    can.add_argument("--points", required=True, help="input points file")
    can.add_argument("--out", required=True, help="output points file")
    can.add_argument("--plot", help="also render a before/after figure (PNG)")

    hol = sub.add_parser("holes", help="search a points file for a k-hole")
    hol.add_argument("--k", type=int, required=True)
    hol.add_argument("--points", required=True)
    hol.add_argument("--plot", help="also render the configuration (PNG)")

    wit = sub.add_parser("witness", help="check the intended model of a points file")
    wit.add_argument("--points", required=True, help="canonical points file")
    wit.add_argument("--mode", default="hole6", choices=["hole6", "gon6"])

    run = sub.add_parser("run", help="encode, solve and log one case")
    run.add_argument("--mode", required=True, choices=["hole6", "gon6", "naive-hole"])
    run.add_argument("--n", type=int, required=True)
    run.add_argument("--k", type=int, help="hole size for naive-hole mode")
    run.add_argument("--solver-cmd", help="solver command template with {cnf}")
    run.add_argument("--timeout", type=float, default=600.0)
    run.add_argument("--check-proofs", action="store_true")
    run.add_argument("--checker-cmd", help="proof checker template with {cnf} {proof}")
    run.add_argument("--config", help="key=value solver config file")
    run.add_argument("--log", help="results log to append to")
    run.add_argument("--workdir", help="keep CNF/proof files here")

    st = sub.add_parser("selftest", help="run the seeded property suites")
    st.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_encode(args) -> int:
    if args.mode == "naive-hole":
        if args.k is None:
            raise ValueError("encode --mode naive-hole requires --k")
        cnf, vm = encoder.encode_naive_hole(args.k, args.n)
        mode = f"naive-hole({args.k})"
    elif args.mode == "gon6":
        cnf, vm = encoder.encode_gon6(args.n)
        mode = "gon6"
    else:
        cnf, vm = encoder.encode_hole6(args.n)
        mode = "hole6"
    path = encoder.write_dimacs(cnf, vm, args.out, mode=mode, n=args.n)
    print(f"wrote {path} ({cnf.num_vars} vars, {len(cnf.clauses)} clauses)")
    print(f"wrote {Path(path).with_suffix('.varmap')}")
    return 0


def _format_payload(payload) -> str:
    if isinstance(payload, tuple):
        return "(" + ", ".join(_format_payload(v) for v in payload) + ")"
    return str(payload)


def _cmd_canon(args) -> int:
    points = read_points_file(args.points)
    cfg = canon.canonicalize(points)
    comments = [f"canonicalized from {Path(args.points).name}"]
    comments += [f"parity: {cfg.parity}"]
    comments += [f"{step[0]}: {_format_payload(step[1])}" for step in cfg.provenance]
    write_points_file(args.out, cfg.points, comments)
    print(f"wrote {args.out} (parity={cfg.parity})")
    if args.plot:
        from .plotting import render_before_after

        render_before_after(points, cfg.points, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _cmd_holes(args) -> int:
    points = read_points_file(args.points)
    found = has_empty_kgon(args.k, points)
    if found is None:
        print("none")
    else:
        indices = [points.index(p) + 1 for p in found]
        print(" ".join(str(i) for i in indices))
    if args.plot:
        from .plotting import render_points

        render_points(
            points,
            args.plot,
            highlight=found,
            title=f"{args.k}-hole search",
        )
        print(f"wrote {args.plot}", file=sys.stderr)
    return 0


def _cmd_witness(args) -> int:
    points = read_points_file(args.points)
    n = len(points)
    if args.mode == "gon6":
        cnf, vm = encoder.encode_gon6(n)
        tau = witness.build_tau(points, vm, force_holes=True)
    else:
        cnf, vm = encoder.encode_hole6(n)
        tau = witness.build_tau(points, vm)
    result = witness.eval_cnf(cnf, tau, vm, points=points)
    if result.satisfied:
        print(f"satisfied: intended model satisfies {args.mode} formula for n={n}")
        return 0
    print(str(result.report))
    return 1


def _cmd_run(args) -> int:
    if args.config:
        config = solver.parse_config_file(args.config)
    else:
        config = solver.default_config()
    if args.solver_cmd:
        config.command = args.solver_cmd
    if args.timeout:
        config.timeout = args.timeout
    if args.checker_cmd:
        config.checker_command = args.checker_cmd
    if args.check_proofs:
        config.check_proofs = True
        if not config.checker_command:
            raise ValueError("--check-proofs requires --checker-cmd or a config entry")
    result = solver.run_case(
        args.mode,
        args.n,
        config,
        k=args.k,
        workdir=args.workdir,
        log_path=args.log,
    )
    print(result.verdict)
    if result.verdict == "UNKNOWN" and result.reason:
        print(result.reason, file=sys.stderr)
    return 0 if result.verdict != "UNKNOWN" else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "encode":
            return _cmd_encode(args)
        if args.command == "canon":
            return _cmd_canon(args)
        if args.command == "holes":
            return _cmd_holes(args)
        if args.command == "witness":
            return _cmd_witness(args)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "selftest":
            return run_selftest(args.seed)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, FileNotFoundError, solver.SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
