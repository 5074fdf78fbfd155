"""Command line interface: ``dynmwis {run,verify,oracle}``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from .dynamic import DynamicOne, total_time
from .estimator import ALGORITHMS, make_config
from .graph import DynamicGraph
from .io import RunReport, assign_random_weights, parse_metis, parse_sequence, static_to_sequence
from .oracle import MAX_ORACLE_VERTICES, brute_force_mwis

log = logging.getLogger("dynmwis")


class UsageError(Exception):
    pass


def _load(args):
    path = Path(args.input)
    if not path.is_file():
        raise UsageError(f"input file not found: {path}")
    fmt = args.format
    if fmt is None:
        fmt = "seq" if path.suffix == ".seq" else "metis"
    if fmt == "metis":
        static = parse_metis(path)
        seq = static_to_sequence(static)
        file_weights = static.weights
    else:
        seq = parse_sequence(path)
        file_weights = None
    weights = None
    if args.weighted:
        if file_weights is not None and args.weight_seed is None:
            weights = file_weights
        else:
            weights = assign_random_weights(seq.n, args.weight_seed or 0)
    return path.stem, seq, weights


def _config(args, seed):
    custom = dict(depth=args.d, nu_max=args.numax, delta=args.delta, rare_x=args.rare_x)
    if args.no_pinch:
        custom["pinch"] = False
    if args.no_prune:
        custom["prune"] = False
    if args.rare:
        custom["rare"] = True
    try:
        cfg = make_config(args.algo, **custom)
        return cfg.with_(mode="weighted" if args.weighted else "cardinality", seed=seed,
                         t_limit=args.tlimit if args.tlimit and args.tlimit > 0 else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _replay(seq, weights, cfg, every=0, trace=None):
    state = DynamicOne(DynamicGraph(seq.n, weights), cfg)
    rows = []
    for i, (kind, u, v) in enumerate(seq.events):
        row = state.apply(kind, u, v)
        if row is None:
            continue
        rows.append(row)
        if trace:
            r = row.row()
            trace.write(" ".join(f"{k}={r[k]}" for k in r) + "\n")
        if every and len(rows) % every == 0:
            try:
                state.check()
            except AssertionError as exc:
                raise AssertionError(f"after event {i}: {exc}") from None
    return state, rows


def cmd_run(args) -> int:
    if args.weight_seed is not None and not args.weighted:
        raise UsageError("--weight-seed requires --weighted")
    if args.csv and args.repeat > 1:
        raise UsageError("--csv writes a single run; drop --repeat or --csv")
    name, seq, weights = _load(args)
    for k in range(args.repeat):
        seed = args.seed + k
        cfg = _config(args, seed)
        state, rows = _replay(seq, weights, cfg, trace=sys.stdout if args.trace else None)
        report = RunReport(
            instance=name, algo=args.algo, seed=seed, config=asdict(cfg),
            final_weight=state.solution.weight, final_cardinality=state.solution.cardinality,
            total_update_time=total_time(rows), rows=rows,
            obsolete=state.obsolete + seq.obsolete_count, solves=state.solves, timeouts=state.timeouts,
        )
        print(report.summary())
        if args.csv:
            report.write_csv(args.csv)
    return 0


def cmd_verify(args) -> int:
    name, seq, weights = _load(args)
    cfg = _config(args, args.seed)
    try:
        state, rows = _replay(seq, weights, cfg, every=args.every)
        state.check()
    except AssertionError as exc:
        print(f"FAIL {name}: {exc}")
        return 1
    print(f"OK {name}: {len(rows)} updates audited every {args.every}; "
          f"weight={state.solution.weight} cardinality={state.solution.cardinality}")
    return 0


def cmd_oracle(args) -> int:
    name, seq, weights = _load(args)
    if seq.n > MAX_ORACLE_VERTICES:
        raise UsageError(f"oracle handles at most {MAX_ORACLE_VERTICES} vertices, instance has {seq.n}")
    g = DynamicGraph(seq.n, weights)
    for kind, u, v in seq.events:
        if kind == "insert":
            g.insert_edge(u, v)
        else:
            g.delete_edge(u, v)
    chosen, weight = brute_force_mwis(g)
    print(f"alpha={weight} size={len(chosen)} set={' '.join(map(str, chosen))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynmwis", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algo=True):
        p.add_argument("--input", required=True)
        p.add_argument("--format", choices=("metis", "seq"),
                       help="input format (default: by extension, .seq or METIS)")
        p.add_argument("--weighted", action="store_true",
                       help="use vertex weights (file weights, else uniform [1,100])")
        p.add_argument("--weight-seed", type=int)
        if not algo:
            return
        p.add_argument("--algo", choices=ALGORITHMS, default="one-strong")
        p.add_argument("--d", type=int, help="BFS depth (one-custom)")
        p.add_argument("--numax", type=int, help="subproblem size cap (one-custom)")
        p.add_argument("--delta", type=float, help="pinch factor > 1 (one-custom)")
        p.add_argument("--rare-x", type=int, help="solve every x-th eligible update (one-custom)")
        p.add_argument("--rare", action="store_true", help="enable rare updates (one-custom)")
        p.add_argument("--no-pinch", action="store_true", help="(one-custom)")
        p.add_argument("--no-prune", action="store_true", help="(one-custom)")
        p.add_argument("--tlimit", type=float, default=10.0, help="seconds per local solve; 0 = unlimited")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("run", help="replay an instance and report the final solution")
    common(p)
    p.add_argument("--csv", help="write one row per applied update")
    p.add_argument("--trace", action="store_true", help="print every update row")
    p.add_argument("--repeat", type=int, default=1, help="run seeds seed..seed+k-1")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="replay and audit the invariants every k updates")
    common(p)
    p.add_argument("--every", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force optimum of the final graph (small inputs)")
    common(p, algo=False)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dynmwis: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"dynmwis: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
