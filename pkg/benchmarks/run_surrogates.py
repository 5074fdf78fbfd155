"""Run the presets on the synthetic surrogates and print result tables.

    python benchmarks/run_surrogates.py                 # both instances, all presets
    python benchmarks/run_surrogates.py --only road --sweep
    python benchmarks/run_surrogates.py --write-metis out/   # files for the CLI

Needs scipy (for the surrogate generators) on top of the package itself.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from surrogates import mesh, metis_order, road  # noqa: E402

from dynmwis import DynamicGraph, assign_random_weights, preset, run_sequence  # noqa: E402
from dynmwis.dynamic import total_time  # noqa: E402
from dynmwis.io import write_metis  # noqa: E402

INSTANCES = {"mesh": mesh, "road": road}
ALGOS = ("greedy", "deggreedy", "one-fast", "one-strong")


def replay(n, events, cfg, weights=None):
    start = time.perf_counter()
    state, stats = run_sequence(DynamicGraph(n, weights), events, cfg)
    return state, total_time(stats), time.perf_counter() - start


def table(name, n, events, weighted):
    weights = assign_random_weights(n, 0) if weighted else None
    mode = "weighted" if weighted else "cardinality"
    print(f"\n{name} ({n} vertices, {len(events)} insertions, {mode})")
    print(f"{'algo':<11}{'result':>9}{'solves':>8}{'timeouts':>10}{'update s':>10}")
    for algo in ALGOS:
        state, t, _ = replay(n, events, preset(algo, mode=mode), weights)
        value = state.solution.weight if weighted else state.solution.cardinality
        print(f"{algo:<11}{value:>9}{state.solves:>8}{state.timeouts:>10}{t:>10.2f}", flush=True)


def sweep(name, n, events, seeds=5):
    print(f"\n{name}: depth sweep, nu_max=2500, no pinching or pruning, mean over {seeds} seeds")
    for d in range(5):
        cfg = preset("one-strong", depth=d, pinch=False, prune=False)
        sizes = [replay(n, events, cfg.with_(seed=s))[0].solution.cardinality for s in range(seeds)]
        print(f"d={d}: {statistics.mean(sizes):.1f}", flush=True)
    print(f"\n{name}: pruning and rare updates at d=10, no pinching")
    base = preset("one-strong", pinch=False)
    for label, cfg in [
        ("prune off", base.with_(prune=False)),
        ("prune on", base),
        ("prune + rare x=3", base.with_(rare=True, rare_x=3)),
    ]:
        state, t, _ = replay(n, events, cfg)
        print(f"{label:<17} cardinality {state.solution.cardinality:>6}  update time {t:.2f}s", flush=True)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--only", choices=sorted(INSTANCES))
    p.add_argument("--seed", type=int, default=0, help="surrogate generator seed")
    p.add_argument("--weighted", action="store_true", help="also run with [1,100] weights")
    p.add_argument("--sweep", action="store_true", help="depth sweep and pruning/rare comparison")
    p.add_argument("--write-metis", metavar="DIR", help="write the surrogates as METIS files and exit")
    args = p.parse_args(argv)
    names = [args.only] if args.only else sorted(INSTANCES)
    for name in names:
        n, edges = INSTANCES[name](seed=args.seed)
        events = [("insert", u, v) for u, v in metis_order(n, edges)]
        if args.write_metis:
            out = Path(args.write_metis)
            out.mkdir(parents=True, exist_ok=True)
            write_metis(out / f"{name}-surrogate.graph", DynamicGraph.from_edges(n, edges))
            continue
        table(name, n, events, weighted=False)
        if args.weighted:
            table(name, n, events, weighted=True)
        if args.sweep:
            sweep(name, n, events)


if __name__ == "__main__":
    main()
