"""Command-line front end: generators, solvers, transforms, and sweeps.

All randomness flows from one ``--seed`` (default 1729); identical
invocations produce byte-identical stdout.  Summary/progress lines go to
stderr.  Exit status: 0 success, 1 a counterexample was found, 2 usage
error, 3 I/O or input-parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import corpus as corpus_mod
from .errors import Graph6Error, PathlabError
from .families import alpha_family, hj_g1, hj_g2, sharpness_family
from .fan import cycle_components, extract_fan
from .graph6 import iter_graph6_lines, parse_graph6, serialize_graph6
from .kelmans import kelmans, lift_path
from .solver import Cycle, Path, circumference, longest_cycle, longest_path, longest_xy_path
from .verify import SweepOptions, run_single_check, sweep

DEFAULT_SEED = corpus_mod.DEFAULT_SEED

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _out_path(path: str) -> str:
    base = os.environ.get("PATHLAB_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _open_input(path: str):
    if path == "-" or path is None:
        return sys.stdin
    return open(path, "r", encoding="ascii")


def _read_lines(path: str) -> list[tuple[int, str]]:
    fh = _open_input(path)
    try:
        return list(iter_graph6_lines(fh))
    finally:
        if fh is not sys.stdin:
            fh.close()


def _vertex_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/3: {text!r}")


def _emit(stream, fmt: str, record: dict) -> None:
    if fmt == "jsonl":
        stream.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        stream.write("\t".join(_tsv_cell(v) for v in record.values()) + "\n")


def _tsv_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value) or "-"
    return str(value)


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_gen(args) -> int:
    out = sys.stdout
    if args.family == "sharpness":
        fam = sharpness_family(args.k, args.t)
    elif args.family == "hj1":
        fam = hj_g1(args.k, args.t)
    elif args.family == "hj2":
        fam = hj_g2(args.k, args.copies)
    elif args.family == "alpha":
        fam = alpha_family(args.alpha, args.k, args.t)
    elif args.family == "corpus":
        return _cmd_gen_corpus(args)
    elif args.family == "random":
        return _cmd_gen_random(args)
    else:
        raise AssertionError(args.family)
    params = " ".join(f"{k}={v}" for k, v in sorted(fam.params.items()))
    header = f"# {fam.name} {params} n={fam.graph.n}"
    if fam.x is not None:
        header += f" x={fam.x} y={fam.y}"
    out.write(header + "\n")
    out.write(serialize_graph6(fam.graph) + "\n")
    return EXIT_OK


def _cmd_gen_corpus(args) -> int:
    lo = max(args.min_n, 1)
    hi = args.max_n
    graphs = []
    for n in range(lo, hi + 1):
        if args.graph_class == "two-connected":
            graphs.extend(corpus_mod.two_connected_graphs(n))
        elif args.graph_class == "connected":
            graphs.extend(corpus_mod.connected_graphs(n))
        else:
            graphs.extend(corpus_mod.all_graphs(n))
    lines = corpus_mod.sorted_graph6(graphs)
    dest = sys.stdout
    close = False
    if args.out:
        dest = open(_out_path(args.out), "w", encoding="ascii")
        close = True
    try:
        dest.write(f"# corpus {args.graph_class} n={lo}..{hi} count={len(lines)}\n")
        for line in lines:
            dest.write(line + "\n")
    finally:
        if close:
            dest.close()
    return EXIT_OK


def _cmd_gen_random(args) -> int:
    ps = tuple(float(p) for p in args.p.split(","))
    sys.stdout.write(
        f"# random two-connected count={args.count} seed={args.seed}"
        f" n={args.n_min}..{args.n_max} p={args.p}\n"
    )
    for g in corpus_mod.random_two_connected_stream(
        args.count, seed=args.seed, n_min=args.n_min, n_max=args.n_max, ps=ps
    ):
        sys.stdout.write(serialize_graph6(g) + "\n")
    return EXIT_OK


def _cmd_solve(args) -> int:
    lines = _read_lines(args.input)
    for lineno, text in lines:
        g = parse_graph6(text)
        if args.problem == "circumference":
            cyc = longest_cycle(g)
            record = {
                "op": "circumference",
                "graph6": text,
                "length": circumference(g) if cyc is None else cyc.length,
                "witness": list(cyc.vertices) if cyc else None,
            }
        elif args.problem == "longest-path":
            p = longest_path(g)
            record = {
                "op": "longest_path",
                "graph6": text,
                "length": p.length,
                "witness": list(p.vertices),
            }
        else:
            p = longest_xy_path(g, args.x, args.y)
            record = {
                "op": "longest_xy_path",
                "graph6": text,
                "length": p.length,
                "witness": list(p.vertices),
            }
        _emit(sys.stdout, args.format, record)
    return EXIT_OK


def _cmd_lift(args) -> int:
    lines = _read_lines(args.input)
    for lineno, text in lines:
        g = parse_graph6(text)
        rec = kelmans(g, args.u, args.v)
        lifted = lift_path(rec, Path(args.path))
        record = {
            "op": "lift",
            "graph6": text,
            "switched_graph6": serialize_graph6(rec.result),
            "input_path": list(args.path),
            "lifted_path": list(lifted.vertices),
            "length": lifted.length,
        }
        _emit(sys.stdout, args.format, record)
    return EXIT_OK


def _cmd_fan(args) -> int:
    lines = _read_lines(args.input)
    for lineno, text in lines:
        g = parse_graph6(text)
        if args.cycle:
            cyc = Cycle(args.cycle)
            cyc.validate(g)
        else:
            cyc = longest_cycle(g)
            if cyc is None:
                raise PathlabError("graph is acyclic; no fan exists")
        comps = cycle_components(g, cyc)
        if not comps:
            raise PathlabError("cycle is spanning; no component to fan from")
        for h in comps:
            fan = extract_fan(g, cyc, h, args.k, require_hypothesis=not args.force)
            record = {
                "op": "fan",
                "graph6": text,
                "component": min(h),
                "k": args.k,
                "edges": fan.edge_count,
                "origin": fan.origin,
                "paths": ";".join(
                    ",".join(str(v) for v in p.vertices) for p in fan.paths
                ),
            }
            _emit(sys.stdout, args.format, record)
    return EXIT_OK


def _cmd_verify(args) -> int:
    lines = _read_lines(args.input)
    params = {}
    for key in ("x", "y", "k", "s", "m", "c"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.alpha is not None:
        params["alpha"] = args.alpha
    worst = EXIT_OK
    for lineno, text in lines:
        g = parse_graph6(text)
        report = run_single_check(g, args.claim, params, witness=True)
        sys.stdout.write(
            (report.to_json() if args.format == "jsonl" else report.to_tsv()) + "\n"
        )
        if report.verdict == "COUNTEREXAMPLE":
            worst = EXIT_COUNTEREXAMPLE
    return worst


def _cmd_sweep(args) -> int:
    lines = [text for _, text in _read_lines(args.corpus)]
    opts = SweepOptions(
        k_min=args.k_min,
        k_max=args.k_max,
        alphas=(args.alpha,) if args.alpha is not None else SweepOptions().alphas,
        binding_only=args.binding_only,
    )
    on_report = None
    if not args.counterexamples_only:
        fmt = args.format

        def on_report(rep):
            sys.stdout.write((rep.to_json() if fmt == "jsonl" else rep.to_tsv()) + "\n")

    result = sweep(lines, args.claim, opts=opts, workers=args.workers, on_report=on_report)
    if args.counterexamples_only:
        for rep in result.counterexamples:
            sys.stdout.write(
                (rep.to_json() if args.format == "jsonl" else rep.to_tsv()) + "\n"
            )
    sys.stderr.write(result.summary() + "\n")
    return EXIT_COUNTEREXAMPLE if result.counterexamples else EXIT_OK


def _cmd_bench(args) -> int:
    lines = _read_lines(args.corpus)
    t0 = time.perf_counter()
    total_c = 0
    count = 0
    for lineno, text in lines:
        g = parse_graph6(text)
        total_c += circumference(g)
        count += 1
    dt = time.perf_counter() - t0
    _emit(
        sys.stdout,
        args.format,
        {"op": "bench", "graphs": count, "circumference_sum": total_c},
    )
    rate = count / dt if dt > 0 else float("inf")
    sys.stderr.write(f"bench: {count} graphs in {dt:.3f}s ({rate:.0f}/s)\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathlab",
        description="Exact long-path/long-cycle toolkit and claim sweeps.",
    )
    parser.add_argument(
        "--format", choices=("tsv", "jsonl"), default="tsv",
        help="output record format (default tsv)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit extremal families or corpora as graph6")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    for fam in ("sharpness", "hj1", "hj2", "alpha"):
        p = gen_sub.add_parser(fam)
        p.add_argument("--k", type=int, required=True)
        if fam == "hj2":
            p.add_argument("--copies", type=int, default=1)
        else:
            p.add_argument("--t", type=int, default=1)
        if fam == "alpha":
            p.add_argument("--alpha", type=_fraction, required=True)
    p = gen_sub.add_parser("corpus")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--class", dest="graph_class", default="two-connected",
        choices=("two-connected", "connected", "all"),
    )
    p.add_argument("--out", help="write to a file (PATHLAB_OUTPUT_DIR honored)")
    p = gen_sub.add_parser("random")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--p", default="0.2,0.35,0.5")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    solve = sub.add_parser("solve", help="exact path/cycle optimization")
    solve.add_argument("problem", choices=("circumference", "longest-path", "xy"))
    solve.add_argument("--x", type=int)
    solve.add_argument("--y", type=int)
    solve.add_argument("input", nargs="?", default="-")

    lift = sub.add_parser("lift", help="switch u->v and lift a path back")
    lift.add_argument("--u", type=int, required=True)
    lift.add_argument("--v", type=int, required=True)
    lift.add_argument("--path", type=_vertex_list, required=True)
    lift.add_argument("input", nargs="?", default="-")

    fan = sub.add_parser("fan", help="extract a fan from each cycle component")
    fan.add_argument("--k", type=int, required=True)
    fan.add_argument("--cycle", type=_vertex_list)
    fan.add_argument("--force", action="store_true",
                     help="attempt extraction even when the hypothesis fails")
    fan.add_argument("input", nargs="?", default="-")

    verify = sub.add_parser("verify", help="run one claim checker per input graph")
    verify.add_argument("--claim", required=True)
    verify.add_argument("--x", type=int)
    verify.add_argument("--y", type=int)
    verify.add_argument("--k", type=int)
    verify.add_argument("--s", type=int)
    verify.add_argument("--m", type=int)
    verify.add_argument("--c", type=int)
    verify.add_argument("--alpha", type=_fraction)
    verify.add_argument("input", nargs="?", default="-")

    sweep_p = sub.add_parser("sweep", help="run a claim across a corpus and grid")
    sweep_p.add_argument("--claim", required=True)
    sweep_p.add_argument("--corpus", default="-")
    sweep_p.add_argument("--k-min", type=int)
    sweep_p.add_argument("--k-max", type=int)
    sweep_p.add_argument("--alpha", type=_fraction)
    sweep_p.add_argument("--binding-only", action="store_true")
    sweep_p.add_argument("--workers", type=int, default=1)
    sweep_p.add_argument("--counterexamples-only", action="store_true")

    bench = sub.add_parser("bench", help="time the exact solver over a corpus")
    bench.add_argument("--corpus", default="-")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "gen": _cmd_gen,
        "solve": _cmd_solve,
        "lift": _cmd_lift,
        "fan": _cmd_fan,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
        "bench": _cmd_bench,
    }[args.command]
    try:
        return handler(args)
    except Graph6Error as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except (PathlabError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
