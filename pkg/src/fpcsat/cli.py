"""Command-line interface.

Exit codes follow the SAT-competition convention: 10 satisfiable, 20
unsatisfiable, 30 resource budget exceeded, 1 usage or input errors.
``verify`` exits 0 when solver and oracle agree, 2 otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time
from types import SimpleNamespace

from . import bench as bench_mod
from . import cardinality
from .core import Formula, canonical_literals, normalize, variables_of
from .dimacs import DimacsError, parse_dimacs, write_result
from .oracle import VariableLimitError, brute_force_sat
from .solver import SolveConfig, check_sat

EXIT_CODES = {"SAT": 10, "UNSAT": 20, "RESOURCE_EXCEEDED": 30}


def _read_formula(path: str) -> Formula:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    doc = parse_dimacs(text)
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return doc.to_formula()


def _cmd_solve(args) -> int:
    f = _read_formula(args.file)
    trace = None
    if args.dump_tree:
        def trace(c, tree):
            lits = " ".join(str(x) for x in canonical_literals(c))
            sys.stdout.write(f"c after clause [{lits}]\n")
            for line in tree.dump().splitlines():
                sys.stdout.write(f"c {line}\n")

    cfg = SolveConfig(
        node_budget=args.max_nodes,
        report_all_models=args.all_models,
        enable_cardinality_preprocessing=args.preprocess,
        sort_clauses=not args.no_sort,
        trace=trace,
    )
    result = check_sat(f, cfg)
    sys.stdout.write(write_result(result))
    s = result.stats
    print(
        f"stats: clauses_processed={s.clauses_processed}"
        f" tautologies_skipped={s.tautologies_skipped}"
        f" duplicates_removed={s.duplicates_removed}"
        f" peak_nodes={s.peak_nodes} eliminations={s.eliminations}"
        f" work={s.work} elapsed_s={s.elapsed_time:.6f}",
        file=sys.stderr,
    )
    return EXIT_CODES[result.verdict]


def _cmd_oracle(args) -> int:
    f = _read_formula(args.file)
    result = brute_force_sat(f, limit_vars=args.limit_vars)
    models = list(result.models) if args.all_models else list(result.models[:1])
    verdict = "SAT" if result.satisfiable else "UNSAT"
    sys.stdout.write(write_result(SimpleNamespace(verdict=verdict, models=models)))
    return EXIT_CODES[verdict]


def _cmd_verify(args) -> int:
    f = _read_formula(args.file)
    solver_result = check_sat(f, SolveConfig(node_budget=args.max_nodes))
    oracle_result = brute_force_sat(f, limit_vars=args.limit_vars, collect_models=False)
    oracle_verdict = "SAT" if oracle_result.satisfiable else "UNSAT"
    print(f"solver={solver_result.verdict} oracle={oracle_verdict}")
    if solver_result.verdict != oracle_verdict:
        print("MISMATCH between solver and oracle verdicts", file=sys.stderr)
        return 2
    return 0


def _cmd_stats(args) -> int:
    f = _read_formula(args.file)
    _, report = normalize(f)
    prof = cardinality.profile(f)
    rows = [
        ("formula", "clauses", prof.total),
        ("formula", "effective_clauses", prof.n_effective),
        ("formula", "variables", prof.n),
        ("formula", "duplicates_removed", report.duplicates_removed),
        ("formula", "tautology_clauses", len(report.tautologies)),
        ("formula", "has_empty_clause", str(report.has_empty_clause).lower()),
    ]
    for var in sorted(prof.per_variable):
        counts = prof.per_variable[var]
        rows.append((f"var:{var}", "n_pos", counts.n_pos))
        rows.append((f"var:{var}", "n_neg", counts.n_neg))
        rows.append((f"var:{var}", "n_either", counts.n_either))
    _emit_rows(rows, args.csv)
    return 0


def _cmd_preprocess(args) -> int:
    f = _read_formula(args.file)
    report = cardinality.preprocess(f)
    rows = [
        ("formula", "variables", report.n),
        ("formula", "effective_clauses", report.effective_count),
        ("formula", "has_tautology", str(report.has_tautology).lower()),
        ("formula", "general_bound", report.general_bound),
        ("formula", "unsat_by_general_bound", str(report.unsat_by_general_bound).lower()),
    ]
    if report.effective_bound is not None:
        rows.append(("formula", "effective_bound", report.effective_bound))
        rows.append(
            ("formula", "unsat_by_total_bound", str(report.unsat_by_total_bound).lower())
        )
    for var in report.unsat_by_variable_bound:
        rows.append((f"var:{var}", "unsat_by_variable_bound", "true"))
    for var, value in report.forced_literals:
        rows.append((f"var:{var}", "forced_value", int(value)))
    rows.append(("formula", "proves_unsat", str(report.proves_unsat).lower()))
    _emit_rows(rows, args.csv)
    return 0


def _emit_rows(rows, as_csv: bool) -> None:
    if as_csv:
        print("scope,key,value")
        for scope, key, value in rows:
            print(f"{scope},{key},{value}")
    else:
        for scope, key, value in rows:
            prefix = "" if scope == "formula" else scope + " "
            print(f"{prefix}{key}={value}")


def _parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        return [int(text)]
    return list(range(int(lo), int(hi) + 1))


def _cmd_bench(args) -> int:
    n_values = _parse_range(args.n_range)
    started = time.perf_counter()
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        bench_mod.write_csv_header(fh)
        records = bench_mod.run_family(
            args.family,
            n_values,
            seed=args.seed,
            seeds_per_n=args.seeds_per_n,
            ratio=args.ratio,
            timeout_ms=args.timeout_ms,
            node_budget=args.max_nodes,
            workers=args.workers,
            on_record=lambda r: bench_mod.append_csv_record(fh, r),
        )
    print(f"family={args.family}")
    print(f"records={len(records)}")
    try:
        report = bench_mod.fit_growth(records)
        for line in report.lines():
            print(line)
    except bench_mod.InsufficientDataError as exc:
        print(f"growth_label=insufficient-data ({exc})")
    wall = time.perf_counter() - started
    print(f"bench wall time: {wall:.2f}s (CSV times are deterministic effort"
          f" at {bench_mod.WORK_PER_MS} visits/ms)", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpcsat",
        description="SAT solving by fully-populated-clause elimination",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", help="DIMACS CNF file, or - for stdin")

    p = sub.add_parser("solve", help="decide satisfiability")
    add_input(p)
    p.add_argument("--max-nodes", type=int, default=1 << 24,
                   help="live tree node budget (default 2^24)")
    p.add_argument("--all-models", action="store_true",
                   help="report every surviving fully populated clause")
    p.add_argument("--no-sort", action="store_true",
                   help="disable ascending-cardinality clause ordering")
    p.add_argument("--preprocess", action="store_true",
                   help="apply cardinality bounds before solving")
    p.add_argument("--dump-tree", action="store_true",
                   help="print the clause tree after each processed clause")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="brute-force truth-table verdict")
    add_input(p)
    p.add_argument("--limit-vars", type=int, default=20)
    p.add_argument("--all-models", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="cross-check solver against the oracle")
    add_input(p)
    p.add_argument("--max-nodes", type=int, default=1 << 24)
    p.add_argument("--limit-vars", type=int, default=20)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("stats", help="cardinality profile of a formula")
    add_input(p)
    p.add_argument("--csv", action="store_true", help="machine-readable CSV output")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("preprocess", help="cardinality bounds and forced literals")
    add_input(p)
    p.add_argument("--csv", action="store_true", help="machine-readable CSV output")
    p.set_defaults(func=_cmd_preprocess)

    p = sub.add_parser("bench", help="scaling study over an instance family")
    p.add_argument("--family", choices=bench_mod.FAMILIES, default="random3sat")
    p.add_argument("--n-range", default="8..14", help="A..B inclusive (family parameter)")
    p.add_argument("--ratio", type=float, default=4.3,
                   help="clause/variable ratio for random3sat")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seeds-per-n", type=int, default=3)
    p.add_argument("--timeout-ms", type=float, default=10_000.0,
                   help="per-instance budget in deterministic effort milliseconds")
    p.add_argument("--max-nodes", type=int, default=1 << 24)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract here is 1
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (DimacsError, VariableLimitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
