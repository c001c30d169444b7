"""Command-line front end.

Subcommands: compute, rdegrees, generate, verify, batch. Parse failures
exit with code 2 and disconnected inputs with code 3; diagnostics go to
stderr. Batch mode isolates per-line failures and produces byte-identical
CSV regardless of the parallelism level.
"""

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor

from . import families as fam
from .degrees import r_degree_table
from .errors import DisconnectedGraphError, GraphError
from .graph import (
    Family,
    first_unreachable_vertex,
    generate_family,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .indices import full_report

EXIT_USAGE = 2
EXIT_DISCONNECTED = 3

INDEX_NAMES = ["r1", "r2", "r3", "abc", "ga", "h", "chi",
               "zagreb1", "zagreb2", "randic"]

BATCH_CSV_HEADER = ["name", "n", "m"] + INDEX_NAMES + ["status"]


def _fmt_real(x):
    return f"{x:.9g}"


def _fmt_value(name, value):
    return str(value) if name in ("r1", "r2", "r3") else _fmt_real(value)


def _infer_format(path, flag):
    if flag:
        return flag
    return "graph6" if path.endswith(".g6") else "edgelist"


def _load_graph(path, format_flag):
    fmt = _infer_format(path, format_flag)
    with open(path, encoding="utf-8") as f:
        text = f.read()
    if fmt == "graph6":
        for line in text.splitlines():
            line = line.strip()
            if line and line != ">>graph6<<":
                return parse_graph6(line)
        raise GraphError(f"no graph6 line found in {path}")
    return parse_edge_list(text)


def _parse_n_range(text):
    try:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ValueError(f"range must be 'a..b', got {text!r}") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def cmd_compute(args):
    try:
        g = _load_graph(args.path, args.format)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = full_report(g)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    selected = args.indices.split(",") if args.indices else INDEX_NAMES
    for name in selected:
        if name not in INDEX_NAMES:
            print(f"error: unknown index {name!r}", file=sys.stderr)
            return EXIT_USAGE
    print(f"n={report.n} m={report.m}")
    for name in selected:
        print(f"{name}={_fmt_value(name, getattr(report, name))}")
    return 0


def cmd_rdegrees(args):
    try:
        g = _load_graph(args.path, args.format)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bad = first_unreachable_vertex(g)
    if bad is not None:
        print(f"error: {DisconnectedGraphError(bad)}", file=sys.stderr)
        return EXIT_DISCONNECTED
    table = r_degree_table(g)
    print("vertex deg sum_deg mult_deg r")
    for v in range(g.n):
        print(f"{v} {g.degree(v)} {table.sum_degrees[v]} "
              f"{table.mult_degrees[v]} {table.r_degrees[v]}")
    return 0


def cmd_generate(args):
    try:
        family = Family(args.family)
        g = generate_family(family, args.n)
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fmt = args.format or "edgelist"
    try:
        text = write_graph6(g) + "\n" if fmt == "graph6" else write_edge_list(g)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    try:
        n_range = _parse_n_range(args.n_range)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.family == "all":
        selected = list(Family)
    else:
        try:
            selected = [Family(args.family)]
        except ValueError:
            print(f"error: unknown family {args.family!r}", file=sys.stderr)
            return EXIT_USAGE
    all_rows = []
    for family in selected:
        report = fam.verify_family(family, n_range)
        all_rows.extend(report.rows)
    combined = fam.DiscrepancyReport(rows=tuple(all_rows))
    csv_text = fam.report_to_csv(combined)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    print(fam.report_summary(combined), file=sys.stderr)
    return 0 if combined.corrected_all_match() else 1


def _batch_row(item):
    name, line = item
    try:
        g = parse_graph6(line)
    except GraphError as exc:
        return [name, "", ""] + [""] * len(INDEX_NAMES) + [
            f"ParseError({exc})"]
    try:
        report = full_report(g)
    except DisconnectedGraphError:
        return [name, str(g.n), str(g.m)] + [""] * len(INDEX_NAMES) + [
            "Disconnected"]
    except GraphError as exc:
        return [name, str(g.n), str(g.m)] + [""] * len(INDEX_NAMES) + [
            f"ParseError({exc})"]
    values = [_fmt_value(n, getattr(report, n)) for n in INDEX_NAMES]
    return [name, str(report.n), str(report.m)] + values + ["Ok"]


def cmd_batch(args):
    try:
        with open(args.path, encoding="utf-8") as f:
            raw = f.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    items = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if not line or line == ">>graph6<<":
            continue
        items.append((f"line{lineno}", line))
    jobs = max(1, args.jobs)
    if jobs == 1:
        rows = [_batch_row(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_batch_row, items))
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out \
        else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(BATCH_CSV_HEADER)
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rindices",
        description="R degrees, R indices and classical degree-based "
                    "topological indices of simple connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute indices of one graph")
    p.add_argument("path")
    p.add_argument("--format", choices=["edgelist", "graph6"])
    p.add_argument("--indices", help="comma-separated subset of "
                                     + ",".join(INDEX_NAMES))
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("rdegrees", help="dump per-vertex R degree table")
    p.add_argument("path")
    p.add_argument("--format", choices=["edgelist", "graph6"])
    p.set_defaults(func=cmd_rdegrees)

    p = sub.add_parser("generate", help="write a named family graph")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["edgelist", "graph6"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check closed forms against "
                                      "direct computation")
    p.add_argument("family", choices=[f.value for f in Family] + ["all"])
    p.add_argument("--n-range", default="3..30")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="index a graph6 corpus to CSV")
    p.add_argument("path")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
