"""Command-line front end.

Exit status: 0 success, 1 verification failed, 2 U-cycle proved not to
exist, 64 bad arguments, 70 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import census_table, format_table
from .classes import TARGET_CLASSES, ClassSpec
from .connect import connect, format_trace, trace_records
from .errors import ConsistencyError, EmptyClass, InvalidArgument, PreconditionViolation
from .graph import build, decompose_cycles, existence, generate, to_dot, verify_ucycle

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_NONEXISTENT, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 64, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _spec_args(p, classes=TARGET_CLASSES):
    p.add_argument("--class", dest="class_name", required=True, choices=classes)
    p.add_argument("--k", type=int, required=True, help="word length")
    p.add_argument("--n", type=int, help="alphabet size (defaults to 2 for binary classes)")


def _common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ucycles", description="Universal cycles of function classes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="construct a U-cycle or report why none exists")
    _spec_args(p)
    _common(p)

    p = sub.add_parser("verify", help="check a candidate cyclic word")
    _spec_args(p)
    p.add_argument("--input", required=True, metavar="WORD", help="candidate cycle, or - for stdin")
    _common(p)

    p = sub.add_parser("exists", help="decide existence from the transition graph")
    _spec_args(p)
    _common(p)

    p = sub.add_parser("decompose", help="split a 1-regular transition graph into cycles")
    _spec_args(p)
    p.add_argument("--list-cycles", action="store_true", help="also print every cycle")
    p.add_argument("--figure", metavar="PNG", help="write a cycle-length histogram")
    _common(p)

    p = sub.add_parser("census", help="cycle counts of the equitable graphs")
    p.add_argument("--max-k", type=int, default=24)
    p.add_argument("--figure", metavar="PNG", help="write a plot of the table")
    _common(p)

    p = sub.add_parser("path", help="constructive path between two vertices")
    _spec_args(p, ("onto", "one-inequitable"))
    p.add_argument("--source", required=True, metavar="WORD")
    p.add_argument("--target", required=True, metavar="WORD")
    _common(p)

    p = sub.add_parser("export-dot", help="write the transition graph in DOT")
    _spec_args(p)
    p.add_argument("--out", metavar="FILE")
    return parser


def _spec(args) -> ClassSpec:
    n = args.n
    if n is None:
        if args.class_name in ("equitable", "one-inequitable"):
            n = 2
        else:
            raise UsageError(f"--n is required for class {args.class_name}")
    return ClassSpec(args.class_name, args.k, n)


def _verdict(spec, verdict) -> dict:
    return {
        "class": spec.class_name,
        "k": spec.k,
        "n": spec.n,
        "exists": verdict.exists,
        "reason": verdict.reason,
        "witness": [spec.format(w) for w in verdict.witness],
    }


def _render_verdict(d: dict) -> str:
    lines = [f"exists: {str(d['exists']).lower()}", f"reason: {d['reason']}"]
    if d["witness"]:
        lines.append("witness: " + " ".join(d["witness"]))
    return "\n".join(lines)


def _dump(payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2)


def cmd_generate(args):
    spec = _spec(args)
    try:
        cycle = generate(spec)
    except (PreconditionViolation, EmptyClass):
        verdict = _verdict(spec, existence(spec))
        if args.format == "json":
            return EXIT_NONEXISTENT, _dump({"command": "generate", "ucycle": None, **verdict})
        return EXIT_NONEXISTENT, "no U-cycle\n" + _render_verdict(verdict)
    text = spec.format(cycle.symbols)
    if args.format == "json":
        return EXIT_OK, _dump({
            "command": "generate", "class": spec.class_name, "k": spec.k, "n": spec.n,
            "length": cycle.length, "ucycle": text,
        })
    return EXIT_OK, text


def cmd_verify(args):
    spec = _spec(args)
    raw = sys.stdin.read() if args.input == "-" else args.input
    report = verify_ucycle(spec, spec.parse(raw))
    fmt = spec.format
    payload = {
        "command": "verify", "class": spec.class_name, "k": spec.k, "n": spec.n,
        "ok": report.ok, "expected_length": report.expected_length, "actual_length": report.actual_length,
        "duplicated": [fmt(w) for w in report.duplicated],
        "foreign": [fmt(w) for w in report.foreign],
        "missing": [fmt(w) for w in report.missing],
    }
    status = EXIT_OK if report.ok else EXIT_FAIL
    if args.format == "json":
        return status, _dump(payload)
    lines = [f"verified: {str(report.ok).lower()}",
             f"length: {report.actual_length} (expected {report.expected_length})"]
    for key in ("duplicated", "foreign", "missing"):
        if payload[key]:
            lines.append(f"{key}: " + " ".join(payload[key]))
    return status, "\n".join(lines)


def cmd_exists(args):
    spec = _spec(args)
    verdict = _verdict(spec, existence(spec))
    status = EXIT_OK if verdict["exists"] else EXIT_NONEXISTENT
    if args.format == "json":
        return status, _dump({"command": "exists", **verdict})
    return status, _render_verdict(verdict)


def cmd_decompose(args):
    spec = _spec(args)
    try:
        dec = decompose_cycles(build(spec))
    except PreconditionViolation as exc:
        raise UsageError(f"{exc}; decompose needs every vertex to have in = out = 1") from None
    if args.figure:
        from .plotting import plot_cycle_histogram

        plot_cycle_histogram(dec, args.figure)
    hist = dec.length_histogram
    cycles = None
    if args.list_cycles:
        cycles = [[spec.format(v) for v in c] for c in dec.vertex_cycles]
    if args.format == "json":
        payload = {
            "command": "decompose", "class": spec.class_name, "k": spec.k, "n": spec.n,
            "total_cycles": dec.total_cycles, "edge_count": dec.graph.edge_count,
            "length_histogram": {str(x): c for x, c in hist.items()},
        }
        if cycles is not None:
            payload["cycles"] = cycles
        return EXIT_OK, _dump(payload)
    lines = [f"cycles: {dec.total_cycles}", "length  count"]
    lines += [f"{x:>6}  {c:>5}" for x, c in hist.items()]
    if cycles is not None:
        lines += [" -> ".join(c + c[:1]) for c in cycles]
    return EXIT_OK, "\n".join(lines)


def cmd_census(args):
    reports = census_table(args.max_k)
    if args.figure:
        from .plotting import plot_census

        plot_census(reports, args.figure)
    if args.format == "json":
        return EXIT_OK, _dump({"command": "census", "reports": [r.as_dict() for r in reports]})
    return EXIT_OK, format_table(reports)


def cmd_path(args):
    spec = _spec(args)
    trace = connect(spec.parse(args.source), spec.parse(args.target), spec)
    if args.format == "json":
        return EXIT_OK, _dump({
            "command": "path", "class": spec.class_name, "k": spec.k, "n": spec.n,
            "steps": trace_records(trace),
        })
    return EXIT_OK, format_trace(trace)


def cmd_export_dot(args):
    return EXIT_OK, to_dot(build(_spec(args))).rstrip("\n")


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "exists": cmd_exists,
    "decompose": cmd_decompose,
    "census": cmd_census,
    "path": cmd_path,
    "export-dot": cmd_export_dot,
}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        status, text = COMMANDS[args.command](args)
    except (UsageError, InvalidArgument) as exc:
        parser.print_usage(sys.stderr)
        print(f"ucycles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"ucycles: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
