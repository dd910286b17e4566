"""Command-line surface: color, partition, generate, verify, audit.

Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 the engine reported a potential counterexample (state dump written).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import coloring as avd
from . import generators, verify
from .errors import (CapExceededError, CounterexampleFound, GraphFormatError,
                     InternalBoundViolationError, InvalidGroupingError,
                     NotNormalError)
from .graph_io import FORMATS, emit_graph, parse_graph, sniff_format
from .graphs import Graph, is_normal
from .partition import partition_p2, partition_regular

USAGE_EXIT = 2
CHECK_EXIT = 1
COUNTEREXAMPLE_EXIT = 3


def _json_bytes(payload) -> bytes:
    return (json.dumps(payload, sort_keys=True, separators=(",", ":"))
            + "\n").encode("ascii")


def _read_input(args) -> Graph:
    if args.input is None or args.input == "-":
        raw = sys.stdin.buffer.read()
    else:
        raw = Path(args.input).read_bytes()
    fmt = args.format or sniff_format(raw)
    return parse_graph(raw, fmt)


def _write_out(args, data: bytes) -> None:
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _open_trace(args):
    if getattr(args, "trace", None):
        handle = open(args.trace, "w", encoding="ascii")

        def sink(entry: dict) -> None:
            handle.write(json.dumps(entry, sort_keys=True,
                                    separators=(",", ":")) + "\n")

        return handle, sink
    return None, None


def _dump_counterexample(args, exc: CounterexampleFound) -> int:
    stem = Path(args.out).with_suffix("") if getattr(args, "out", None) \
        else Path("avdcolor")
    path = Path(f"{stem}.counterexample.json")
    path.write_bytes(_json_bytes({"message": str(exc), "state": exc.payload}))
    print(f"counterexample report written to {path}", file=sys.stderr)
    return COUNTEREXAMPLE_EXIT


# -- subcommands ----------------------------------------------------------------


def _cmd_color(args) -> int:
    g = _read_input(args)
    handle, sink = _open_trace(args)
    try:
        cert = avd.avd_color(g, trace=sink)
    except CounterexampleFound as exc:
        return _dump_counterexample(args, exc)
    finally:
        if handle:
            handle.close()
    if args.out:
        _write_out(args, _json_bytes(avd.certificate_to_dict(cert)))
    print(f"colors={cert.colors_used} bound={cert.bound_claimed}")
    return 0


def _cmd_color_regular(args) -> int:
    g = _read_input(args)
    try:
        cert = avd.avd_color_regular(g)
    except CounterexampleFound as exc:
        return _dump_counterexample(args, exc)
    if args.out:
        _write_out(args, _json_bytes(avd.certificate_to_dict(cert)))
    print(f"colors={cert.colors_used} bound={cert.bound_claimed}")
    return 0


def _partition_checklist(g: Graph, parts) -> dict:
    graphs = parts.part_graphs()
    delta = g.max_degree
    k_bound = max(delta // 2 - 2, 0) if delta >= 6 else 0
    return {
        "parts": len(parts),
        "k": parts.k,
        "k_within_bound": parts.k <= k_bound,
        "g0_max_degree": graphs[0].max_degree,
        "g0_bounded": graphs[0].max_degree <= 5,
        "later_parts_subcubic": all(p.max_degree <= 3 for p in graphs[1:]),
        "all_parts_normal": all(is_normal(p) for p in graphs),
    }


def _cmd_partition(args) -> int:
    g = _read_input(args)
    handle, sink = _open_trace(args)
    try:
        parts = partition_p2(g, trace=sink)
    except CounterexampleFound as exc:
        return _dump_counterexample(args, exc)
    finally:
        if handle:
            handle.close()
    checklist = _partition_checklist(g, parts)
    payload = {
        "type": "edge-partition",
        "vertex_count": g.n,
        "parts": [[list(e) for e in sorted(p)] for p in parts],
        "checklist": checklist,
    }
    _write_out(args, _json_bytes(payload))
    ok = (checklist["k_within_bound"] and checklist["g0_bounded"]
          and checklist["later_parts_subcubic"]
          and checklist["all_parts_normal"])
    print(f"parts={len(parts)} k={parts.k} checks="
          + ("pass" if ok else "fail"))
    return 0 if ok else CHECK_EXIT


def _cmd_partition_regular(args) -> int:
    g = _read_input(args)
    parts = partition_regular(g)
    graphs = parts.part_graphs()
    checklist = {
        "parts": len(parts),
        "max_degrees": [p.max_degree for p in graphs],
        "all_parts_normal": all(is_normal(p) for p in graphs),
    }
    payload = {
        "type": "edge-partition",
        "vertex_count": g.n,
        "parts": [[list(e) for e in sorted(p)] for p in parts],
        "checklist": checklist,
    }
    _write_out(args, _json_bytes(payload))
    ok = checklist["all_parts_normal"]
    print(f"parts={len(parts)} checks=" + ("pass" if ok else "fail"))
    return 0 if ok else CHECK_EXIT


def _cmd_oracle(args) -> int:
    g = _read_input(args)
    value = verify.exact_chi_a(g, cap=args.budget_cap,
                               edge_cap=args.oracle_edge_cap)
    print(value)
    return 0


def _cmd_gen(args) -> int:
    g = generators.generate(args.kind, seed=args.seed)
    _write_out(args, emit_graph(g, args.format or "graph6"))
    if args.out:
        print(f"wrote {args.kind}: n={g.n} m={g.edge_count}")
    return 0


def _cmd_verify(args) -> int:
    g = parse_graph(Path(args.graph).read_bytes(),
                    args.format or sniff_format(Path(args.graph).read_bytes()))
    data = json.loads(Path(args.certificate).read_text(encoding="ascii"))
    try:
        cert = avd.certificate_from_dict(data, host=g)
    except ValueError as exc:
        print(f"FAIL certificate shape: {exc}")
        return CHECK_EXIT
    rows = []
    ok, detail = verify.check_proper(g, cert.coloring)
    rows.append(("proper", ok, detail))
    if ok:
        avd_ok, avd_detail = verify.check_avd(g, cert.coloring)
    else:
        avd_ok, avd_detail = False, "skipped (not proper)"
    rows.append(("adjacent-vertex-distinguishing", avd_ok, avd_detail))
    rows.append(("colors_used matches palette",
                 cert.colors_used == cert.coloring.colors_used, ""))
    rows.append(("colors_used within bound",
                 cert.colors_used <= cert.bound_claimed, ""))
    wit_ok = True
    for (u, v), c in cert.per_edge_witness.items():
        in_u = c in cert.coloring.colors_at(u)
        in_v = c in cert.coloring.colors_at(v)
        if in_u == in_v:
            wit_ok = False
            break
    expected = {(u, v) for u, v in g.edges if g.degree(u) == g.degree(v)}
    rows.append(("witnesses cover equal-degree pairs",
                 wit_ok and set(cert.per_edge_witness) == expected, ""))
    failed = False
    for name, ok, detail in rows:
        print(("PASS " if ok else "FAIL ") + name
              + (f" ({detail})" if detail and not ok else ""))
        failed = failed or not ok
    return CHECK_EXIT if failed else 0


def _audit_one(path: str | None, args) -> verify.AuditReport:
    if path is None:
        raw = sys.stdin.buffer.read()
    else:
        raw = Path(path).read_bytes()
    g = parse_graph(raw, args.format or sniff_format(raw))
    return verify.audit(g, oracle_edge_cap=args.oracle_edge_cap)


def _cmd_audit(args) -> int:
    paths: list[str | None]
    if args.dir:
        paths = [str(p) for p in sorted(Path(args.dir).iterdir())
                 if p.is_file()]
    elif args.inputs:
        paths = list(args.inputs)
    else:
        paths = [None]
    if args.jobs > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(lambda p: _audit_one(p, args), paths))
    else:
        reports = [_audit_one(p, args) for p in paths]
    all_pass = True
    for path, report in zip(paths, reports):
        if len(paths) > 1:
            print(f"== {path}")
        if args.json:
            sys.stdout.write(_json_bytes(report.to_dict()).decode("ascii"))
        else:
            print(report.to_text())
        all_pass = all_pass and report.overall_pass
    return 0 if all_pass else CHECK_EXIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avdcolor",
        description="Adjacent-vertex-distinguishing edge colorings with "
                    "certificates, edge partitions, and exact oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?",
                           help="graph file (stdin when omitted)")
        p.add_argument("--format", choices=FORMATS,
                       help="input format (sniffed when omitted)")
        p.add_argument("--out", help="output path (stdout when omitted)")

    p = sub.add_parser("color", help="AVD-color a normal graph")
    add_common(p)
    p.add_argument("--trace", help="stream partition move log to this path")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("color-regular", help="AVD-color a regular graph")
    add_common(p)
    p.set_defaults(func=_cmd_color_regular)

    p = sub.add_parser("partition", help="recursive bounded-degree partition")
    add_common(p)
    p.add_argument("--trace", help="stream move log to this path")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("partition-regular",
                       help="color-class grouping for a regular graph")
    add_common(p)
    p.set_defaults(func=_cmd_partition_regular)

    p = sub.add_parser("oracle", help="exact minimum AVD palette size")
    add_common(p)
    p.add_argument("--budget-cap", type=int, default=None,
                   help="largest palette to try")
    p.add_argument("--oracle-edge-cap", type=int,
                   default=verify.ORACLE_EDGE_CAP)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("kind",
                   help="cycle:n | complete:n | petersen | "
                        "random-regular:n,r | gnp:n,p")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="re-validate a certificate file")
    p.add_argument("graph", help="graph file")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="full pipeline with all checkers")
    p.add_argument("inputs", nargs="*", help="graph files (stdin when empty)")
    p.add_argument("--dir", help="audit every file in a directory")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true",
                   help="machine-readable reports")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--oracle-edge-cap", type=int,
                   default=verify.ORACLE_EDGE_CAP)
    p.set_defaults(func=_cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CounterexampleFound as exc:
        return _dump_counterexample(args, exc)
    except InternalBoundViolationError as exc:
        stub = CounterexampleFound(str(exc), exc.payload)
        return _dump_counterexample(args, stub)
    except InvalidGroupingError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_EXIT
    except (GraphFormatError, NotNormalError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
