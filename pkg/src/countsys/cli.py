"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
3 precondition violation (e.g. a table requested for a non-minimal system).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from . import arith, counting, minimal, verify
from .counting import CountingSystem
from .errors import CannotRestrictError, RequiresMinimalError, ValidationError
from .natmodel import DEFAULT_CAP

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class AnalysisReport:
    n: int
    x0: int
    tail: int
    cycle: int
    minimal: bool
    standard: bool
    end_point: Optional[int]
    segment: bool
    group: bool
    cancellation: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["end_point"] is None:
            del d["end_point"]
        return d


def analyze(cs: CountingSystem) -> AnalysisReport:
    tr = cs.trajectory
    is_min = counting.is_minimal(cs)
    return AnalysisReport(
        n=cs.n,
        x0=cs.x0,
        tail=tr.tail,
        cycle=tr.cycle,
        minimal=is_min,
        standard=counting.is_standard(cs),
        end_point=minimal.end_point(cs) if is_min else None,
        segment=minimal.is_segment(cs),
        # the arithmetic only exists on minimal systems
        group=is_min and arith.check_law(cs, "group").passed,
        cancellation=is_min and arith.check_law(cs, "cancellation").passed,
    )


def to_dot(cs: CountingSystem) -> str:
    """Graphviz digraph: one node per element, an edge ``x -> f(x)``."""
    end = minimal.end_point(cs) if counting.is_minimal(cs) else None
    lines = ["digraph counting_system {", "  rankdir=LR;"]
    for x in range(cs.n):
        tags = []
        if x == cs.x0:
            tags.append("x0")
        if x == end:
            tags.append("end")
        attrs = [f'label="{x}"']
        if tags:
            attrs.append(f'xlabel="{",".join(tags)}"')
        if x == cs.x0:
            attrs.append("shape=doublecircle")
        lines.append(f"  n{x} [{', '.join(attrs)}];")
    for x in range(cs.n):
        lines.append(f"  n{x} -> n{cs.f[x]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read_system(path: str) -> CountingSystem:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as e:
        raise UsageError(str(e)) from None
    try:
        return counting.from_json(text)
    except ValidationError as e:
        raise UsageError(f"invalid system: {e}") from None


def cmd_analyze(args) -> int:
    cs = _read_system(args.input)
    print(json.dumps(analyze(cs).to_dict()))
    return EXIT_OK


def cmd_table(args) -> int:
    cs = _read_system(args.input)
    sys.stdout.write(arith.table_tsv(cs, args.op))
    return EXIT_OK


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_read_system(args.input)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n > 6:
        raise UsageError("--max-n must be <= 6")
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(verify.SUITES)}")
    reports = verify.run(args.suite, args.max_n, args.cap)
    for r in reports:
        print(r.line())
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return EXIT_OK if not failed else EXIT_FAIL


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"bad --sizes {text!r}") from None
    if any(s < 1 for s in sizes):
        raise UsageError("segment sizes must be >= 1")
    return sizes


def cmd_segment(args) -> int:
    sizes = _parse_sizes(args.sizes)
    if args.join:
        if len(sizes) != 2:
            raise UsageError("--join takes exactly two sizes")
        seg = minimal.segment_join(minimal.segment_of_size(sizes[0]), minimal.segment_of_size(sizes[1]))
    else:
        if len(sizes) != 1:
            raise UsageError("expected a single size")
        seg = minimal.segment_of_size(sizes[0])
        if args.extend:
            seg = minimal.segment_extend(seg)
        elif args.restrict:
            seg = minimal.segment_restrict(seg)
    print(seg.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="countsys", description="Analyze finite counting systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="tail, cycle, minimality and related flags as JSON")
    p.add_argument("--input", default="-", help="system JSON file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="Cayley table of add or mul as TSV")
    p.add_argument("--input", default="-")
    p.add_argument("--op", choices=["add", "mul"], default="add")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dot", help="Graphviz rendering of the self-map")
    p.add_argument("--input", default="-")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--suite", default="all")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("segment", help="build, extend, restrict or join canonical segments")
    p.add_argument("--sizes", required=True, help="one size, or two with --join")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--join", action="store_true")
    mode.add_argument("--extend", action="store_true")
    mode.add_argument("--restrict", action="store_true")
    p.set_defaults(func=cmd_segment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (RequiresMinimalError, CannotRestrictError) as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
