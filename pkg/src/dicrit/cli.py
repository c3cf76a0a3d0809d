"""Command-line interface.

Exit codes: 0 on success, 1 when a pipeline's computed counts differ from
the published expectations, 2 on input errors (unreadable files, malformed
graphs, out-of-range parameters).  Timings go to stderr so report output
stays byte-stable.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .canon import canonical_digraph, contains_subdigraph
from .coloring import dichromatic_number, is_k_dicritical
from .constructions import (
    d1,
    d1_general,
    d2,
    d2_general,
    d3,
    gadget_S,
    o_kl,
    saturation_scan,
)
from .digraph import Digraph
from .errors import DicritError
from .formats import emit_d6, emit_matrix, read_digraphs, write_digraphs
from .generate import tournaments
from .pipelines import (
    CensusReport,
    census_7,
    census_8_tournaments,
    cover_census_8,
    descend_report,
    min_arcs_9,
    render_cover,
    render_report,
)


def _read_graphs(path: str, fmt: str) -> list[Digraph]:
    graphs = read_digraphs(Path(path).read_text(), fmt)
    if not graphs:
        raise DicritError(f"no graphs in {path}")
    return graphs


def _parse_shard(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)/(\d+)", text)
    if not m:
        raise ValueError(f"shard must look like i/k, got {text!r}")
    i, k = int(m.group(1)), int(m.group(2))
    if k < 1 or not 0 <= i < k:
        raise ValueError(f"shard index {i} out of range for {k} shards")
    return i, k


def _finish_report(report: CensusReport, args) -> int:
    text = render_report(report)
    if args.report:
        Path(args.report).write_text(text)
    sys.stdout.write(text)
    for stage, seconds in report.timing:
        print(f"time {stage} {seconds:.2f}s", file=sys.stderr)
    return 1 if report.count_mismatch else 0


def _cmd_chi(args) -> int:
    for d in _read_graphs(args.file, args.format):
        print(dichromatic_number(d))
    return 0


def _cmd_critical(args) -> int:
    for d in _read_graphs(args.file, args.format):
        print("true" if is_k_dicritical(d, args.k) else "false")
    return 0


def _cmd_canon(args) -> int:
    graphs = [canonical_digraph(d) for d in _read_graphs(args.file, args.format)]
    sys.stdout.write(write_digraphs(graphs, args.format))
    return 0


def _cmd_contains(args) -> int:
    h = _read_graphs(args.h_file, args.format)[0]
    g = _read_graphs(args.g_file, args.format)[0]
    print("true" if contains_subdigraph(h, g) else "false")
    return 0


def _cmd_enum_tournaments(args) -> int:
    shard = _parse_shard(args.shard) if args.shard else None
    first = True
    for t in tournaments(args.n, shard=shard):
        if args.format == "d6":
            sys.stdout.write(emit_d6(t) + "\n")
        else:
            if not first:
                sys.stdout.write("\n")
            sys.stdout.write(emit_matrix(t))
        first = False
    return 0


def _cmd_construct(args) -> int:
    fam = args.family
    if fam == "s":
        d = gadget_S()
    elif fam == "d1":
        d = d1()
    elif fam == "d2":
        d = d2()
    elif fam == "d3":
        d = d3()
    elif fam == "okl":
        if args.k is None or args.l is None:
            raise ValueError("okl needs --k and --l")
        d = o_kl(args.k, args.l)
    elif fam == "d1-general":
        if args.middle is None or args.outer is None:
            raise ValueError("d1-general needs --middle and --outer")
        d = d1_general(args.middle, [int(x) for x in args.outer.split(",")])
    else:
        if args.k is None:
            raise ValueError("d2-general needs --k")
        d = d2_general(args.k)
    sys.stdout.write(write_digraphs([d], args.format))
    return 0


def _cmd_census7(args) -> int:
    return _finish_report(census_7(jobs=args.jobs), args)


def _cmd_census8(args) -> int:
    return _finish_report(census_8_tournaments(jobs=args.jobs), args)


def _cmd_descend(args) -> int:
    starts = _read_graphs(args.file, args.format)
    return _finish_report(descend_report(starts, jobs=args.jobs), args)


def _cmd_cover(args) -> int:
    result = cover_census_8(jobs=args.jobs)
    text = render_cover(result)
    if args.report:
        Path(args.report).write_text(text)
    sys.stdout.write(text)
    print(f"time cover {result.seconds:.2f}s", file=sys.stderr)
    return 1 if result.count_mismatch else 0


def _cmd_minarcs9(args) -> int:
    shard = _parse_shard(args.shard) if args.shard else None
    report = min_arcs_9(stage=args.stage, jobs=args.jobs, shard=shard)
    return _finish_report(report, args)


def _cmd_saturate(args) -> int:
    rep = saturation_scan(args.n, jobs=args.jobs)
    lines = [
        "report saturate",
        f"param n {rep.n}",
        f"count scanned {rep.scanned}",
        f"count two_dichromatic {rep.two_dichromatic}",
        f"count saturated {len(rep.saturated)}",
    ]
    for i, d in enumerate(rep.saturated):
        lines.append(f"graph {i} role=saturated n={d.n} arcs={d.arc_count}")
        lines.append(emit_matrix(d).rstrip("\n"))
    lines.append("end")
    text = "\n".join(lines) + "\n"
    if args.report:
        Path(args.report).write_text(text)
    sys.stdout.write(text)
    return 1 if rep.saturated else 0


def _parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("matrix", "d6"), default="matrix")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=1)
    shard = argparse.ArgumentParser(add_help=False)
    shard.add_argument("--shard", default=None, metavar="i/k")
    report = argparse.ArgumentParser(add_help=False)
    report.add_argument("--report", default=None, metavar="PATH")

    p = argparse.ArgumentParser(
        prog="dicrit",
        description="dichromatic numbers, dicritical digraphs, and censuses",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chi", parents=[fmt], help="dichromatic number per graph")
    s.add_argument("file")
    s.set_defaults(func=_cmd_chi)

    s = sub.add_parser("critical", parents=[fmt], help="k-dicriticality per graph")
    s.add_argument("file")
    s.add_argument("--k", type=int, default=3)
    s.set_defaults(func=_cmd_critical)

    s = sub.add_parser("canon", parents=[fmt], help="canonical representatives")
    s.add_argument("file")
    s.set_defaults(func=_cmd_canon)

    s = sub.add_parser("contains", parents=[fmt],
                       help="is the first graph a subdigraph of the second")
    s.add_argument("h_file")
    s.add_argument("g_file")
    s.set_defaults(func=_cmd_contains)

    s = sub.add_parser("enum-tournaments", parents=[fmt, shard],
                       help="stream tournament classes")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=_cmd_enum_tournaments)

    s = sub.add_parser("construct", parents=[fmt], help="emit a named family member")
    s.add_argument("--family", required=True,
                   choices=("s", "d1", "d2", "d3", "okl", "d1-general", "d2-general"))
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--middle", type=int)
    s.add_argument("--outer", help="comma-separated outer circuit lengths")
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("census7", parents=[jobs, report],
                       help="7-vertex tournament census and dicritical descent")
    s.set_defaults(func=_cmd_census7)

    s = sub.add_parser("census8", parents=[jobs, report],
                       help="8-vertex tournament census")
    s.set_defaults(func=_cmd_census8)

    s = sub.add_parser("descend", parents=[fmt, jobs, report],
                       help="arc-deletion descent to 3-dicritical graphs")
    s.add_argument("file")
    s.set_defaults(func=_cmd_descend)

    s = sub.add_parser("cover", parents=[jobs, report],
                       help="minimum dicritical cover of the census-8 tournaments")
    s.set_defaults(func=_cmd_cover)

    s = sub.add_parser("minarcs9", parents=[jobs, shard, report],
                       help="9-vertex minimum-arc exhaustion")
    s.add_argument("--stage", type=int, choices=(19, 20), default=None)
    s.set_defaults(func=_cmd_minarcs9)

    s = sub.add_parser("saturate", parents=[jobs, report],
                       help="scan for saturated 2-dichromatic oriented graphs")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=_cmd_saturate)

    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (DicritError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
