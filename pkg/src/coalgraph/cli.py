"""Command-line front end.

Output is line-oriented ``key=value``; lines starting with ``#`` are
comments. Exit status: 0 success, 2 a check or audit found counterexamples,
1 usage, parse or cap errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coalition import (
    SEARCH_CAP_PARTITION,
    Partition,
    coalition_count,
    coalition_graph,
    coalition_number,
)
from .domination import SEARCH_CAP, SEARCH_CAP_DOMATIC, domatic_number, independence_number
from .graph_core import (
    ENUM_CAP,
    FamilySpec,
    Graph,
    GraphError,
    detect_format,
    encode_graph,
    make_family,
    parse_graph,
    vertex_roles,
)
from .harness import CHECK_IDS, DEFAULT_FILTER, FILTERS, UniverseSpec, run_check
from .hstar import build_hstar, validate_hstar

LABELED_CAP = 6

FORMATS_TEXT = """\
# edge_list: first line "n m"; then exactly m lines "u v" with 0 <= u < v < n.
#   Blank lines and lines starting with '#' are ignored.
# graph6: byte n+63 (n <= 62), then upper-triangle bits in column order
#   (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
#   zero-padded, each group written as byte group+63.
# partition: parts separated by '|', members by ',', e.g. 0,5|1|2|3|4;
#   whitespace ignored; must cover 0..n-1 exactly once.
# family: name:arg[,arg...] with name in path, cycle, complete, star, empty,
#   full_plus_independents (alias fpq, args f,p,q), e.g. cycle:4, fpq:2,2,1.
# construct: host_edge_list joins edge-list lines with ';'.
# verify report: header "check=<id> universe=<mode>:n<=<N> filter=<f>",
#   lines "g6=<graph6> observed=<k=v,...> expected=<relation>",
#   footer "checked=<N> counterexamples=<M> passed=<bool>".
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2
        raise UsageError(message)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="graph file (edge_list or graph6; '-' for stdin)")
    src.add_argument("--g6", help="inline graph6 string")
    src.add_argument("--family", help="named family, e.g. cycle:4, star:5, fpq:2,2,1")
    p.add_argument("--format", choices=("auto", "edge_list", "graph6"), default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coalgraph", description="Exact coalition computations on small graphs.")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--force-cap", action="store_true", help="lift the default search-size caps")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="n, m, f, delta, alpha, domatic, C and c of one graph")
    _add_input(p)
    p.add_argument("--witness", action="store_true", help="also print witness partitions")

    p = sub.add_parser("construct", help="build and audit the host graph H* for a target")
    _add_input(p)

    p = sub.add_parser("cg", help="coalition graph of a given c-partition")
    _add_input(p)
    p.add_argument("--partition", required=True, help="partition such as 0,5|1|2|3|4")

    p = sub.add_parser("verify", help="sweep a graph universe and check one claim")
    p.add_argument("--check", required=True, help=f"one of {', '.join(CHECK_IDS)}")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--mode", choices=("iso", "labeled"), help="default: labeled for ORACLE, else iso")
    p.add_argument("--filter", choices=FILTERS, help="default depends on the check")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all-witnesses", action="store_true", help="T34: check every maximum-order partition")

    sub.add_parser("formats", help="print the accepted text formats")
    return parser


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family:
        return make_family(FamilySpec.parse(args.family))
    if args.g6:
        text, fmt = args.g6, "graph6"
    else:
        text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
        fmt = args.format
    if fmt == "auto":
        fmt = detect_format(text)
    return parse_graph(text, fmt)


def _analyze(args: argparse.Namespace) -> tuple[list[str], int]:
    g = _load_graph(args)
    free = args.force_cap
    roles = vertex_roles(g)
    dom = domatic_number(g, cap=None if free else SEARCH_CAP_DOMATIC)
    alpha = independence_number(g, cap=None if free else SEARCH_CAP)
    cn = coalition_number(g, cap=None if free else SEARCH_CAP_PARTITION)
    cc = coalition_count(g, cap=None if free else SEARCH_CAP_PARTITION)

    def show(v):
        return "none" if v is None else str(v)

    out = [
        f"n={g.n}",
        f"m={g.m}",
        f"f={roles.full_count}",
        f"delta={roles.min_degree}",
        f"alpha={alpha}",
        f"domatic={dom.d}",
        f"C={show(cn.value)}",
        f"c={show(cc.value)}",
    ]
    if args.witness:
        out.append("domatic_witness=" + "|".join(",".join(map(str, p.members())) for p in dom.witness))
        out.append(f"C_witness={show(cn.witness)}")
        out.append(f"c_witness={show(cc.witness)}")
        out.append(f"partitions_examined={cn.partitions_examined}")
    return out, 0


def _construct(args: argparse.Namespace) -> tuple[list[str], int]:
    g = _load_graph(args)
    r = build_hstar(g)
    a = validate_hstar(g, r)
    out = [
        f"case={r.case_tag}",
        f"target_g6={encode_graph(g, 'graph6')}",
        f"host_n={r.host.n}",
        f"host_m={r.host.m}",
        f"host_g6={encode_graph(r.host, 'graph6')}",
        "host_edge_list=" + encode_graph(r.host, "edge_list").replace("\n", ";"),
        f"pi_star={r.pi_star}",
        "matching=" + ",".join(f"{x}-{y}" for x, y in r.matching),
    ]
    for gad in r.gadget_map:
        out.append(f"gadget=vertex:{gad.vertex},part:{gad.part},missing:{'-'.join(map(str, gad.missing))}")
    out += [
        "w_vertices=" + ",".join(map(str, r.w_vertices)),
        f"predicted_order={r.predicted_order}",
        f"predicted_size_verbatim={r.predicted_size}",
        f"predicted_size_corrected={r.predicted_size_corrected}",
        f"actual_order={r.actual_order}",
        f"actual_size={r.actual_size}",
        f"partition_valid={_flag(a.partition_valid)}",
        f"cg_matches={_flag(a.cg_matches)}",
        f"iso_matches={_flag(a.iso_matches)}",
        f"order_size_match_table={_flag(a.order_size_match_table)}",
        f"corrected_size_match={_flag(a.corrected_size_match)}",
    ]
    out += [f"violation={v}" for v in a.violations]
    out += [f"note={v}" for v in a.notes]
    out.append(f"passed={_flag(a.passed)}")
    return out, 0 if a.passed else 2


def _cg(args: argparse.Namespace) -> tuple[list[str], int]:
    g = _load_graph(args)
    p = Partition.parse(args.partition, g.n)
    res = coalition_graph(g, p)
    out = [f"parts={len(p)}"]
    out += [f"part.{i}={label}" for i, label in enumerate(res.part_labels)]
    out += [f"cg_n={res.cg.n}", f"cg_m={res.cg.m}", f"cg_g6={encode_graph(res.cg, 'graph6')}"]
    out += [f"edge={u}-{v}" for u, v in res.cg.edges()]
    return out, 0


def _verify(args: argparse.Namespace) -> tuple[list[str], int]:
    check = args.check.upper()
    if check not in CHECK_IDS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(CHECK_IDS)}")
    mode = args.mode or ("labeled" if check == "ORACLE" else "iso")
    mode = "up_to_isomorphism" if mode == "iso" else "labeled"
    cap = ENUM_CAP if mode == "up_to_isomorphism" else LABELED_CAP
    if args.max_n > cap and not args.force_cap:
        raise GraphError(f"--max-n {args.max_n} exceeds the {mode} cap {cap}; pass --force-cap to proceed")
    spec = UniverseSpec(args.max_n, mode, args.filter or DEFAULT_FILTER[check], args.min_n)
    report = run_check(check, spec, jobs=max(1, args.jobs), all_witnesses=args.all_witnesses)
    return report.render().splitlines(), 0 if report.passed else 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "analyze": _analyze,
            "construct": _construct,
            "cg": _cg,
            "verify": _verify,
            "formats": lambda a: (FORMATS_TEXT.splitlines(), 0),
        }[args.command]
        lines, status = handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
