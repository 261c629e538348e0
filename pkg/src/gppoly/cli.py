"""Command-line front end.

Graph sources are either a path to an edge-list file, a family string such
as ``kneser2:5`` or ``corona(path:5)`` (enumerated), or ``family:<spec>``
(evaluated by closed form where the command allows it).

Exit status: 0 success, 1 verification mismatch, 2 bad input, 3 safety limit.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from itertools import product

from .closed_forms import UnsupportedFamilyError, closed_form
from .engine import (
    DEFAULT_MAX_MAXIMAL_SETS,
    ResourceLimitError,
    gp_polynomial,
    intersection_census,
    maximal_gp_sets,
    psi_inclusion_exclusion,
)
from .families import FAMILIES, FamilySpec, build_family, parse_family
from .graph import Graph, GraphInputError, cartesian_product, corona, disjoint_union, join, read_edge_list
from .poly import Polynomial, format_poly, unimodality_witness

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_MAX_VERTICES = 40


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise GraphInputError(message)


def load_graph(source: str) -> Graph:
    if source.startswith("family:"):
        source = source[len("family:"):]
    if os.path.isfile(source):
        with open(source) as fh:
            return read_edge_list(fh.read())
    return build_family(parse_family(source))


class Runner:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.t0 = time.perf_counter()

    def elapsed_ms(self) -> int:
        if self.args.no_timing:
            return 0
        return int((time.perf_counter() - self.t0) * 1000)

    def enumerate(self, g: Graph) -> Polynomial:
        if g.n > self.args.max_vertices and not self.args.force:
            raise ResourceLimitError(
                f"graph has {g.n} vertices, enumeration limit is {self.args.max_vertices} "
                "(use --force)")
        return gp_polynomial(g, workers=self.args.workers)

    def max_sets(self) -> int:
        return 1 << 62 if self.args.force else self.args.max_sets

    def psi_of(self, source: str) -> tuple[Graph, Polynomial]:
        """``family:`` sources use the closed form, everything else enumerates."""
        g = load_graph(source)
        if source.startswith("family:"):
            return g, closed_form(parse_family(source[len("family:"):]))
        return g, self.enumerate(g)

    def report(self, g: Graph, source: str, psi: Polynomial, **extra) -> dict:
        witness = unimodality_witness(psi)
        rep = {
            "graph": {"n": g.n, "m": g.m, "source": source},
            "psi": [str(c) for c in psi],
            "gp": psi.degree,
            "unimodal": witness is None,
            "witness": list(witness) if witness else None,
        }
        rep.update(extra)
        rep["elapsed_ms"] = self.elapsed_ms()
        return rep


def _emit(args, rep: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(rep))
    else:
        print("\n".join(lines))


def _describe(g: Graph, source: str) -> str:
    return f"{source}: n={g.n} m={g.m}"


def cmd_compute(r: Runner) -> int:
    src = r.args.source
    g, psi = r.psi_of(src)
    rep = r.report(g, src, psi)
    _emit(r.args, rep, [_describe(g, src), f"psi = {format_poly(psi)}", f"gp = {psi.degree}"])
    return EXIT_OK


def cmd_family(r: Runner) -> int:
    src = r.args.spec.removeprefix("family:")
    spec = parse_family(src)
    psi = closed_form(spec)
    g = build_family(spec)
    rep = r.report(g, src, psi)
    _emit(r.args, rep, [_describe(g, src), f"psi = {format_poly(psi)}", f"gp = {psi.degree}"])
    return EXIT_OK


def first_difference(p: Polynomial, q: Polynomial) -> int | None:
    for i in range(max(len(p), len(q))):
        if p[i] != q[i]:
            return i
    return None


def cmd_verify(r: Runner) -> int:
    src = r.args.spec.removeprefix("family:")
    spec = parse_family(src)
    closed = closed_form(spec)
    g = build_family(spec)
    enum = r.enumerate(g)
    diff = first_difference(enum, closed)
    status = "EQUAL" if diff is None else "DIFFER"
    rep = r.report(g, src, enum, closed_form=[str(c) for c in closed], status=status,
                   first_difference=diff)
    lines = [_describe(g, src), f"enumeration = {format_poly(enum)}",
             f"closed form = {format_poly(closed)}", status]
    if diff is not None:
        lines[-1] += f" at x^{diff}: {enum[diff]} (enumeration) vs {closed[diff]} (closed form)"
    _emit(r.args, rep, lines)
    return EXIT_OK if diff is None else EXIT_MISMATCH


def census_table(census: dict[int, dict[int, int]]) -> list[str]:
    if not census:
        return ["(fewer than two maximal sets)"]
    width = max(t for row in census.values() for t in row) + 1
    rows = ["k \\ |cap| " + " ".join(f"{t:>6}" for t in range(width))]
    for k, row in census.items():
        rows.append(f"{k:>9} " + " ".join(f"{row.get(t, 0):>6}" for t in range(width)))
    return rows


def cmd_maximal(r: Runner) -> int:
    src = r.args.source
    g = load_graph(src)
    if g.n > r.args.max_vertices and not r.args.force:
        raise ResourceLimitError(f"graph has {g.n} vertices (limit {r.args.max_vertices})")
    sets = maximal_gp_sets(g)
    if len(sets) > r.max_sets():
        raise ResourceLimitError(
            f"{len(sets)} maximal sets exceed the limit of {r.args.max_sets} (use --force)")
    census = intersection_census(sets)
    psi = psi_inclusion_exclusion(g, max_sets=r.max_sets())
    by_size: dict[int, list[list[str]]] = {}
    for s in sorted(sets, key=lambda s: (-len(s), s)):
        by_size.setdefault(len(s), []).append([g.label(v) for v in s])
    rep = r.report(
        g, src, psi,
        maximal_sets={str(k): v for k, v in by_size.items()},
        census={str(k): {str(t): c for t, c in row.items()} for k, row in census.items()},
    )
    lines = [_describe(g, src), f"{len(sets)} maximal general position sets"]
    for size, group in by_size.items():
        lines.append(f"size {size}: {len(group)}")
        lines.extend("  {" + ", ".join(s) + "}" for s in group)
    lines.append("intersection census (rows: subfamily size, columns: intersection size)")
    lines.extend(census_table(census))
    lines.append(f"psi (inclusion-exclusion) = {format_poly(psi)}")
    _emit(r.args, rep, lines)
    return EXIT_OK


def cmd_unimodal(r: Runner) -> int:
    src = r.args.source
    g, psi = r.psi_of(src)
    rep = r.report(g, src, psi)
    verdict = "UNIMODAL" if rep["unimodal"] else f"NOT UNIMODAL (rise at x^{rep['witness'][0]}->x^{rep['witness'][1]} after a fall)"
    _emit(r.args, rep, [_describe(g, src), f"psi = {format_poly(psi)}", verdict])
    return EXIT_OK


_RANGE = re.compile(r"^([a-z]+)=(\d+)(?:\.\.(\d+))?$")


def parse_scan_ranges(family: str, assignments: list[str]) -> list[FamilySpec]:
    if family not in FAMILIES:
        raise GraphInputError(f"unknown family {family!r}")
    names = FAMILIES[family][0]
    ranges: dict[str, range] = {}
    for a in assignments:
        m = _RANGE.match(a.strip())
        if not m:
            raise GraphInputError(f"bad range {a!r}; expected name=lo..hi or name=value")
        name, lo, hi = m.groups()
        if name not in names:
            raise GraphInputError(f"{family} has parameters {names}, not {name!r}")
        ranges[name] = range(int(lo), int(hi if hi is not None else lo) + 1)
    missing = [nm for nm in names if nm not in ranges]
    if missing:
        raise GraphInputError(f"missing range for {missing}")
    return [FamilySpec(family, combo) for combo in product(*(ranges[nm] for nm in names))]


def cmd_scan(r: Runner) -> int:
    specs = parse_scan_ranges(r.args.family, r.args.ranges)
    hits = []
    for spec in specs:
        psi = closed_form(spec)
        w = unimodality_witness(psi)
        if w is not None:
            hits.append({"spec": str(spec), "params": dict(zip(spec.param_names, spec.params)),
                         "witness": list(w), "psi": [str(c) for c in psi]})
    rep = {"family": r.args.family, "checked": len(specs), "hits": hits,
           "elapsed_ms": r.elapsed_ms()}
    lines = [f"scanned {len(specs)} instances of {r.args.family}: {len(hits)} not unimodal"]
    for h in hits:
        lines.append(f"{h['spec']} NOT UNIMODAL witness=x^{h['witness'][0]}->x^{h['witness'][1]} "
                     f"psi = {format_poly(Polynomial(int(c) for c in h['psi']))}")
    if hits:
        lines.append(f"first non-unimodal: {hits[0]['spec']}")
    _emit(r.args, rep, lines)
    return EXIT_OK


def cmd_ops(r: Runner) -> int:
    op = r.args.op
    g1 = load_graph(r.args.first)
    if op == "corona":
        if r.args.second is not None:
            raise GraphInputError("corona takes a single graph")
        g, src = corona(g1), f"corona({r.args.first})"
    else:
        if r.args.second is None:
            raise GraphInputError(f"{op} needs two graphs")
        g2 = load_graph(r.args.second)
        fn = {"union": disjoint_union, "join": join, "product": cartesian_product}[op]
        g, src = fn(g1, g2), f"{op}({r.args.first}, {r.args.second})"
    psi = r.enumerate(g)
    rep = r.report(g, src, psi)
    _emit(r.args, rep, [_describe(g, src), f"psi = {format_poly(psi)}", f"gp = {psi.degree}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--force", action="store_true", help="ignore safety limits")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--max-sets", type=int, default=DEFAULT_MAX_MAXIMAL_SETS)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 for reproducible output")

    p = _Parser(prog="gppoly", description="General position polynomials of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("compute", parents=[common], help="psi by enumeration")
    s.add_argument("source")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("family", parents=[common], help="psi by closed form")
    s.add_argument("spec")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("verify", parents=[common], help="closed form vs enumeration")
    s.add_argument("spec")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("maximal", parents=[common], help="maximal sets and intersection census")
    s.add_argument("source")
    s.set_defaults(func=cmd_maximal)

    s = sub.add_parser("unimodal", parents=[common], help="unimodality verdict")
    s.add_argument("source")
    s.set_defaults(func=cmd_unimodal)

    s = sub.add_parser("scan", parents=[common], help="scan a family for non-unimodal psi")
    s.add_argument("family")
    s.add_argument("ranges", nargs="+", help="name=lo..hi or name=value per parameter")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("ops", parents=[common], help="psi of union/join/product/corona")
    s.add_argument("op", choices=["union", "join", "product", "corona"])
    s.add_argument("first")
    s.add_argument("second", nargs="?")
    s.set_defaults(func=cmd_ops)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for name in ("max_vertices", "max_sets", "workers"):
            if getattr(args, name) < 1:
                raise GraphInputError(f"--{name.replace('_', '-')} must be positive")
        return args.func(Runner(args))
    except (GraphInputError, UnsupportedFamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
