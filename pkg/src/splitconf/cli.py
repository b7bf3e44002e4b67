"""Command-line entry point: ``splitconf <command> [options]``.

Exit status is 0 on success, 1 when a check fails and 2 on usage or parse
errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .families import (
    GPParams, ScanReport, build_gp, gp_splitting_set, scan_conjecture17,
    scan_conjecture18,
)
from .graph import (
    INFINITE, Graph, bfs_distances, diameter, girth, is_connected, read_edge_list,
    vertex_connectivity_at_least,
)
from .incidence import SplittingType
from .haar import Cursor, ParseError, build_lcf, build_haar, parse_lcf, parse_symbol
from .splitting import (
    ORACLE_MAX_VERTICES, Restriction, brute_force_splittable, find_splitting_set,
    verify_splitting_set,
)
from .survey import (
    SURVEY_HEADER, SURVEY_HEADER_TSV, TABLE1_HEADER, TABLE1_HEADER_TSV, run_jobs,
    survey_rows, table1_from_survey, verify_checklist,
)
from .symmetry import automorphism_group, is_arc_transitive, is_vertex_transitive, is_zero_symmetric

class CheckFailed(Exception):
    pass


# -- graph specs ---------------------------------------------------------------------

@dataclass
class Target:
    name: str
    graph: Graph
    color: tuple[int, ...] | None = None
    roots: list[int] | None = None
    known: tuple[int, ...] | None = None


def parse_target(spec: str) -> Target:
    """Accepts ``H(n;...)``, ``GP(n,k)``, ``LCF[...]^r`` or a path to an edge list."""
    s = spec.strip()
    if s.startswith("H("):
        hg = build_haar(parse_symbol(s))
        return Target(str(hg.symbol), hg.graph, hg.color, roots=[0])
    if s.startswith("GP("):
        c = Cursor(s)
        c.lit("GP(")
        n = c.integer()
        c.lit(",")
        k = c.integer()
        c.lit(")")
        c.end()
        try:
            p = GPParams(n, k)
        except ValueError as exc:
            raise ParseError(str(exc), 4) from None
        return Target(str(p), build_gp(p), known=gp_splitting_set(p))
    if s.startswith("LCF["):
        lcf = parse_lcf(s)
        try:
            g = build_lcf(lcf.steps, lcf.repetitions)
        except ValueError as exc:
            raise ParseError(str(exc), 5) from None
        return Target(str(lcf), g)
    if os.path.isfile(s):
        with open(s) as fh:
            try:
                g = read_edge_list(fh.read())
            except ValueError as exc:
                raise ParseError(f"{s}: {exc}", 1) from None
        return Target(os.path.basename(s), g)
    raise ParseError(f"not a graph spec or readable file: {s!r}", 1)


def bipartition(g: Graph) -> tuple[int, ...] | None:
    """2-coloring of a connected bipartite graph with vertex 0 black, else None."""
    d = bfs_distances(g, 0)
    color = tuple(x % 2 for x in d)
    if any(color[u] == color[v] for u, v in g.edges):
        return None
    return color


# -- analyze -------------------------------------------------------------------------

def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _label_set(g: Graph, vs: Sequence[int]) -> str:
    return "{" + ",".join(g.label(v) for v in vs) + "}"


def analyze(t: Target, oracle: bool = False) -> list[str]:
    g = t.graph
    out = [f"graph: {t.name}", f"vertices: {g.n}", f"edges: {len(g.edges)}"]
    degs = sorted({g.degree(v) for v in range(g.n)})
    out.append(f"degree: {degs[0]}" if len(degs) == 1 else f"degrees: {','.join(map(str, degs))}")
    conn = is_connected(g)
    out.append(f"connected: {_yn(conn)}")
    gi = girth(g)
    out.append(f"girth: {gi}")
    if not conn:
        out.append("diameter: inf")
        out.append("splitting analysis skipped (graph is disconnected)")
        return out
    out.append(f"diameter: {diameter(g)}")
    out.append(f"3-connected: {_yn(vertex_connectivity_at_least(g, 3))}")

    group = automorphism_group(g)
    out.append("")
    out.append(f"automorphism group order: {group.order}")
    out.append(f"vertex-transitive: {_yn(is_vertex_transitive(g, group))}")
    out.append(f"arc-transitive: {_yn(is_arc_transitive(g, group))}")
    out.append(f"zero-symmetric: {_yn(is_zero_symmetric(g, group))}")

    roots = t.roots if t.roots is not None else [o[0] for o in group.orbits(g.n)]
    rep = find_splitting_set(g, roots=roots)
    if oracle:
        _oracle_check(g, Restriction.ANY, None, rep.splittable)
    out.append("")
    out.append(f"splittable: {_yn(rep.splittable)}")
    if rep.splittable:
        chk = verify_splitting_set(g, rep.certificate)
        if not chk.ok:
            raise CheckFailed(f"certificate rejected: {chk.reason}")
        out.append(f"certificate: {_label_set(g, rep.certificate)}")
        out.append("components: " + " | ".join(str(len(c)) for c in rep.components))
    if t.known is not None:
        chk = verify_splitting_set(g, t.known)
        shown = sorted(t.known, key=lambda v: (not g.label(v).endswith("'"), v))
        out.append(f"known certificate: {_label_set(g, shown)} ({'verified' if chk.ok else 'REJECTED: ' + chk.reason})")
        if not chk.ok:
            raise CheckFailed(f"known certificate for {t.name} rejected")

    out.append("")
    color = t.color if t.color is not None else bipartition(g)
    if color is None or gi is INFINITE or gi < 6:
        why = f"girth {gi}" if color is not None else f"not bipartite, girth {gi}"
        out.append(f"configuration: excluded from configuration analysis ({why})")
        return out
    cgroup = automorphism_group(g, color)
    croots = [o[0] for o in cgroup.orbits(g.n)]
    flags = []
    for r in (Restriction.BLACK_ONLY, Restriction.WHITE_ONLY):
        sub = find_splitting_set(g, r, color, roots=croots)
        if oracle:
            _oracle_check(g, r, color, sub.splittable)
        if sub.splittable and not verify_splitting_set(g, sub.certificate).ok:
            raise CheckFailed("restricted certificate rejected")
        flags.append(sub)
    kind = SplittingType.from_flags(flags[0].splittable, flags[1].splittable)
    out.append(f"configuration type: {kind.value}")
    for side, sub in zip(("points", "lines"), flags):
        cert = _label_set(g, sub.certificate) if sub.splittable else "-"
        out.append(f"  {side}-splittable: {_yn(sub.splittable)}  {cert}")
    return out


def _oracle_check(g: Graph, r: Restriction, color, verdict: bool) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        return
    if brute_force_splittable(g, r, color).splittable != verdict:
        raise CheckFailed(f"search and brute-force oracle disagree ({r.name})")


# -- tables --------------------------------------------------------------------------

def _range(args) -> tuple[int, int]:
    if not 3 <= args.n_min <= args.n_max:
        raise ParseError("need 3 <= --n-min <= --n-max", 1)
    return args.n_min, args.n_max


def cmd_table1(args) -> int:
    n_min, n_max = _range(args)
    rows = table1_from_survey(survey_rows(n_min, n_max, args.jobs, args.oracle))
    if args.tsv:
        print(TABLE1_HEADER_TSV)
        for r in rows:
            print(r.tsv())
    else:
        print(TABLE1_HEADER)
        for r in rows:
            print(r.human())
    return 0


def cmd_survey(args) -> int:
    n_min, n_max = _range(args)
    rows = survey_rows(n_min, n_max, args.jobs, args.oracle, args.girth6_only)
    print(SURVEY_HEADER_TSV if args.tsv else SURVEY_HEADER)
    for r in rows:
        print(r.tsv() if args.tsv else r.human())
    return 0


def cmd_analyze(args) -> int:
    t = parse_target(args.spec)
    if args.dot:
        sys.stdout.write(t.graph.to_dot())
        return 0
    print("\n".join(analyze(t, args.oracle)))
    return 0


def cmd_verify(args) -> int:
    results = verify_checklist(args.n_max, args.sweep_n_max, args.inject_fault)
    for r in results:
        print(r.line())
    failed = [r.name for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _scan17_one(n: int) -> ScanReport:
    return scan_conjecture17(n, n_min=n)


def _scan18_one(job: tuple[int, int]) -> ScanReport:
    k, n = job
    return scan_conjecture18(k, [n])


def _merge(parts: Sequence[ScanReport]) -> ScanReport:
    out = ScanReport()
    for p in parts:
        out.rows += p.rows
        out.mismatches += p.mismatches
        out.failures += p.failures
    return out


def _emit_scan(rep: ScanReport, tsv: bool, flag: str) -> int:
    if tsv:
        sys.stdout.write(rep.tsv())
    else:
        for r in rep.rows:
            fam = r.family or "-"
            verdict = "splittable" if r.splittable else "unsplittable"
            cert = f"  {{{r.certificate}}}" if r.certificate else ""
            print(f"{r.n:>3}  {r.symbol.braces():<18} girth {r.girth}  {verdict:<12} {fam}{cert}")
        counts = {}
        for r in rep.rows:
            counts.setdefault(r.n, [0, 0])[r.splittable] += 1
        for n, (uns, spl) in sorted(counts.items()):
            print(f"n={n}: {uns + spl} classes, {uns} unsplittable, {spl} splittable")
    for r in rep.mismatches:
        print(f"{flag}: {r.symbol} verdict={'splittable' if r.splittable else 'unsplittable'} "
              f"family={r.family or '-'} certificate={{{r.certificate}}}", file=sys.stderr)
    for r in rep.failures:
        print(f"CERTIFICATE FAILURE: {r.symbol} {{{r.certificate}}}", file=sys.stderr)
    print(f"{len(rep.rows)} instances, {len(rep.mismatches)} flagged, {len(rep.failures)} certificate failures",
          file=sys.stderr)
    return 1 if rep.failures else 0


def cmd_scan17(args) -> int:
    if args.n_max < 7:
        raise ParseError("--n-max must be at least 7", 1)
    parts = run_jobs(_scan17_one, list(range(max(7, args.n_min), args.n_max + 1)), args.jobs)
    return _emit_scan(_merge(parts), args.tsv, "MISMATCH")


def cmd_scan18(args) -> int:
    if args.k < 4:
        raise ParseError("-k must be at least 4", 1)
    jobs = [(args.k, n) for n in range(args.n_min, args.n_max + 1)]
    parts = run_jobs(_scan18_one, jobs, args.jobs)
    return _emit_scan(_merge(parts), args.tsv, "SPLITTABLE (refutes the k >= 4 conjecture)")


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="splitconf", description="Splittability of cyclic Haar graphs and configurations.")
    sub = p.add_subparsers(dest="command", required=True)

    def ranged(sp, lo, hi):
        sp.add_argument("--n-min", type=int, default=lo)
        sp.add_argument("--n-max", type=int, default=hi)
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        sp.add_argument("--tsv", action="store_true", help="tab-separated output")

    sp = sub.add_parser("table1", help="class counts per n")
    ranged(sp, 3, 30)
    sp.add_argument("--oracle", action="store_true", help="cross-check with brute force where feasible")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("survey", help="one row per trivalent cyclic Haar class")
    ranged(sp, 3, 30)
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--girth6-only", action="store_true")
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("analyze", help="report on one graph")
    sp.add_argument("spec", help="H(n;s,..), GP(n,k), LCF[..]^r or an edge-list file")
    sp.add_argument("--dot", action="store_true", help="print the graph in DOT and stop")
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="run the built-in checklist")
    sp.add_argument("--n-max", type=int, default=30)
    sp.add_argument("--sweep-n-max", type=int, default=200)
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan17", help="trivalent family membership versus computed verdict")
    ranged(sp, 7, 30)
    sp.set_defaults(func=cmd_scan17)

    sp = sub.add_parser("scan18", help="splittability of girth-6 H(n,S) with |S| = k")
    ranged(sp, 8, 14)
    sp.add_argument("-k", type=int, default=4)
    sp.set_defaults(func=cmd_scan18)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
