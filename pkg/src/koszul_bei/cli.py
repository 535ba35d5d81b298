"""Command-line front end.

Exit codes: 0 success, 1 a check or equivalence failed, 2 bad input,
3 a cost guard refused the job.
"""

import argparse
import csv
import io
import json
import os
import sys
from itertools import combinations, permutations
from pathlib import Path

from . import bei, betti, orders, survey
from .classify import FLAG_NAMES, classify
from .errors import ConsistencyError, CostGuardError, GraphFormatError
from .graph import NAMED_GRAPHS, delete_edge, edge, encode_graph6, named_graph, parse_edge_list, parse_graph6
from .poly import buchberger, format_monomial, format_polynomial, initial_ideal

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


# --- input ---------------------------------------------------------------


def _parse_inline_edges(text):
    # "1 2; 2 3" or "1 2, 2 3": separators become line breaks
    return parse_edge_list(text.replace(";", "\n").replace(",", "\n"))


def load_graph(args):
    sources = [s for s in ("named", "edges", "file", "graph6") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --named, --edges, --file, --graph6")
    if args.param is not None and args.named is None:
        raise InputError("--param only applies to --named")
    if args.named is not None:
        return named_graph(args.named, args.param)
    if args.edges is not None:
        return _parse_inline_edges(args.edges)
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    path = Path(args.file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if path.suffix == ".g6" or text.startswith(">>graph6<<"):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise InputError(f"{path}: expected one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _parse_int_list(text, what):
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad {what} {text!r}") from None


# --- output helpers ------------------------------------------------------


def _emit(obj, fmt, text_lines, csv_rows=None):
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    elif fmt == "csv":
        if csv_rows is None:
            raise InputError("csv output is not available for this command")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _yn(b):
    return "yes" if b else "no"


# --- subcommands ---------------------------------------------------------


def cmd_classify(args):
    g = load_graph(args)
    rep = classify(g)
    data = rep.to_json()
    lines = [f"{name:<18} {_yn(rep.flags[name])}" for name in FLAG_NAMES]
    lines.append(f"{'clique_number':<18} {rep.clique_number}")
    lines.append(f"{'blocks':<18} {' | '.join(' '.join(map(str, b)) for b in data['blocks'])}")
    for key, val in data["certificates"].items():
        if key == "witnesses":
            for flag, w in val.items():
                lines.append(f"witness[{flag}]  {w['pattern']} at {' '.join(map(str, w['map']))}")
        elif val is not None:
            shown = " ".join(f"{a}-{b}" for a, b in val) if key == "edge_order" else " ".join(map(str, val))
            lines.append(f"{key:<18} {shown}")
    rows = [list(FLAG_NAMES) + ["clique_number"], [int(rep.flags[f]) for f in FLAG_NAMES] + [rep.clique_number]]
    _emit(data, args.format, lines, rows)
    return EXIT_OK


_ORDER_FINDERS = {
    "peo": (orders.find_perfect_elimination_order, orders.verify_perfect_elimination_order),
    "seo": (orders.find_strong_elimination_order, orders.verify_strong_elimination_order),
    "closed": (orders.find_closed_order, orders.verify_closed_order),
    "edge": (orders.find_claw_avoiding_peeo, orders.verify_claw_avoiding_peeo),
}


def cmd_order(args):
    g = load_graph(args)
    find, verify = _ORDER_FINDERS[args.kind]
    found = find(g)
    if found is None:
        _emit({"kind": args.kind, "order": None, "verified": None}, args.format, ["none"], [["kind", "order"], [args.kind, "none"]])
        return EXIT_OK
    ok = verify(g, found.sequence)
    if args.kind == "edge":
        shown = " ".join(f"{a}-{b}" for a, b in found.sequence)
    else:
        shown = " ".join(map(str, found.sequence))
    data = {"kind": args.kind, "order": found.to_json(), "length": len(found.sequence), "verified": ok}
    lines = [shown, f"length {len(found.sequence)}, verified: {_yn(ok)}"]
    _emit(data, args.format, lines, [["kind", "order", "verified"], [args.kind, shown, int(ok)]])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ideal(args):
    g = load_graph(args)
    J = bei.binomial_edge_ideal(g)
    vorder = _parse_int_list(args.order, "--order") if args.order else tuple(g.vertices)
    mo = bei.lex_from_vertex_order(vorder, J.ring)
    if args.action == "gens":
        polys = [format_polynomial(p, mo) for p in J.generators]
        data = {"generators": polys}
        lines = polys
    elif args.action in ("gb", "init"):
        gb = buchberger(J.generators, mo)
        data = {"generators": [format_polynomial(p, mo) for p in J.generators], **gb.to_json()}
        if args.action == "gb":
            lines = data["gb"] + [f"# {len(gb)} elements, max degree {gb.max_degree()}"]
        else:
            lines = [format_monomial(J.ring, next(iter(m.terms))) for m in initial_ideal(gb)]
    else:
        if args.edge is None:
            raise InputError("ideal colon needs --edge i,j")
        pair = _parse_int_list(args.edge, "--edge")
        if len(pair) != 2:
            raise InputError("--edge takes exactly two vertices")
        e = edge(*pair)
        if not g.has_edge(*e):
            raise InputError(f"{e[0]}-{e[1]} is not an edge")
        if g.n > bei.MAX_COLON_N:
            raise CostGuardError(f"colon computation refused for n={g.n} > {bei.MAX_COLON_N}")
        ring = J.ring
        minus = bei.binomial_edge_ideal(delete_edge(g, e), ring).generators
        colon = bei.colon_by_element(minus, bei.f_ij(*e, ring), mo)
        polys = [format_polynomial(p, mo) for p in colon.elements]
        data = {"edge": list(e), "colon": polys, "initial_ideal": colon.to_json()["initial_ideal"]}
        lines = polys
    rows = [["polynomial"]] + [[p] for p in lines if not p.startswith("#")]
    _emit(data, args.format, lines, rows)
    return EXIT_OK


def _check_plucker():
    results = []
    for quad in combinations(range(1, 7), 4):
        for q in permutations(quad):
            results.append(bei.plucker_check(*q))
    control = bei.plucker_combination(1, 2, 3, 4, signs=(1, 1, 1))
    ok = all(results) and not control.is_zero()
    return ok, {"quadruples": len(results), "vanishing": sum(results), "control_nonzero": not control.is_zero()}


def _check_tent():
    res = bei.tent_section4_checks()
    return res["ok"], {k: v for k, v in res.items() if k != "ok"}


def _check_colon(n_max):
    from .graph import complete

    cases = [("claw", named_graph("claw"), (1, 4)), ("triangle", complete(3), (1, 2))]
    for n in range(2, n_max + 1):
        for g in survey.enumerate_connected_graphs(n):
            cases += [(encode_graph6(g), g, e) for e in g.edges()]
    bad = []
    for label, g, e in cases:
        if not bei.verify_colon_formula(g, e):
            bad.append(f"{label} edge {e[0]}-{e[1]}")
    return not bad, {"cases": len(cases), "failures": bad}


def _check_betti():
    table = betti.betti_table_squarefree(_c4_init(), None)
    expected = {(0, 0): 1, (1, 2): 5, (2, 3): 4, (2, 4): 3, (3, 5): 4, (4, 6): 1}
    a, b = betti.c4_betti_summands()
    ok = table == expected and a + b == 9
    return ok, {"table": table.to_json()["entries"], "assembly": f"{a} + {b} = {a + b}"}


def _c4_init():
    J = bei.binomial_edge_ideal(named_graph("c4_chord"))
    return initial_ideal(buchberger(J.generators, bei.lex_from_vertex_order((1, 2, 3, 4), J.ring)))


def cmd_check(args):
    if args.suite == "plucker":
        ok, detail = _check_plucker()
        lines = [f"{detail['vanishing']}/{detail['quadruples']} orderings vanish; perturbed signs nonzero: {_yn(detail['control_nonzero'])}"]
    elif args.suite == "tent":
        ok, detail = _check_tent()
        lines = [f"{name:<20} {'pass' if v['ok'] else 'FAIL'}  {v['detail']}" for name, v in detail.items()]
    elif args.suite == "colon-formula":
        ok, detail = _check_colon(args.n_max)
        lines = [f"{detail['cases']} edge cases checked"] + [f"FAIL {b}" for b in detail["failures"]]
    else:
        ok, detail = _check_betti()
        lines = [betti.BettiTable({(i, j): v for i, j, v in detail["table"]}).format(), detail["assembly"]]
    lines.append("pass" if ok else "FAIL")
    _emit({"suite": args.suite, "ok": ok, "detail": detail}, args.format, lines, [["suite", "ok"], [args.suite, int(ok)]])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_survey(args):
    extra = []
    if args.ingest:
        try:
            text = Path(args.ingest).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.ingest}: {exc.strerror}") from None
        extra = [(f"ingested:{k}", g) for k, g in enumerate(survey.read_graph6_lines(text), start=1)]
    report = survey.run_survey(args.n_max, enable_algebraic=args.algebra, extra_graphs=extra)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    elif args.format == "json":
        sys.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")
    else:
        cols = ("total",) + survey.CELLS + ("koszul_not_closed",)
        lines = ["n  " + " ".join(f"{c:>17}" for c in cols)]
        for n, c in sorted(report.counts.items()):
            lines.append(f"{n:<2} " + " ".join(f"{c[k]:>17}" for k in cols))
        lines.append("koszul but not closed: " + (", ".join(f"{x['graph6']} (n={x['n']}, {x['source']})" for x in report.koszul_not_closed) or "none"))
        lines.append(f"failures: {len(report.failures)}")
        lines += [f"  {f['graph6']}: {f['check']} {f['detail']}".rstrip() for f in report.to_json()["failures"]]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


# --- parser ----------------------------------------------------------------


def _add_input(p):
    grp = p.add_argument_group("graph input (exactly one)")
    grp.add_argument("--named", choices=NAMED_GRAPHS)
    grp.add_argument("--param", type=int, help="size for parametric families")
    grp.add_argument("--edges", help='inline edge list, e.g. "1 2; 2 3"')
    grp.add_argument("--file", help="edge-list file, or graph6 (.g6 or >>graph6<< header)")
    grp.add_argument("--graph6", help="a graph6 string")


def _add_format(p, default="text"):
    p.add_argument("--format", choices=("json", "text", "csv"), default=default)


def build_parser():
    parser = argparse.ArgumentParser(prog="koszul-bei", description="Koszul and closed binomial edge ideals of small graphs.")
    parser.add_argument("--max-gb-seconds", type=float, help="per Groebner basis time guard (default 60)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="all flags with certificates")
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("order", help="find and verify a vertex or edge order")
    p.add_argument("kind", choices=tuple(_ORDER_FINDERS))
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("ideal", help="binomial edge ideal computations")
    p.add_argument("action", choices=("gens", "gb", "init", "colon"))
    _add_input(p)
    p.add_argument("--order", help="vertex order for lex, e.g. 1,2,3,4 (default identity)")
    p.add_argument("--edge", help="edge i,j for the colon")
    _add_format(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("check", help="packaged algebraic checks")
    p.add_argument("suite", choices=("plucker", "tent", "colon-formula", "betti-c4"))
    p.add_argument("--n-max", type=int, default=4, help="colon-formula: largest connected graphs to sweep")
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="classify all connected graphs up to n vertices")
    p.add_argument("n_max", type=int)
    p.add_argument("--algebra", action="store_true", help="also run the Groebner-basis cross-check")
    p.add_argument("--ingest", help="extra graphs, one graph6 record per line")
    _add_format(p)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("KOSZUL_MAX_GB_SECONDS")
    if args.max_gb_seconds is not None:
        if args.max_gb_seconds <= 0:
            parser.error("--max-gb-seconds must be positive")
        os.environ["KOSZUL_MAX_GB_SECONDS"] = str(args.max_gb_seconds)
    try:
        return _dispatch(args)
    finally:
        if saved is None:
            os.environ.pop("KOSZUL_MAX_GB_SECONDS", None)
        else:
            os.environ["KOSZUL_MAX_GB_SECONDS"] = saved


def _dispatch(args):
    try:
        return args.func(args)
    except (InputError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CostGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ConsistencyError, AssertionError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())
