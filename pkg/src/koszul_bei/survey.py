"""Enumerate small connected graphs up to isomorphism and run the equivalence suites over them."""

import csv
import io
from dataclasses import dataclass, field

from .classify import FLAG_NAMES, classify
from .errors import ConsistencyError, CostGuardError
from .graph import Graph, encode_graph6, named_graph, parse_graph6, path

MAX_ENUMERATE_N = 8
MAX_ALGEBRA_N = 5


# --- canonical labelling -------------------------------------------------


def _refine(g, colors):
    """Colour refinement to a stable partition; colours are canonical ranks 0..k-1."""
    n = g.n
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w - 1] for w in g.adj[v]))) for v in range(n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_form(g):
    """Canonical certificate and labelling of g.

    Returns ``(certificate, order)``: ``order[k]`` is the vertex placed at
    position k + 1, and ``certificate`` is the upper-triangle adjacency
    string under that placement, minimised over an individualisation-refinement
    search (twin vertices are only branched on once).
    """
    n = g.n
    if n == 0:
        return (0, ()), ()
    best = [None, None]

    def leaf(colors):
        order = sorted(range(n), key=lambda v: colors[v])
        bits = tuple(
            1 if (order[j] + 1) in g.adj[order[i]] else 0 for j in range(1, n) for i in range(j)
        )
        if best[0] is None or bits < best[0]:
            best[0] = bits
            best[1] = tuple(v + 1 for v in order)

    def search(colors):
        if len(set(colors)) == n:
            leaf(colors)
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried = []
        for v in cell:
            if any(_are_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            ind = [2 * c + 1 for c in colors]
            ind[v] = 2 * colors[v]
            search(_refine(g, ind))

    search(_refine(g, [g.degree(v + 1) for v in range(n)]))
    return (n, best[0]), best[1]


def _are_twins(g, u, v):
    # swapping twins is an automorphism fixing every other vertex, so one branch suffices
    nu = g.adj[u] - {v + 1}
    nv = g.adj[v] - {u + 1}
    return nu == nv


def canonical_graph(g):
    """The canonical representative: g relabelled by its canonical order."""
    _, order = canonical_form(g)
    perm = [0] * g.n
    for pos, v in enumerate(order, start=1):
        perm[v - 1] = pos
    return g.relabel(perm)


def are_isomorphic(g, h):
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g)[0] == canonical_form(h)[0]


# --- enumeration ---------------------------------------------------------

_levels = {1: [Graph(1)]}


def _connected_level(n):
    if n in _levels:
        return _levels[n]
    prev = _connected_level(n - 1)
    found = {}
    for g in prev:
        edges = g.edges()
        for mask in range(1, 1 << (n - 1)):
            new = edges + [(v, n) for v in range(1, n) if mask >> (v - 1) & 1]
            h = Graph(n, new)
            cert, _ = canonical_form(h)
            if cert not in found:
                found[cert] = canonical_graph(h)
    _levels[n] = [found[c] for c in sorted(found)]
    return _levels[n]


def enumerate_connected_graphs(n):
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Every connected graph has a non-cut vertex, so extending the
    (n-1)-vertex level by one vertex with a nonempty neighbourhood reaches
    all classes; duplicates are rejected by canonical certificate.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATE_N:
        raise CostGuardError(f"in-process enumeration stops at n = {MAX_ENUMERATE_N}; ingest graph6 instead")
    return iter(_connected_level(n))


def read_graph6_lines(text):
    """Graphs from a graph6 file body, one record per non-blank line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# --- survey --------------------------------------------------------------


@dataclass
class GraphResult:
    graph: Graph
    flags: dict
    certificates: dict
    source: str = "enumerated"
    algebra: object = None  # None when not run, else bool: quadratic GB exists


@dataclass
class SurveyReport:
    counts: dict = field(default_factory=dict)  # n -> {cell: count}
    failures: list = field(default_factory=list)
    koszul_not_closed: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "ok": self.ok,
            "counts": {str(n): dict(sorted(c.items())) for n, c in sorted(self.counts.items())},
            "failures": sorted(self.failures, key=lambda f: (f["graph6"], f["check"])),
            "koszul_not_closed": self.koszul_not_closed,
        }

    def to_csv(self):
        buf = io.StringIO()
        cols = ["graph6", "n", "m", "source", *FLAG_NAMES, "peo", "seo", "closed_order", "edge_order", "quadratic_gb"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.rows:
            g = r.graph
            w.writerow(
                [encode_graph6(g), g.n, g.num_edges, r.source]
                + [int(r.flags[f]) for f in FLAG_NAMES]
                + [int(r.certificates[k]) for k in ("peo", "seo", "closed_order", "edge_order")]
                + ["" if r.algebra is None else int(r.algebra)]
            )
        return buf.getvalue()


CELLS = ("chordal", "strongly_chordal", "claw_free", "closed", "koszul")


def _count(report, n, flags):
    c = report.counts.setdefault(n, {k: 0 for k in CELLS + ("total", "koszul_not_closed")})
    c["total"] += 1
    for k in CELLS:
        c[k] += int(flags[k])
    c["koszul_not_closed"] += int(flags["koszul"] and not flags["closed"])


def _check_graph(g, source, algebra):
    """Classify one graph and run the cross-checks; returns (GraphResult or None, failures)."""
    from .bei import has_quadratic_lex_gb, quadratic_gb_exists

    g6 = encode_graph6(g)
    fails = []
    try:
        rep = classify(g)
    except ConsistencyError as exc:
        return None, [{"graph6": g6, "check": "classify", "detail": str(exc)}]
    f = rep.flags
    certs = {
        "peo": "perfect" in rep.orders,
        "seo": "strong" in rep.orders,
        "closed_order": "closed" in rep.orders,
        "edge_order": rep.edge_order is not None,
    }

    def fail(check, detail=""):
        fails.append({
            "graph6": g6,
            "check": check,
            "detail": detail,
            "orders": {k: o.to_json() for k, o in rep.orders.items()},
            "witnesses": {k: w.to_json() for k, w in rep.witnesses.items()},
        })

    if f["closed"] and not f["koszul"]:
        fail("closed implies koszul")
    if f["koszul"] and not f["strongly_chordal"]:
        fail("koszul implies strongly chordal")
    if f["strongly_chordal"] and not f["chordal"]:
        fail("strongly chordal implies chordal")
    if f["koszul"] != (f["strongly_chordal"] and f["claw_free"]):
        fail("koszul iff strongly chordal and claw-free")
    if f["koszul"] != (f["chordal"] and f["claw_free"] and f["tent_free"]):
        fail("koszul iff chordal, claw-free, tent-free")
    if f["koszul"] != certs["edge_order"]:
        fail("koszul iff claw-avoiding edge elimination order")
    if f["closed"] != certs["closed_order"]:
        fail("closed iff closed order")
    if f["claw_free"] and f["blocks_all_closed"] and not f["strongly_chordal"]:
        fail("claw-free with closed blocks implies strongly chordal")
    if rep.clique_number <= 3 and f["koszul"] != (f["claw_free"] and f["blocks_all_closed"]):
        fail("small clique number block characterization")

    quad = None
    if algebra:
        try:
            quad = quadratic_gb_exists(g, exhaustive=not f["closed"])
        except ConsistencyError as exc:
            fail("quadratic GB iff closed", str(exc))
        if f["closed"] and not has_quadratic_lex_gb(g, rep.orders["closed"].sequence):
            fail("closed order gives quadratic GB")
    return GraphResult(g, f, certs, source, quad), fails


def algebra_named_graphs():
    return [
        ("net", named_graph("net")),
        ("c4_chord", named_graph("c4_chord")),
        ("tent", named_graph("tent")),
        ("claw", named_graph("claw")),
        ("path5", path(5)),
    ]


def run_survey(n_max, enable_algebraic=False, extra_graphs=(), algebra_n_max=MAX_ALGEBRA_N, named_algebra=True):
    """Classify every connected graph with at most ``n_max`` vertices and cross-check.

    ``extra_graphs`` is an iterable of ``(label, Graph)`` pairs processed
    after the enumeration (e.g. ingested graph6 data). With algebra enabled,
    the Groebner-basis route runs for n <= ``algebra_n_max`` and on the
    named graphs.
    """
    if n_max > MAX_ENUMERATE_N:
        raise CostGuardError(f"survey enumeration stops at n = {MAX_ENUMERATE_N}")
    report = SurveyReport()
    stream = [("enumerated", g) for n in range(1, n_max + 1) for g in enumerate_connected_graphs(n)]
    stream += list(extra_graphs)
    if enable_algebraic and named_algebra:
        stream += [(f"named:{name}", g) for name, g in algebra_named_graphs()]
    for source, g in stream:
        algebra = enable_algebraic and (g.n <= algebra_n_max or source.startswith("named:"))
        res, fails = _check_graph(g, source, algebra)
        report.failures.extend(fails)
        if res is None:
            continue
        report.rows.append(res)
        if source == "enumerated":
            _count(report, g.n, res.flags)
        if res.flags["koszul"] and not res.flags["closed"]:
            report.koszul_not_closed.append({"graph6": encode_graph6(g), "n": g.n, "source": source})
    return report
