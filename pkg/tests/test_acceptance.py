"""Acceptance criteria, one test each, with their runtime limits.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from koszul_bei.bei import (  # noqa: E402
    binomial_edge_ideal,
    colon_formula_report,
    f_ij,
    has_quadratic_lex_gb,
    lex_from_vertex_order,
    plucker_check,
    plucker_combination,
    quadratic_gb_exists,
    quadratic_lex_orders,
    tent_section4_checks,
    verify_colon_formula,
)
from koszul_bei.betti import betti_table_squarefree, c4_betti_assembly, c4_betti_summands  # noqa: E402
from koszul_bei.classify import _blocks_closed, classify  # noqa: E402
from koszul_bei.forbidden import find_named, find_trampoline, has_induced_claw, long_induced_cycle  # noqa: E402
from koszul_bei.graph import Graph, blocks, clique_number, complete, cycle, delete_vertex, named_graph  # noqa: E402
from koszul_bei.orders import (  # noqa: E402
    _simple_elimination,
    closed_by_forbidden,
    find_claw_avoiding_peeo,
    find_closed_order,
    find_perfect_elimination_order,
    find_strong_elimination_order,
    verify_claw_avoiding_peeo,
    verify_closed_order,
    verify_perfect_elimination_order,
    verify_strong_elimination_order,
)
from koszul_bei.poly import bei_ring, buchberger, ideal_equal, initial_ideal  # noqa: E402
from koszul_bei.survey import enumerate_connected_graphs  # noqa: E402


@contextmanager
def criterion(number, title, limit):
    """Time the block, record one PASS/FAIL line, and fail on a broken limit."""
    t0 = time.perf_counter()
    state = {"ok": False}
    try:
        yield state
    finally:
        dt = time.perf_counter() - t0
        ok = state["ok"] and dt < limit
        verdict = "PASS" if ok else "FAIL"
        note = "" if dt < limit else f" (over the {limit:g} s limit)"
        ACCEPTANCE_LINES.append(f"criterion {number}: {verdict}  {title}  [{dt:.2f} s / {limit:g} s]{note}")
    assert dt < limit, f"criterion {number} took {dt:.1f} s, limit {limit:g} s"


def _connected(n_max):
    return [g for n in range(1, n_max + 1) for g in enumerate_connected_graphs(n)]


def _init_strings(g, order):
    J = binomial_edge_ideal(g)
    return sorted(str(m) for m in initial_ideal(J.gb(order)))


def test_criterion_1_named_graph_classification():
    with criterion(1, "named-graph classification", 1.0) as st:
        claw = classify(named_graph("claw"))
        tent = classify(named_graph("tent"))
        cycles = [classify(cycle(k)) for k in range(4, 9)]
        net = classify(named_graph("net"))
        thick = classify(named_graph("thick_net"))
        checks = [
            not claw.koszul,
            not tent.koszul,
            all(not r.koszul for r in cycles),
            net.koszul and not net.closed,
            thick.strongly_chordal and thick.claw_free and not thick.closed,
            thick.blocks == [frozenset(range(1, 10))],
        ]
        st["ok"] = all(checks)
    assert all(checks), checks


def test_criterion_2_initial_ideals():
    timings = []
    with criterion(2, "lex initial ideals (each case < 1 s)", 3.0) as st:
        t0 = time.perf_counter()
        c4 = _init_strings(named_graph("c4_chord"), (1, 2, 3, 4))
        timings.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        g, _ = delete_vertex(named_graph("tent_labeled"), 6)
        tent = _init_strings(g, (1, 2, 3, 4, 5))
        timings.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        p = _init_strings(Graph(5, [(1, 3), (3, 5)]), (1, 2, 3, 4, 5))
        timings.append(time.perf_counter() - t0)
        ok = (
            c4 == ["x1*y2", "x1*y3", "x2*y3", "x2*y4", "x3*y4"]
            and tent == ["x1*y2", "x1*y3", "x2*y3", "x2*y4", "x3*y4", "x3*y5", "x4*y5"]
            and p == ["x1*y3", "x3*y5"]
        )
        st["ok"] = ok and max(timings) < 1.0
    assert ok and max(timings) < 1.0, (c4, tent, p, timings)


def test_criterion_3_betti_table():
    with criterion(3, "Betti table of init(J) for C4 with chord, 6 + 3 = 9", 10.0) as st:
        J = binomial_edge_ideal(named_graph("c4_chord"))
        gb = buchberger(J.generators, lex_from_vertex_order((1, 2, 3, 4), J.ring))
        table = betti_table_squarefree(initial_ideal(gb))
        expected = {(0, 0): 1, (1, 2): 5, (2, 3): 4, (2, 4): 3, (3, 5): 4, (4, 6): 1}
        summands = c4_betti_summands()
        total = c4_betti_assembly()
        st["ok"] = table == expected and summands == (6, 3) and total == 9
    assert st["ok"], (table.entries, summands, total)


def test_criterion_4_colon_formulas():
    failures = []
    with criterion(4, "colon formulas (claw, triangle, every edge for n <= 5)", 600.0) as st:
        r4 = bei_ring(4)
        claw = colon_formula_report(named_graph("claw"), (1, 4))
        claw_ok = (
            claw["induced_ok"]
            and claw["all_cycles_ok"]
            and ideal_equal(claw["colon"].elements, [f_ij(1, 2, r4), f_ij(1, 3, r4), f_ij(2, 3, r4)])
        )
        tri = [colon_formula_report(complete(3), e) for e in complete(3).edges()]
        tri_ok = all(r["induced_ok"] and r["simplicial_ok"] is True for r in tri)
        count = 0
        for g in _connected(5):
            for e in g.edges():
                count += 1
                if not verify_colon_formula(g, e):
                    failures.append((g.edges(), e))
        st["ok"] = claw_ok and tri_ok and not failures and count == 161
    assert st["ok"], (claw_ok, tri_ok, failures[:5], count)


def test_criterion_5_tent_suite():
    with criterion(5, "tent minus vertex membership suite", 5.0) as st:
        res = tent_section4_checks()
        keys = ("memberships", "identity", "non_membership", "path_initial_ideal", "initial_ideal")
        st["ok"] = all(res[k]["ok"] for k in keys) and res["ok"]
    assert st["ok"], res


def test_criterion_6_plucker():
    with criterion(6, "Pluecker identity on 20 random quadruples plus nonzero control", 1.0) as st:
        rnd = random.Random(2024)
        quads = [tuple(rnd.sample(range(1, 13), 4)) for _ in range(20)]
        ok = all(plucker_check(*q) for q in quads)
        control = plucker_combination(*quads[0], signs=(1, 1, 1))
        st["ok"] = ok and not control.is_zero()
    assert st["ok"]


def _equivalences(g):
    """Mismatch labels for the four equivalence suites on one graph."""
    bad = []
    peo = find_perfect_elimination_order(g)
    cyc = long_induced_cycle(g)
    chordal = peo is not None
    if chordal != (cyc is None) or (chordal and not verify_perfect_elimination_order(g, peo.sequence)):
        bad.append("a")
    greedy = _simple_elimination(g) is not None
    seo = find_strong_elimination_order(g)
    tramp_free = chordal and find_trampoline(g, max(3, g.n // 2)) is None
    seo_ok = seo is not None and verify_strong_elimination_order(g, seo.sequence)
    if not (greedy == seo_ok == tramp_free):
        bad.append("b")
    claw_free = has_induced_claw(g) is None
    tent_free = find_named(g, "tent") is None
    peeo = find_claw_avoiding_peeo(g)
    peeo_ok = peeo is not None and verify_claw_avoiding_peeo(g, peeo.sequence)
    if not ((chordal and claw_free and tent_free) == (greedy and claw_free) == peeo_ok):
        bad.append("c")
    forbidden = closed_by_forbidden(g)
    co = find_closed_order(g)
    co_ok = co is not None and verify_closed_order(g, co.sequence)
    four = chordal and claw_free and tent_free and find_named(g, "net") is None
    if not (forbidden == four == co_ok):
        bad.append("d")
    return bad


def test_criterion_7_equivalence_suites():
    mismatches = []
    with criterion(7, "equivalence suites (a)-(d) on all connected graphs n <= 7", 600.0) as st:
        graphs = _connected(7)
        for g in graphs:
            bad = _equivalences(g)
            if bad:
                mismatches.append((g.edges(), bad))
        st["ok"] = not mismatches and len(graphs) == 1 + 1 + 2 + 6 + 21 + 112 + 853
    assert st["ok"], mismatches[:5]


def test_criterion_8_quadratic_groebner_bases():
    mismatches = []
    with criterion(8, "quadratic lex GB exists iff closed (n <= 5); net and C4-with-chord", 1800.0) as st:
        for g in _connected(5):
            quad = any(ok for _, ok in quadratic_lex_orders(g))
            if quad != (find_closed_order(g) is not None):
                mismatches.append(g.edges())
            quadratic_gb_exists(g)  # raises on any disagreement
        net_results = quadratic_lex_orders(named_graph("net"))
        net_ok = len(net_results) == 720 and not any(ok for _, ok in net_results)
        c4_ok = has_quadratic_lex_gb(named_graph("c4_chord"), (1, 2, 3, 4))
        st["ok"] = not mismatches and net_ok and c4_ok
    assert st["ok"], (mismatches, net_ok, c4_ok)


def test_criterion_9_blocks_and_clique_number():
    mismatches = []
    with criterion(9, "small clique number: closed blocks characterization; thick net", 300.0) as st:
        for g in _connected(7):
            a = _simple_elimination(g) is not None and has_induced_claw(g) is None
            c = has_induced_claw(g) is None and _blocks_closed(g)
            if c and not a:
                mismatches.append(("c=>a", g.edges()))
            if clique_number(g) <= 3 and a != c:
                mismatches.append(("omega<=3", g.edges()))
        t = named_graph("thick_net")
        thick_a = _simple_elimination(t) is not None and has_induced_claw(t) is None
        thick_c = has_induced_claw(t) is None and _blocks_closed(t)
        thick_ok = thick_a and not thick_c and clique_number(t) >= 4 and len(blocks(t)) == 1
        st["ok"] = not mismatches and thick_ok
    assert st["ok"], (mismatches[:5], thick_ok)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    for line in ACCEPTANCE_LINES:
        print(line)
    sys.exit(1 if failed else 0)
