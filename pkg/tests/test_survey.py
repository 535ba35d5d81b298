import csv
import io
import json
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import atlas_connected, graphs, to_nx
from koszul_bei.errors import CostGuardError
from koszul_bei.graph import Graph, encode_graph6, named_graph
from koszul_bei.survey import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected_graphs,
    read_graph6_lines,
    run_survey,
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", sorted(CONNECTED_COUNTS))
def test_counts_match_atlas(n):
    ours = list(enumerate_connected_graphs(n))
    assert len(ours) == CONNECTED_COUNTS[n]
    assert all(g.n == n and g.is_connected() for g in ours)
    atlas = atlas_connected(n, n_min=n)
    # every atlas class is hit exactly once
    certs = {canonical_form(g)[0] for g in ours}
    assert len(certs) == len(ours)
    assert {canonical_form(g)[0] for g in atlas} == certs


def test_count_n8():
    assert sum(1 for _ in enumerate_connected_graphs(8)) == 11117


def test_enumeration_guard():
    with pytest.raises(CostGuardError):
        enumerate_connected_graphs(9)
    with pytest.raises(ValueError):
        enumerate_connected_graphs(0)


def test_brute_force_oracle_n5():
    # all labelled graphs on 5 vertices, grouped by networkx isomorphism
    pairs = list(combinations(range(1, 6), 2))
    reps = []
    for mask in range(1 << len(pairs)):
        g = Graph(5, [p for k, p in enumerate(pairs) if mask >> k & 1])
        if not g.is_connected():
            continue
        h = to_nx(g)
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    assert len(reps) == 21


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.randoms())
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g)[0] == canonical_form(h)[0]
    assert canonical_graph(g) == canonical_graph(h)
    assert nx.is_isomorphic(to_nx(canonical_graph(g)), to_nx(g))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=5, max_n=7), graphs(min_n=5, max_n=7))
def test_canonical_form_separates_classes(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_survey_to_six_finds_the_net_and_nothing_smaller():
    r = run_survey(6)
    assert r.ok
    found = r.koszul_not_closed
    assert [x["n"] for x in found] == [6]
    net = read_graph6_lines(found[0]["graph6"])[0]
    assert are_isomorphic(net, named_graph("net"))
    assert r.counts[6]["total"] == 112 and r.counts[6]["koszul_not_closed"] == 1


def test_survey_with_algebra_and_injected_graphs():
    extra = [("ingested:1", named_graph("net")), ("ingested:2", named_graph("thick_net"))]
    r = run_survey(4, enable_algebraic=True, extra_graphs=extra)
    assert r.ok
    sources = [x["source"] for x in r.koszul_not_closed]
    assert sources == ["ingested:1", "ingested:2", "named:net"]
    rows = list(csv.DictReader(io.StringIO(r.to_csv())))
    assert len(rows) == 1 + 1 + 2 + 6 + 2 + 5
    assert rows[0]["graph6"] == "@"
    named = {row["source"]: row for row in rows if row["source"].startswith("named:")}
    assert named["named:net"]["quadratic_gb"] == "0"
    assert named["named:c4_chord"]["quadratic_gb"] == "1"
    assert all(row["quadratic_gb"] == "" for row in rows if row["source"].startswith("ingested"))


def test_survey_json_is_deterministic():
    a = json.dumps(run_survey(5).to_json())
    b = json.dumps(run_survey(5).to_json())
    assert a == b
    d = json.loads(a)
    assert d["ok"] and d["failures"] == []
    assert d["counts"]["5"] == {
        "chordal": 15, "claw_free": 14, "closed": 10, "koszul": 10,
        "koszul_not_closed": 0, "strongly_chordal": 15, "total": 21,
    }


def test_survey_chain_counts_n7():
    r = run_survey(7)
    c = r.counts[7]
    assert r.ok
    assert (c["total"], c["chordal"], c["strongly_chordal"], c["koszul"], c["closed"]) == (853, 272, 263, 80, 76)
    assert c["koszul_not_closed"] == 4


def test_graph6_ingestion():
    text = "\n".join(encode_graph6(g) for g in (named_graph("claw"), named_graph("tent"))) + "\n\n"
    gs = read_graph6_lines(text)
    assert gs == [named_graph("claw"), named_graph("tent")]
