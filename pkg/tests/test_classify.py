import json

import pytest

from koszul_bei.classify import FLAG_NAMES, blocks_all_closed, classify
from koszul_bei.graph import Graph, complete, cycle, named_graph, path


def test_named_graph_flags():
    net = classify(named_graph("net"))
    assert net.koszul and not net.closed and not net.net_free and net.blocks_all_closed
    tent = classify(named_graph("tent"))
    assert not tent.koszul and not tent.tent_free and tent.chordal and not tent.strongly_chordal
    claw = classify(named_graph("claw"))
    assert not claw.claw_free and not claw.koszul and claw.strongly_chordal
    for k in range(4, 9):
        r = classify(cycle(k))
        assert not r.chordal and not r.koszul
        assert r.witnesses["chordal"].pattern == f"cycle{k}"


def test_thick_net_report():
    r = classify(named_graph("thick_net"))
    assert r.strongly_chordal and r.claw_free and r.koszul
    assert not r.closed and not r.blocks_all_closed
    assert r.blocks == [frozenset(range(1, 10))]
    assert r.clique_number == 6
    assert len(r.edge_order.sequence) == 21


def test_closed_graphs_are_koszul():
    for g in (path(5), complete(5), named_graph("c4_chord"), Graph(1)):
        r = classify(g)
        assert r.closed and r.koszul and all(r.flags.values())


def test_json_schema_and_stability():
    r = classify(named_graph("net"))
    d = r.to_json()
    assert list(d) == ["flags", "certificates", "clique_number", "blocks"]
    assert list(d["flags"]) == list(FLAG_NAMES)
    assert set(d["certificates"]) == {"perfect_order", "strong_order", "closed_order", "edge_order", "witnesses"}
    assert d["certificates"]["closed_order"] is None
    assert d["certificates"]["witnesses"]["closed"]["pattern"] == "net"
    s1 = json.dumps(d)
    s2 = json.dumps(classify(named_graph("net")).to_json())
    assert s1 == s2


def test_blocks_all_closed_needs_connected_graph():
    with pytest.raises(ValueError):
        blocks_all_closed(Graph(2))
    # two triangles sharing a vertex: both blocks closed
    bowtie = Graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    assert blocks_all_closed(bowtie)
    assert not blocks_all_closed(named_graph("tent"))


def test_chain_of_classes(connected7):
    for g in connected7:
        r = classify(g)
        assert not r.closed or r.koszul
        assert not r.koszul or r.strongly_chordal
        assert not r.strongly_chordal or r.chordal
        for flag, w in r.witnesses.items():
            assert not r.flags[flag]
