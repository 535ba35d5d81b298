import random

import pytest

from conftest import atlas_connected
from koszul_bei.bei import (
    binomial_edge_ideal,
    colon_formula_report,
    cycle_monomials,
    cycles_through,
    f_ij,
    graph_G_e,
    has_quadratic_lex_gb,
    lex_from_vertex_order,
    plucker_check,
    plucker_combination,
    quadratic_gb_exists,
    quadratic_lex_orders,
    tent_section4_checks,
    verify_colon_formula,
)
from koszul_bei.errors import CostGuardError
from koszul_bei.graph import complete, cycle, named_graph, path
from koszul_bei.orders import find_closed_order
from koszul_bei.poly import bei_ring, ideal_equal, initial_ideal


def _init(g, order):
    J = binomial_edge_ideal(g)
    return [str(m) for m in initial_ideal(J.gb(order))]


def test_generators_and_antisymmetry():
    r = bei_ring(3)
    assert str(f_ij(1, 2)) == "x1*y2 - x2*y1"
    assert f_ij(2, 1, r) == -f_ij(1, 2, r)
    with pytest.raises(ValueError):
        f_ij(2, 2)
    J = binomial_edge_ideal(path(3))
    assert [str(g) for g in J.generators] == ["x1*y2 - x2*y1", "x2*y3 - x3*y2"]


def test_lex_order_from_vertices():
    o = lex_from_vertex_order((2, 1, 3))
    assert [str(v) for v in o.priority] == ["x2", "x1", "x3", "y2", "y1", "y3"]
    assert str(lex_from_vertex_order((1, 2), bei_ring(2, aux=True)).priority[0]) == "t"
    with pytest.raises(ValueError):
        lex_from_vertex_order((1, 1, 2))


def test_c4_chord_initial_ideal():
    assert _init(named_graph("c4_chord"), (1, 2, 3, 4)) == ["x1*y2", "x1*y3", "x2*y3", "x2*y4", "x3*y4"]


def test_closed_orders_give_quadratic_bases():
    for g in atlas_connected(6):
        co = find_closed_order(g)
        if co is not None:
            assert has_quadratic_lex_gb(g, co.sequence)


def test_quadratic_gb_existence_small():
    for g in atlas_connected(4):
        assert quadratic_gb_exists(g, exhaustive=True) == (find_closed_order(g) is not None)
    assert not quadratic_gb_exists(named_graph("claw"))


def test_order_search_guard():
    with pytest.raises(CostGuardError):
        quadratic_lex_orders(complete(8))
    with pytest.raises(CostGuardError):
        quadratic_gb_exists(path(8))


def test_graph_G_e():
    claw = named_graph("claw")
    ge = graph_G_e(claw, (1, 4))
    assert ge.edges() == [(1, 2), (1, 3), (2, 3)]
    tri = graph_G_e(complete(3), (1, 2))
    assert tri.edges() == [(1, 3), (2, 3)]


def test_cycles_through_an_edge():
    g = named_graph("c4_chord")
    assert cycles_through(g, (1, 2)) == [[1, 3, 2]]
    assert sorted(cycles_through(g, (1, 2), induced=False)) == [[1, 3, 2], [1, 3, 4, 2]]
    assert cycles_through(g, (2, 3)) == [[2, 1, 3], [2, 4, 3]]
    assert cycles_through(path(3), (1, 2)) == []
    with pytest.raises(ValueError):
        cycles_through(g, (1, 4))


def test_cycle_monomials_of_c4():
    r = bei_ring(4)
    monos = sorted(str(m) for m in cycle_monomials(cycle(4), (1, 4), ring=r))
    # path 1 - 2 - 3 - 4: interior 2, 3; t = 0, 1, 2
    assert monos == sorted(["x2*x3", "x3*y2", "y2*y3"])


def test_claw_colon():
    rep = colon_formula_report(named_graph("claw"), (1, 4))
    r = bei_ring(4)
    assert ideal_equal(rep["colon"].elements, [f_ij(1, 2, r), f_ij(1, 3, r), f_ij(2, 3, r)])
    assert rep["induced_ok"] and rep["all_cycles_ok"]
    assert rep["simplicial_ok"] is None  # 1-4 is not claw-avoiding


def test_triangle_and_c4_chord_colons():
    rep = colon_formula_report(complete(3), (1, 2))
    assert rep["induced_ok"] and rep["simplicial_ok"] is True
    rep = colon_formula_report(named_graph("c4_chord"), (2, 3))
    assert sorted(map(str, rep["colon"].elements)) == ["x1", "x4", "y1", "y4"]
    assert rep["induced_ok"] and rep["all_cycles_ok"]


def test_colon_formula_on_small_graphs():
    for g in atlas_connected(4, n_min=2):
        for e in g.edges():
            assert verify_colon_formula(g, e), (g, e)


def test_colon_guard():
    with pytest.raises(CostGuardError):
        colon_formula_report(complete(7), (1, 2))


def test_plucker():
    rnd = random.Random(20)
    for _ in range(10):
        q = rnd.sample(range(1, 9), 4)
        assert plucker_check(*q)
    assert not plucker_combination(1, 2, 3, 4, signs=(1, 1, 1)).is_zero()
    with pytest.raises(ValueError):
        plucker_check(1, 1, 2, 3)


def test_tent_suite():
    res = tent_section4_checks()
    assert res["ok"]
    assert set(res) == {"memberships", "identity", "non_membership", "path_initial_ideal", "initial_ideal", "ok"}


def test_net_identity_order_basis_is_not_quadratic():
    J = binomial_edge_ideal(named_graph("net"))
    gb = J.gb((1, 2, 3, 4, 5, 6))
    assert gb.max_degree() == 4 and len(gb) == 12


def test_ideal_json():
    d = binomial_edge_ideal(named_graph("c4_chord")).to_json((1, 2, 3, 4))
    assert list(d) == ["generators", "order", "gb", "initial_ideal", "max_degree"]
    assert d["max_degree"] == 2 and len(d["gb"]) == 5


def test_tent_simplicial_edges_and_all_cycle_variant_n6():
    from koszul_bei.orders import is_simplicial_edge

    for name in ("tent", "net"):
        g = named_graph(name)
        for e in g.edges():
            rep = colon_formula_report(g, e)
            assert rep["induced_ok"] and rep["all_cycles_ok"]
            if name == "tent" and is_simplicial_edge(g, e):
                assert rep["simplicial_ok"] is not False
