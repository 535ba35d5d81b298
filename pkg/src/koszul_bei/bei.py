"""Binomial edge ideals J_G and the algebraic checks built on them."""

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ConsistencyError, CostGuardError
from .graph import Graph, delete_edge, delete_vertex, edge, named_graph
from .orders import (
    find_closed_order,
    is_chordal,
    is_claw_avoiding,
    is_simplicial_edge,
    maximal_cliques_containing,
)
from .poly import (
    MonomialOrder,
    VarId,
    X,
    Y,
    bei_ring,
    buchberger,
    colon_by_element,
    ideal_equal,
    initial_ideal,
    normal_form,
)

MAX_EXHAUSTIVE_ORDERS_N = 7
MAX_COLON_N = 6


def x(ring, i):
    return ring.var(VarId(X, i))


def y(ring, i):
    return ring.var(VarId(Y, i))


def f_ij(i, j, ring=None):
    """The 2x2 minor x_i*y_j - x_j*y_i (antisymmetric in i, j)."""
    if i == j:
        raise ValueError("f_ij needs distinct indices")
    ring = ring or bei_ring(max(i, j))
    return x(ring, i) * y(ring, j) - x(ring, j) * y(ring, i)


@dataclass(frozen=True)
class BinomialEdgeIdeal:
    graph: Graph
    ring: object
    generators: tuple

    def gb(self, vertex_order=None):
        order = lex_from_vertex_order(vertex_order or tuple(self.graph.vertices), self.ring)
        return buchberger(self.generators, order)

    def to_json(self, vertex_order=None):
        gb = self.gb(vertex_order)
        out = {"generators": [str(g) for g in self.generators]}
        out.update(gb.to_json())
        return out


def binomial_edge_ideal(g, ring=None):
    ring = ring or bei_ring(g.n)
    return BinomialEdgeIdeal(g, ring, tuple(f_ij(i, j, ring) for i, j in g.edges()))


def lex_from_vertex_order(order, ring=None):
    """Lex with x_{s1} > ... > x_{sn} > y_{s1} > ... > y_{sn} (t first if the ring has it)."""
    order = tuple(order)
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"{list(order)} is not a permutation of 1..{n}")
    ring = ring or bei_ring(n)
    priority = [VarId(X, v) for v in order] + [VarId(Y, v) for v in order]
    if VarId("t", 0) in ring.index:
        priority.insert(0, VarId("t", 0))
    return MonomialOrder(ring, priority)


# --- quadratic Groebner bases ---------------------------------------------


def has_quadratic_lex_gb(g, vertex_order):
    J = binomial_edge_ideal(g)
    return J.gb(vertex_order).max_degree() <= 2


def quadratic_lex_orders(g, max_n=MAX_EXHAUSTIVE_ORDERS_N):
    """Per-order results of the quadratic-GB test over all n! vertex orders."""
    if g.n > max_n:
        raise CostGuardError(f"exhaustive order search refused for n={g.n} > {max_n}; use classify()")
    return [(perm, has_quadratic_lex_gb(g, perm)) for perm in permutations(g.vertices)]


def quadratic_gb_exists(g, max_n=MAX_EXHAUSTIVE_ORDERS_N, exhaustive=False):
    """Does some vertex order give a quadratic reduced lex basis? Cross-checked against closedness.

    With ``exhaustive=False`` the search stops at the first quadratic order.
    """
    if g.n > max_n:
        raise CostGuardError(f"exhaustive order search refused for n={g.n} > {max_n}; use classify()")
    if exhaustive:
        found = any(ok for _, ok in quadratic_lex_orders(g, max_n))
    else:
        found = any(has_quadratic_lex_gb(g, perm) for perm in permutations(g.vertices))
    closed = find_closed_order(g) is not None
    if found != closed:
        raise ConsistencyError("quadratic lex GB existence disagrees with closedness", graph=g, quadratic=found, closed=closed)
    return found


# --- colon ideals ---------------------------------------------------------


def graph_G_e(g, e):
    """G \\ e with the neighbourhoods (in G \\ e) of both ends of e completed to cliques."""
    i, j = edge(*e)
    h = delete_edge(g, (i, j))
    extra = set()
    for end in (i, j):
        for a, b in combinations(sorted(h.neighbors(end)), 2):
            extra.add((a, b))
    return Graph(g.n, set(h.edges()) | extra)


def _paths_between(h, start, stop):
    """All simple paths start -> stop in h, as vertex lists."""
    out = []
    path = [start]
    seen = {start}

    def dfs(u):
        for w in sorted(h.neighbors(u)):
            if w == stop:
                out.append(path + [w])
            elif w not in seen:
                seen.add(w)
                path.append(w)
                dfs(w)
                path.pop()
                seen.discard(w)

    dfs(start)
    return out


def _is_chordless(g, cyc):
    k = len(cyc)
    for a in range(k):
        for b in range(a + 2, k):
            if (a, b) == (0, k - 1):
                continue
            if g.has_edge(cyc[a], cyc[b]):
                return False
    return True


def cycles_through(g, e, induced=True):
    """Cycles of g containing e = {i, j}, as paths i = i_0, ..., i_{s+1} = j with i < j."""
    i, j = edge(*e)
    if not g.has_edge(i, j):
        raise ValueError(f"edge {i}-{j} is not in the graph")
    h = delete_edge(g, (i, j))
    paths = _paths_between(h, i, j)
    if induced:
        paths = [p for p in paths if _is_chordless(g, p)]
    return paths


def cycle_monomials(g, e, induced=True, ring=None):
    """Monomials y_{i_1}..y_{i_t} x_{i_{t+1}}..x_{i_s} for cycles through e, 0 <= t <= s."""
    ring = ring or bei_ring(g.n)
    out = []
    seen = set()
    for p in cycles_through(g, e, induced):
        inner = p[1:-1]
        s = len(inner)
        assert s >= 1, "a cycle in a simple graph has an interior vertex"
        for t in range(s + 1):
            mono = ring.one()
            for v in inner[:t]:
                mono = mono * y(ring, v)
            for v in inner[t:]:
                mono = mono * x(ring, v)
            key = next(iter(mono.terms))
            if key not in seen:
                seen.add(key)
                out.append(mono)
    return out


def colon_formula_report(g, e, max_n=MAX_COLON_N):
    """Compare the computed colon J_{G\\e} : f_e with its closed-form descriptions.

    Keys: ``colon`` (reduced GB), ``induced_ok``, ``all_cycles_ok``, and
    ``simplicial_ok`` (None unless G is chordal and e a claw-avoiding simplicial edge).
    """
    if g.n > max_n:
        raise CostGuardError(f"colon computation refused for n={g.n} > {max_n}")
    i, j = edge(*e)
    ring = bei_ring(g.n)
    fe = f_ij(i, j, ring)
    minus = binomial_edge_ideal(delete_edge(g, (i, j)), ring).generators
    colon = colon_by_element(minus, fe)
    ge = binomial_edge_ideal(graph_G_e(g, (i, j)), ring).generators
    rhs = list(ge) + cycle_monomials(g, (i, j), True, ring)
    rhs_all = list(ge) + cycle_monomials(g, (i, j), False, ring)
    report = {
        "colon": colon,
        "induced_ok": ideal_equal(colon.elements, rhs),
        "all_cycles_ok": ideal_equal(colon.elements, rhs_all),
        "simplicial_ok": None,
    }
    if is_chordal(g) and is_simplicial_edge(g, (i, j)) and is_claw_avoiding(g, (i, j)):
        (clique,) = maximal_cliques_containing(g, (i, j))
        extra = []
        for k in sorted(clique - {i, j}):
            extra += [x(ring, k), y(ring, k)]
        report["simplicial_ok"] = ideal_equal(colon.elements, list(minus) + extra)
    return report


def verify_colon_formula(g, e, max_n=MAX_COLON_N):
    r = colon_formula_report(g, e, max_n)
    return r["induced_ok"] and r["all_cycles_ok"] and r["simplicial_ok"] is not False


# --- fixed identities -----------------------------------------------------


def plucker_combination(i, j, k, l, signs=(1, -1, 1)):
    if len({i, j, k, l}) != 4:
        raise ValueError("Pluecker relation needs four distinct indices")
    ring = bei_ring(max(i, j, k, l))
    a, b, c = signs
    return (
        f_ij(i, j, ring) * f_ij(k, l, ring) * a
        + f_ij(i, k, ring) * f_ij(j, l, ring) * b
        + f_ij(j, k, ring) * f_ij(i, l, ring) * c
    )


def plucker_check(i, j, k, l):
    """f_ij f_kl - f_ik f_jl + f_jk f_il vanishes identically."""
    return plucker_combination(i, j, k, l).is_zero()


def tent_section4_checks():
    """Membership and initial-ideal facts for G = tent minus vertex 6, lex 1 > ... > 5."""
    g, _ = delete_vertex(named_graph("tent_labeled"), 6)
    ring = bei_ring(5)
    J = binomial_edge_ideal(g, ring)
    order = lex_from_vertex_order(range(1, 6), ring)
    gb = buchberger(J.generators, order)
    f = lambda a, b: f_ij(a, b, ring)
    f15 = f(1, 5)
    checks = {}

    checks["memberships"] = {
        "ok": gb.contains(x(ring, 3) * f15) and gb.contains(y(ring, 3) * f15),
        "detail": "x3*f15 and y3*f15 in J_G",
    }
    combo = x(ring, 3) * f15 - x(ring, 1) * f(3, 5) - x(ring, 5) * f(1, 3)
    checks["identity"] = {"ok": combo.is_zero(), "detail": f"x3*f15 - x1*f35 - x5*f13 = {combo}"}

    lin = [x(ring, 2), y(ring, 2), x(ring, 4), y(ring, 4)]
    gb_lin = buchberger(list(J.generators) + lin, order)
    rem = gb_lin.reduce(f15)
    checks["non_membership"] = {"ok": not rem.is_zero(), "detail": f"normal form of f15: {rem}"}

    jp = [f(a, b) for a, b in g.edges() if a in (1, 3, 5) and b in (1, 3, 5)]
    gb_p = buchberger(jp, order)
    init_p = {str(m) for m in initial_ideal(gb_p)}
    nf = normal_form(x(ring, 1) * y(ring, 5), gb_p.elements, order)
    checks["path_initial_ideal"] = {
        "ok": init_p == {"x1*y3", "x3*y5"} and nf == x(ring, 1) * y(ring, 5),
        "detail": f"init(J_P) = {sorted(init_p)}",
    }

    init_g = [str(m) for m in initial_ideal(gb)]
    expected = {"x1*y2", "x1*y3", "x2*y3", "x2*y4", "x3*y4", "x3*y5", "x4*y5"}
    checks["initial_ideal"] = {
        "ok": set(init_g) == expected and len(init_g) == 7,
        "detail": f"init(J_G) = {init_g}",
    }
    checks["ok"] = all(c["ok"] for c in checks.values())
    return checks


__all__ = [
    "BinomialEdgeIdeal",
    "binomial_edge_ideal",
    "colon_formula_report",
    "cycle_monomials",
    "cycles_through",
    "f_ij",
    "graph_G_e",
    "has_quadratic_lex_gb",
    "lex_from_vertex_order",
    "plucker_check",
    "plucker_combination",
    "quadratic_gb_exists",
    "quadratic_lex_orders",
    "tent_section4_checks",
    "verify_colon_formula",
]
