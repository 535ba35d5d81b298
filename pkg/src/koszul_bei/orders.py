"""Perfect, strong and closed vertex orders; claw-avoiding perfect edge elimination orders."""

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ConsistencyError
from .forbidden import find_named, has_induced_claw, long_induced_cycle
from .graph import delete_edge, edge, is_clique, maximal_cliques

EXHAUSTIVE_CLOSED_LIMIT = 10


@dataclass(frozen=True)
class VertexOrder:
    kind: str  # "perfect", "strong" or "closed"
    sequence: tuple

    def to_json(self):
        return list(self.sequence)


@dataclass(frozen=True)
class EdgeOrder:
    sequence: tuple

    def to_json(self):
        return [list(e) for e in self.sequence]


def _check_permutation(g, order):
    if sorted(order) != list(g.vertices):
        raise ValueError(f"{list(order)} is not a permutation of 1..{g.n}")


def _closed_nbhd(g, v, alive):
    return (g.adj[v - 1] & alive) | {v}


def _simplicial_in(g, v, alive):
    nb = g.adj[v - 1] & alive
    return all(b in g.adj[a - 1] for a, b in combinations(nb, 2))


def _simple_in(g, v, alive):
    hoods = {frozenset(_closed_nbhd(g, w, alive)) for w in _closed_nbhd(g, v, alive)}
    chain = sorted(hoods, key=len)
    return all(a <= b for a, b in zip(chain, chain[1:]))


def is_simplicial_vertex(g, v):
    return _simplicial_in(g, v, frozenset(g.vertices))


def is_simple_vertex(g, v):
    return _simple_in(g, v, frozenset(g.vertices))


# --- perfect elimination -------------------------------------------------


def find_perfect_elimination_order(g):
    """Greedy simplicial elimination, smallest label first; None certifies non-chordality."""
    alive = set(g.vertices)
    seq = []
    while alive:
        v = next((v for v in sorted(alive) if _simplicial_in(g, v, alive)), None)
        if v is None:
            return None
        seq.append(v)
        alive.discard(v)
    return VertexOrder("perfect", tuple(seq))


def is_chordal(g):
    return find_perfect_elimination_order(g) is not None


def verify_perfect_elimination_order(g, order):
    order = tuple(order)
    _check_permutation(g, order)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v - 1] if pos[w] > pos[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


# --- strong elimination --------------------------------------------------


def _simple_elimination(g):
    """Greedy simple-vertex elimination (smallest label first), or None if stuck."""
    alive = set(g.vertices)
    seq = []
    while alive:
        v = next((v for v in sorted(alive) if _simple_in(g, v, alive)), None)
        if v is None:
            return None
        seq.append(v)
        alive.discard(v)
    return seq


def _strong_order_search(g):
    """Build a strong elimination order by simple-vertex elimination with precedence.

    Eliminating v from the current graph H forces every pair of neighbours
    w1, w2 of v with N_H[w1] strictly inside N_H[w2] to be eliminated in
    that order. Candidates are tried smallest label first, with backtracking
    memoised on (remaining vertices, live precedences).
    """
    failed = set()

    def search(alive, prec):
        if not alive:
            return []
        key = (alive, prec)
        if key in failed:
            return None
        blocked = {b for a, b in prec}
        for v in sorted(alive):
            if v in blocked or not _simple_in(g, v, alive):
                continue
            nb = g.adj[v - 1] & alive
            hood = {w: _closed_nbhd(g, w, alive) for w in nb}
            extra = {(a, b) for a in nb for b in nb if a != b and hood[a] < hood[b]}
            rest = alive - {v}
            nxt = frozenset(p for p in prec | extra if p[0] in rest and p[1] in rest)
            tail = search(rest, nxt)
            if tail is not None:
                return [v] + tail
        failed.add(key)
        return None

    return search(frozenset(g.vertices), frozenset())


def find_strong_elimination_order(g):
    """Strong elimination order, or None when the graph is not strongly chordal.

    Greedy simple-vertex elimination decides the question (None certifies an
    induced subgraph with no simple vertex); the certificate itself comes from
    a precedence-respecting search, since a greedy simple elimination order
    need not satisfy the strong quadruple condition.
    """
    if _simple_elimination(g) is None:
        return None
    seq = _strong_order_search(g)
    if seq is None or not verify_strong_elimination_order(g, seq):
        raise ConsistencyError("graph has a simple elimination order but no strong order was built", graph=g)
    return VertexOrder("strong", tuple(seq))


def is_strongly_chordal(g):
    return _simple_elimination(g) is not None


def verify_strong_elimination_order(g, order):
    """PEO plus: v_i~v_k, v_k~v_j, v_i~v_l with i < k < l and i < j imply v_j~v_l."""
    order = tuple(order)
    if not verify_perfect_elimination_order(g, order):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for vi in order:
        i = pos[vi]
        later = sorted((w for w in g.adj[vi - 1] if pos[w] > i), key=pos.get)
        for a, vk in enumerate(later):
            for vl in later[a + 1:]:
                for vj in g.adj[vk - 1]:
                    if vj != vl and pos[vj] > i and not g.has_edge(vj, vl):
                        return False
    return True


# --- closed orders -------------------------------------------------------


def _closed_a(g, order, pos):
    for v in order:
        nb = g.adj[v - 1]
        after = [w for w in nb if pos[w] > pos[v]]
        before = [w for w in nb if pos[w] < pos[v]]
        for side in (after, before):
            for a, b in combinations(side, 2):
                if not g.has_edge(a, b):
                    return False
    return True


def _closed_b(g, order, pos):
    for v in order:
        up = {w for w in g.adj[v - 1] if pos[w] >= pos[v]} | {v}
        down = {w for w in g.adj[v - 1] if pos[w] <= pos[v]} | {v}
        if not (is_clique(g, up) and is_clique(g, down)):
            return False
    return True


def _closed_c(g, order):
    # forward closed neighbourhood is a clique of consecutive vertices starting at v,
    # checked on the order restricted to each connected component
    for comp in g.components():
        members = set(comp)
        sub = [v for v in order if v in members]
        cpos = {v: i for i, v in enumerate(sub)}
        for i, v in enumerate(sub):
            up = {w for w in g.adj[v - 1] if cpos[w] > i} | {v}
            if not is_clique(g, up) or up != set(sub[i:i + len(up)]):
                return False
    return True


def verify_closed_order(g, order):
    """Check the three equivalent forms of closedness and return their common verdict."""
    order = tuple(order)
    _check_permutation(g, order)
    pos = {v: i for i, v in enumerate(order)}
    a = _closed_a(g, order, pos)
    b = _closed_b(g, order, pos)
    c = _closed_c(g, order)
    if not a == b == c:
        raise ConsistencyError("closed-order forms disagree", order=order, a=a, b=b, c=c, graph=g)
    return a


def _lex_bfs(g, comp, previous=None):
    """LexBFS over a component; with ``previous`` it is LexBFS+ (ties go to the latest vertex there)."""
    rank = {v: i for i, v in enumerate(previous)} if previous is not None else None
    label = {v: [] for v in comp}
    left = set(comp)
    out = []
    step = len(comp)
    while left:
        best = max(label[v] for v in left)
        ties = [v for v in left if label[v] == best]
        v = max(ties, key=rank.get) if rank is not None else min(ties)
        out.append(v)
        left.discard(v)
        for w in g.adj[v - 1]:
            if w in left:
                label[w].append(step)
        step -= 1
    return out


def _is_proper_interval_sequence(g, seq):
    pos = {v: i for i, v in enumerate(seq)}
    for u in seq:
        for w in g.adj[u - 1]:
            if pos[w] <= pos[u]:
                continue
            for v in seq[pos[u] + 1:pos[w]]:
                if not (g.has_edge(u, v) and g.has_edge(v, w)):
                    return False
    return True


def _exhaustive_closed(g, comp):
    """Backtracking over proper interval orders of a connected component."""
    comp = sorted(comp)
    size = len(comp)
    seq = []
    used = set()

    def ok_to_append(w):
        k = len(seq)
        for i, u in enumerate(seq):
            if g.has_edge(u, w):
                for v in seq[i + 1:k]:
                    if not (g.has_edge(u, v) and g.has_edge(v, w)):
                        return False
        return True

    def extend():
        if len(seq) == size:
            return True
        cands = comp if not seq else sorted(g.adj[seq[-1] - 1])
        for w in cands:
            if w in used or not ok_to_append(w):
                continue
            seq.append(w)
            used.add(w)
            if extend():
                return True
            seq.pop()
            used.discard(w)
        return False

    return list(seq) if extend() else None


def _closed_component_order(g, comp):
    if len(comp) <= 2:
        return list(comp)
    sweep = _lex_bfs(g, comp)
    candidates = []
    for _ in range(2):
        sweep = _lex_bfs(g, comp, sweep)
        candidates.extend([sweep, sweep[::-1]])
    for cand in candidates:
        if _is_proper_interval_sequence(g, cand):
            return cand
    if len(comp) <= EXHAUSTIVE_CLOSED_LIMIT:
        return _exhaustive_closed(g, comp)
    return None


def closed_by_forbidden(g):
    """Closedness via forbidden induced subgraphs: chordal, claw-, net- and tent-free."""
    return (
        long_induced_cycle(g) is None
        and has_induced_claw(g) is None
        and find_named(g, "net") is None
        and find_named(g, "tent") is None
    )


def find_closed_order(g):
    """A closed order, or None; cross-checked against the forbidden-subgraph characterization."""
    seq = []
    found = True
    for comp in g.components():
        part = _closed_component_order(g, comp)
        if part is None:
            found = False
            break
        seq.extend(part)
    expected = closed_by_forbidden(g)
    if found:
        if not verify_closed_order(g, seq):
            raise ConsistencyError("constructed closed order fails verification", graph=g, order=seq)
        if not expected:
            raise ConsistencyError("closed order found for a graph with a forbidden subgraph", graph=g)
        return VertexOrder("closed", tuple(seq))
    if expected:
        raise ConsistencyError("no closed order found for a graph without forbidden subgraphs", graph=g)
    return None


def closed_order_exhaustive(g):
    """Brute-force search over all n! orders (test oracle, tiny graphs only)."""
    for perm in permutations(g.vertices):
        if verify_closed_order(g, perm):
            return perm
    return None


# --- simplicial edges ----------------------------------------------------


def _require_edge(g, e):
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {u}-{v} is not in the graph")
    return u, v


def maximal_cliques_containing(g, e):
    u, v = _require_edge(g, e)
    return [c for c in maximal_cliques(g) if u in c and v in c]


def is_simplicial_edge(g, e):
    """Edge in exactly one maximal clique whose deletion leaves a chordal graph.

    Applied literally: an edge lying in no triangle is its own unique maximal clique.
    """
    if len(maximal_cliques_containing(g, e)) != 1:
        return False
    return is_chordal(delete_edge(g, e))


def is_claw_avoiding(g, e):
    """True iff no induced claw of g contains both endpoints of e."""
    u, v = _require_edge(g, e)
    for center in (u, v):
        leaf = v if center == u else u
        others = [w for w in g.adj[center - 1] if w != leaf and not g.has_edge(w, leaf)]
        for a, b in combinations(others, 2):
            if not g.has_edge(a, b):
                return False
    return True


def find_claw_avoiding_peeo(g):
    """Claw-avoiding perfect edge elimination order via repeated simplicial-edge deletion.

    Each step takes the first non-isolated vertex v of a strong elimination
    order and pairs it with the neighbour j whose closed neighbourhood is
    largest (smallest label on ties). None means the graph is not strongly
    chordal and claw-free.
    """
    if has_induced_claw(g) is not None:
        return None
    cur = g
    seq = []
    while cur.num_edges:
        seo = find_strong_elimination_order(cur)
        if seo is None:
            return None
        v = next(w for w in seo.sequence if cur.adj[w - 1])
        j = max(sorted(cur.adj[v - 1]), key=lambda w: (len(cur.adj[w - 1]), -w))
        e = edge(v, j)
        if not (is_simplicial_edge(cur, e) and is_claw_avoiding(cur, e)):
            return None
        cur = delete_edge(cur, e)
        if has_induced_claw(cur) is not None:
            raise ConsistencyError("edge deletion created an induced claw", graph=g, prefix=seq + [e])
        seq.append(e)
    return EdgeOrder(tuple(seq))


def verify_claw_avoiding_peeo(g, edge_order):
    """Sequential check; the graph and every deletion stage must be chordal."""
    seq = [edge(*e) for e in edge_order]
    if sorted(seq) != g.edges() or len(set(seq)) != len(seq):
        raise ValueError("edge order is not a permutation of E(G)")
    cur = g
    if not is_chordal(cur):
        return False
    for e in seq:
        if not (is_simplicial_edge(cur, e) and is_claw_avoiding(cur, e)):
            return False
        cur = delete_edge(cur, e)
    return True


def has_claw_avoiding_peeo_exhaustive(g):
    """Memoised search over all deletion sequences (oracle; small graphs only)."""
    if not is_chordal(g):
        return False
    memo = {}

    def good(cur):
        key = tuple(cur.edges())
        if key in memo:
            return memo[key]
        if not key:
            return True
        res = False
        for e in key:
            if is_simplicial_edge(cur, e) and is_claw_avoiding(cur, e) and good(delete_edge(cur, e)):
                res = True
                break
        memo[key] = res
        return res

    return good(g)


__all__ = [
    "EdgeOrder",
    "VertexOrder",
    "closed_by_forbidden",
    "closed_order_exhaustive",
    "find_claw_avoiding_peeo",
    "find_closed_order",
    "find_perfect_elimination_order",
    "find_strong_elimination_order",
    "has_claw_avoiding_peeo_exhaustive",
    "is_chordal",
    "is_claw_avoiding",
    "is_simple_vertex",
    "is_simplicial_edge",
    "is_simplicial_vertex",
    "is_strongly_chordal",
    "maximal_cliques_containing",
    "verify_claw_avoiding_peeo",
    "verify_closed_order",
    "verify_perfect_elimination_order",
    "verify_strong_elimination_order",
]
