"""Simple undirected graphs on vertices 1..n, input formats and named graphs."""

from itertools import combinations

from .errors import GraphFormatError, LoopError


def edge(u, v):
    """Canonical form of the edge {u, v}: smaller endpoint first."""
    if u == v:
        raise LoopError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertex set {1, ..., n}.

    ``adj[v - 1]`` is the frozenset of neighbours of ``v``.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} has an endpoint outside 1..{n}")
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj):
        """Build from a sequence of neighbour sets (index 0 is vertex 1)."""
        n = len(adj)
        return cls(n, [(u, v) for u in range(1, n + 1) for v in adj[u - 1] if u < v])

    # --- basic queries -------------------------------------------------

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def neighbors(self, v):
        return self.adj[v - 1]

    def closed_neighborhood(self, v):
        return self.adj[v - 1] | {v}

    def degree(self, v):
        return len(self.adj[v - 1])

    def has_edge(self, u, v):
        return v in self.adj[u - 1]

    def edges(self):
        """Sorted list of canonical edges."""
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u - 1]) if u < v]

    @property
    def num_edges(self):
        return sum(len(s) for s in self.adj) // 2

    def is_connected(self):
        if self.n == 0:
            return True
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in self.adj[u - 1]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def components(self):
        """Connected components as sorted tuples, ordered by smallest vertex."""
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u - 1]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return comps

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed ``perm[v - 1]``."""
        return Graph(self.n, [(perm[u - 1], perm[v - 1]) for u, v in self.edges()])

    # --- dunder --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


# --- parsing -------------------------------------------------------------


def parse_edge_list(text):
    """Parse the whitespace edge-list format.

    Lines starting with ``#`` and blank lines are ignored; ``n <count>``
    fixes the vertex count (otherwise the largest label seen is used).
    Duplicate edges are merged.
    """
    n_header = None
    pairs = set()
    max_label = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphFormatError(f"bad header {line!r}", lineno)
            n_header = int(tokens[1])
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise GraphFormatError(f"vertex labels are 1-based, got {line!r}", lineno)
        if u == v:
            raise LoopError(f"loop at vertex {u}", lineno)
        pairs.add(edge(u, v))
        max_label = max(max_label, u, v)
    n = max_label if n_header is None else n_header
    if max_label > n:
        raise GraphFormatError(f"label {max_label} exceeds header n {n}")
    return Graph(n, sorted(pairs))


def _graph6_bits(data, start, count):
    bits = []
    for ch in data[start:]:
        if not 63 <= ch <= 126:
            raise GraphFormatError(f"graph6 byte {ch} outside 63..126")
        val = ch - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if len(bits) < count:
        raise GraphFormatError("graph6 record is truncated")
    return bits


def parse_graph6(data):
    """Decode one graph6 record (bytes or str, optional ``>>graph6<<`` prefix)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise GraphFormatError("empty graph6 record")
    for ch in data:
        if not 63 <= ch <= 126:
            raise GraphFormatError(f"graph6 byte {ch} outside 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        raise GraphFormatError("graph6 records with n > 258047 are not supported")
    count = n * (n - 1) // 2
    bits = _graph6_bits(data, pos, count)
    if len(data) - pos != (count + 5) // 6:
        raise GraphFormatError("graph6 record has the wrong length")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph(n, edges)


def encode_graph6(g):
    """Encode as a graph6 string (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 encoding supports n <= 258047")
    bits = [1 if g.has_edge(i + 1, j + 1) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


# --- named graphs --------------------------------------------------------

THICK_NET_EDGES = [
    (6, 2), (2, 3), (3, 5), (6, 5), (2, 5), (6, 3), (8, 7), (8, 6), (1, 2), (1, 3), (9, 5),
    (9, 4), (7, 6), (2, 7), (3, 7), (4, 7), (6, 4), (2, 4), (3, 4), (4, 5), (5, 7),
]

TENT_LABELED_EDGES = [(2, 3), (3, 4), (2, 4), (1, 2), (1, 3), (5, 4), (3, 5), (2, 6), (4, 6)]

C4_CHORD_EDGES = [(1, 2), (1, 3), (2, 4), (3, 4), (2, 3)]


def trampoline(k):
    """The k-trampoline (k-sun): clique v_1..v_k = 1..k, w_i = k + i adjacent to v_i, v_{i+1}."""
    if k < 3:
        raise ValueError("trampolines need k >= 3")
    edges = list(combinations(range(1, k + 1), 2))
    for i in range(1, k + 1):
        w = k + i
        edges.append((w, i))
        edges.append((w, i % k + 1))
    return Graph(2 * k, edges)


def cycle(k):
    if k < 3:
        raise ValueError("cycles need k >= 3")
    return Graph(k, [(i, i % k + 1) for i in range(1, k + 1)])


def path(k):
    """Path on k vertices 1 - 2 - ... - k."""
    if k < 1:
        raise ValueError("paths need k >= 1")
    return Graph(k, [(i, i + 1) for i in range(1, k)])


def complete(k):
    if k < 1:
        raise ValueError("complete graphs need k >= 1")
    return Graph(k, combinations(range(1, k + 1), 2))


_FIXED = {
    "claw": lambda: Graph(4, [(1, 2), (1, 3), (1, 4)]),
    "tent": lambda: trampoline(3),
    "net": lambda: Graph(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)]),
    "tent_labeled": lambda: Graph(6, TENT_LABELED_EDGES),
    "c4_chord": lambda: Graph(4, C4_CHORD_EDGES),
    "thick_net": lambda: Graph(9, THICK_NET_EDGES),
}

_PARAMETRIC = {"trampoline": trampoline, "cycle": cycle, "path": path, "complete": complete}

NAMED_GRAPHS = tuple(sorted(_FIXED) + sorted(_PARAMETRIC))


def named_graph(name, param=None):
    """Construct one of the named graphs; parametric families need ``param``."""
    if name in _FIXED:
        if param is not None:
            raise ValueError(f"{name} takes no parameter")
        return _FIXED[name]()
    if name in _PARAMETRIC:
        if param is None:
            raise ValueError(f"{name} needs a size parameter")
        return _PARAMETRIC[name](int(param))
    raise ValueError(f"unknown graph name {name!r}; known: {', '.join(NAMED_GRAPHS)}")


# --- derived graphs ------------------------------------------------------


def induced_subgraph(g, vertices):
    """Induced subgraph on ``vertices``, relabelled 1..|S| in increasing order.

    Returns ``(H, labels)`` where ``labels[k - 1]`` is the host vertex that
    became vertex ``k`` of ``H``.
    """
    labels = tuple(sorted(set(vertices)))
    for v in labels:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} is not in the graph")
    pos = {v: k for k, v in enumerate(labels, start=1)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    return Graph(len(labels), edges), labels


def delete_edge(g, e):
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {u}-{v} is not in the graph")
    return Graph(g.n, [f for f in g.edges() if f != (u, v)])


def delete_edges(g, es):
    for e in es:
        g = delete_edge(g, e)
    return g


def delete_vertex(g, v):
    """Remove ``v``; returns ``(H, labels)`` as for :func:`induced_subgraph`."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} is not in the graph")
    return induced_subgraph(g, [w for w in g.vertices if w != v])


def add_edges(g, es):
    return Graph(g.n, g.edges() + [edge(*e) for e in es])


# --- cliques and blocks --------------------------------------------------


def is_clique(g, vertices):
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def maximal_cliques(g, within=None):
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted.

    ``within`` restricts the search to the induced subgraph on that vertex set.
    """
    verts = set(g.vertices) if within is None else set(within)
    nbr = {v: g.adj[v - 1] & verts for v in verts}
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(nbr[u] & p))
        for v in sorted(p - nbr[pivot]):
            expand(r | {v}, p & nbr[v], x & nbr[v])
            p = p - {v}
            x = x | {v}

    if verts:
        expand(set(), set(verts), set())
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def clique_number(g):
    if g.n == 0:
        return 0
    return max(len(c) for c in maximal_cliques(g))


def _biconnected(g):
    """DFS low-link pass; returns (blocks, cut vertices)."""
    disc = {}
    low = {}
    counter = [0]
    stack = []
    blocks = []
    cuts = set()

    def dfs(u, parent):
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        children = 0
        for w in sorted(g.adj[u - 1]):
            if w not in disc:
                children += 1
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent is not None or children > 1:
                        cuts.add(u)
                    comp = set()
                    while True:
                        a, b = stack.pop()
                        comp.update((a, b))
                        if (a, b) == (u, w):
                            break
                    blocks.append(frozenset(comp))
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in g.vertices:
        if v not in disc:
            if not g.adj[v - 1]:
                disc[v] = low[v] = counter[0]
                counter[0] += 1
                blocks.append(frozenset({v}))
                continue
            dfs(v, None)
    blocks.sort(key=lambda b: (min(b), sorted(b)))
    return blocks, cuts


def blocks(g):
    """Blocks (maximal 2-connected subgraphs) as vertex sets; isolated vertices form singleton blocks."""
    return _biconnected(g)[0]


def cut_vertices(g):
    return frozenset(_biconnected(g)[1])
