"""Induced-subgraph search and detectors for claws, long cycles and trampolines."""

from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import induced_subgraph, named_graph, trampoline


@dataclass(frozen=True)
class InducedWitness:
    """An induced copy of a pattern: ``map[k - 1]`` is the host image of pattern vertex ``k``."""

    pattern: str
    map: tuple

    def to_json(self):
        return {"pattern": self.pattern, "map": list(self.map)}

    def check(self, host, pattern_graph):
        """True iff the map is injective and preserves edges and non-edges."""
        if len(set(self.map)) != len(self.map) or len(self.map) != pattern_graph.n:
            return False
        for a, b in combinations(range(1, pattern_graph.n + 1), 2):
            if pattern_graph.has_edge(a, b) != host.has_edge(self.map[a - 1], self.map[b - 1]):
                return False
        return True


def find_induced(g, h, name="pattern"):
    """Lexicographically least induced embedding of ``h`` into ``g``, or None.

    Pattern vertices are mapped in order 1..|h|, host candidates in
    increasing order, so the first complete map found is the lex-least one.
    """
    k = h.n
    if k > g.n:
        return None
    if k == 0:
        return InducedWitness(name, ())
    hdeg = [h.degree(a) for a in h.vertices]
    gdeg = [g.degree(v) for v in g.vertices]
    image = []
    used = set()

    def extend(a):
        if a > k:
            return True
        need = hdeg[a - 1]
        for v in g.vertices:
            if v in used or gdeg[v - 1] < need:
                continue
            nv = g.adj[v - 1]
            ok = True
            for b, w in enumerate(image, start=1):
                if h.has_edge(a, b) != (w in nv):
                    ok = False
                    break
            if not ok:
                continue
            image.append(v)
            used.add(v)
            if extend(a + 1):
                return True
            image.pop()
            used.discard(v)
        return False

    if extend(1):
        return InducedWitness(name, tuple(image))
    return None


def has_induced_claw(g):
    """Direct scan for a claw: a vertex with three pairwise non-adjacent neighbours.

    Witness map is (center, leaf, leaf, leaf), matching ``named_graph("claw")``.
    """
    for v in g.vertices:
        nb = sorted(g.adj[v - 1])
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return InducedWitness("claw", (v, a, b, c))
    return None


def is_claw_free(g):
    return has_induced_claw(g) is None


def induced_cycles(g, min_length=3):
    """Yield every chordless cycle once, as a vertex tuple.

    Each cycle starts at its smallest vertex and its second vertex is the
    smaller of that vertex's two cycle neighbours.
    """
    for s in g.vertices:
        allowed = {v for v in g.vertices if v > s}

        def grow(path, on_path):
            last = path[-1]
            for w in sorted(g.adj[last - 1] & allowed):
                if w in on_path:
                    continue
                # w may only touch the path at `last`, or also at s to close it
                touches = [u for u in path[:-1] if g.has_edge(u, w)]
                if not touches:
                    path.append(w)
                    on_path.add(w)
                    yield from grow(path, on_path)
                    path.pop()
                    on_path.discard(w)
                elif touches == [s] and len(path) >= 2 and len(path) + 1 >= min_length:
                    if path[1] < w:
                        yield tuple(path) + (w,)

        yield from grow([s], {s})


def long_induced_cycle(g):
    """An induced cycle of length at least 4 (a chordality obstruction), or None."""
    for c in induced_cycles(g, min_length=4):
        return InducedWitness(f"cycle{len(c)}", c)
    return None


def find_trampoline(g, kmax):
    """Induced k-trampoline for the smallest k in 3..kmax with 2k <= n, or None."""
    if kmax < 3:
        raise ValueError("kmax must be at least 3")
    for k in range(3, kmax + 1):
        if 2 * k > g.n:
            break
        w = find_induced(g, trampoline(k), f"trampoline{k}")
        if w is not None:
            return w
    return None


def find_named(g, name):
    """Generic matcher against a fixed named pattern (claw, tent, net)."""
    return find_induced(g, named_graph(name), name)


def naive_contains_induced(g, h):
    """All-subsets oracle: does some |V(h)|-subset of g induce a graph isomorphic to h?"""
    target = sorted(h.degree(v) for v in h.vertices)
    for subset in combinations(g.vertices, h.n):
        sub, _ = induced_subgraph(g, subset)
        if sub.num_edges != h.num_edges or sorted(sub.degree(v) for v in sub.vertices) != target:
            continue
        for perm in permutations(range(1, h.n + 1)):
            if sub.relabel(perm) == h:
                return True
    return False


__all__ = [
    "InducedWitness",
    "find_induced",
    "find_named",
    "find_trampoline",
    "has_induced_claw",
    "induced_cycles",
    "is_claw_free",
    "long_induced_cycle",
    "naive_contains_induced",
]
