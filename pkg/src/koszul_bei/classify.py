"""Koszulness and closedness decisions with certificates.

Every flag that has two independent characterizations is computed both
ways; a disagreement raises :class:`ConsistencyError` with the offending
graph attached.
"""

from dataclasses import dataclass, field

from .errors import ConsistencyError
from .forbidden import find_induced, find_named, find_trampoline, has_induced_claw, long_induced_cycle
from .graph import blocks, clique_number, induced_subgraph, named_graph
from .orders import (
    find_claw_avoiding_peeo,
    find_closed_order,
    find_perfect_elimination_order,
    find_strong_elimination_order,
    verify_claw_avoiding_peeo,
    verify_closed_order,
    verify_perfect_elimination_order,
    verify_strong_elimination_order,
)

FLAG_NAMES = (
    "chordal",
    "strongly_chordal",
    "claw_free",
    "tent_free",
    "net_free",
    "closed",
    "koszul",
    "blocks_all_closed",
)


@dataclass
class ClassificationReport:
    chordal: bool
    strongly_chordal: bool
    claw_free: bool
    tent_free: bool
    net_free: bool
    closed: bool
    koszul: bool
    blocks_all_closed: bool
    clique_number: int
    blocks: list
    orders: dict = field(default_factory=dict)
    edge_order: object = None
    witnesses: dict = field(default_factory=dict)

    @property
    def flags(self):
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def to_json(self):
        certs = {}
        for kind in ("perfect", "strong", "closed"):
            o = self.orders.get(kind)
            certs[f"{kind}_order"] = o.to_json() if o is not None else None
        certs["edge_order"] = self.edge_order.to_json() if self.edge_order is not None else None
        certs["witnesses"] = {k: w.to_json() for k, w in sorted(self.witnesses.items())}
        return {
            "flags": self.flags,
            "certificates": certs,
            "clique_number": self.clique_number,
            "blocks": [sorted(b) for b in self.blocks],
        }


def _agree(name, g, **routes):
    vals = set(routes.values())
    if len(vals) != 1:
        raise ConsistencyError(f"routes for {name!r} disagree", graph=g, **routes)
    return vals.pop()


def _blocks_closed(g):
    for b in blocks(g):
        sub, _ = induced_subgraph(g, b)
        if find_closed_order(sub) is None:
            return False
    return True


def blocks_all_closed(g):
    """True iff every block of the connected graph g is closed."""
    if not g.is_connected():
        raise ValueError("blocks_all_closed expects a connected graph")
    return _blocks_closed(g)


def classify(g):
    witnesses = {}
    orders = {}

    peo = find_perfect_elimination_order(g)
    cyc = long_induced_cycle(g)
    chordal = _agree("chordal", g, elimination=peo is not None, cycle_free=cyc is None)
    if peo is not None:
        if not verify_perfect_elimination_order(g, peo.sequence):
            raise ConsistencyError("PEO fails verification", graph=g, order=peo.sequence)
        orders["perfect"] = peo
    else:
        witnesses["chordal"] = cyc

    claw = has_induced_claw(g)
    claw_generic = find_induced(g, named_graph("claw"), "claw")
    claw_free = _agree("claw_free", g, direct=claw is None, generic=claw_generic is None)
    if claw is not None:
        if claw != claw_generic:
            raise ConsistencyError("claw detectors return different witnesses", graph=g)
        witnesses["claw_free"] = claw

    tent = find_named(g, "tent")
    tent_free = tent is None
    if tent is not None:
        witnesses["tent_free"] = tent
    net = find_named(g, "net")
    net_free = net is None
    if net is not None:
        witnesses["net_free"] = net

    seo = find_strong_elimination_order(g)
    tramp = find_trampoline(g, max(3, g.n // 2)) if chordal else None
    strongly = _agree(
        "strongly_chordal", g, elimination=seo is not None, forbidden=chordal and tramp is None
    )
    if seo is not None:
        if not verify_strong_elimination_order(g, seo.sequence):
            raise ConsistencyError("SEO fails verification", graph=g, order=seo.sequence)
        orders["strong"] = seo
    else:
        witnesses["strongly_chordal"] = tramp if tramp is not None else cyc

    peeo = find_claw_avoiding_peeo(g)
    if peeo is not None and not verify_claw_avoiding_peeo(g, peeo.sequence):
        raise ConsistencyError("edge elimination order fails verification", graph=g)
    koszul = _agree(
        "koszul",
        g,
        chordal_claw_tent=chordal and claw_free and tent_free,
        strongly_chordal_claw=strongly and claw_free,
        edge_elimination=peeo is not None,
    )
    if not koszul:
        witnesses["koszul"] = cyc or claw or tent

    co = find_closed_order(g)
    closed = _agree(
        "closed", g, order=co is not None, forbidden=chordal and claw_free and net_free and tent_free
    )
    if co is not None:
        if not verify_closed_order(g, co.sequence):
            raise ConsistencyError("closed order fails verification", graph=g)
        orders["closed"] = co
    else:
        witnesses["closed"] = cyc or claw or net or tent
    if closed and not koszul:
        raise ConsistencyError("closed graph reported non-Koszul", graph=g)

    return ClassificationReport(
        chordal=chordal,
        strongly_chordal=strongly,
        claw_free=claw_free,
        tent_free=tent_free,
        net_free=net_free,
        closed=closed,
        koszul=koszul,
        blocks_all_closed=_blocks_closed(g),
        clique_number=clique_number(g),
        blocks=blocks(g),
        orders=orders,
        edge_order=peeo,
        witnesses=witnesses,
    )
