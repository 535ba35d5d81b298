"""
The thick net
==============

A single block that is Koszul without being closed, so closed blocks
cannot characterize Koszulness once the clique number reaches 4.
"""

from koszul_bei import classify, find_claw_avoiding_peeo, named_graph
from koszul_bei.graph import delete_edges
from koszul_bei.orders import is_claw_avoiding, is_simplicial_edge, verify_closed_order

g = named_graph("thick_net")
r = classify(g)
print("koszul", r.koszul, "| closed", r.closed, "| blocks", [sorted(b) for b in r.blocks], "| clique number", r.clique_number)
print("induced net at", r.witnesses["closed"].map)

# Removing the two edges at vertex 9 leaves a closed graph in the given labelling.
print("5-9 simplicial and claw-avoiding:", is_simplicial_edge(g, (5, 9)) and is_claw_avoiding(g, (5, 9)))
h = delete_edges(g, [(5, 9), (4, 9)])
print("identity order closed after deleting 5-9 and 4-9:", verify_closed_order(h, range(1, 10)))

order = find_claw_avoiding_peeo(g)
print(len(order.sequence), "edges:", " ".join(f"{a}-{b}" for a, b in order.sequence))
