"""
Lex Groebner bases of binomial edge ideals
===========================================

A closed labelling gives a quadratic basis; the net never does.
"""

from koszul_bei import binomial_edge_ideal, find_closed_order, named_graph
from koszul_bei.bei import quadratic_lex_orders
from koszul_bei.poly import format_polynomial

g = named_graph("c4_chord")
J = binomial_edge_ideal(g)
print("generators:", [str(f) for f in J.generators])

gb = J.gb((1, 2, 3, 4))
for f in gb:
    print("  ", format_polynomial(f, gb.order))
print("initial ideal:", gb.to_json()["initial_ideal"])

# A different labelling of the same graph is not closed and the basis grows.
gb2 = J.gb((2, 1, 3, 4))
print("order 2,1,3,4: max degree", gb2.max_degree(), "with", len(gb2), "elements")

# The net: every one of the 720 labellings has a basis element of degree > 2.
net = named_graph("net")
results = quadratic_lex_orders(net)
print("net, quadratic orders:", sum(ok for _, ok in results), "of", len(results))
print("net closed order:", find_closed_order(net))
