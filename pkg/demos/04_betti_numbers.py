"""
Graded Betti numbers through Hochster's formula
================================================

For the four-cycle with a chord, compare the Betti table of the initial
ideal with the Taylor complex and assemble beta_{2,4} = 6 + 3.
"""

from koszul_bei import binomial_edge_ideal, named_graph
from koszul_bei.betti import betti_table_squarefree, betti_table_taylor, c4_betti_summands
from koszul_bei.poly import initial_ideal

J = binomial_edge_ideal(named_graph("c4_chord"))
init = initial_ideal(J.gb((1, 2, 3, 4)))
table = betti_table_squarefree(init)
print(table)
print("Taylor complex agrees:", table == betti_table_taylor(init))

koszul_part, monomial_part = c4_betti_summands()
print(f"beta_2,4 = {koszul_part} + {monomial_part} = {koszul_part + monomial_part}")
