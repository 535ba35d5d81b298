"""
Surveying all small connected graphs
=====================================

Enumerate connected graphs up to isomorphism and count each class.
"""

from koszul_bei import run_survey
from koszul_bei.survey import CELLS

report = run_survey(7)
print("n  total " + " ".join(f"{c:>16}" for c in CELLS))
for n, c in sorted(report.counts.items()):
    print(f"{n}  {c['total']:5} " + " ".join(f"{c[k]:>16}" for k in CELLS))

# Koszul but not closed: the net first appears at six vertices.
for hit in report.koszul_not_closed:
    print("koszul, not closed:", hit["graph6"], "n =", hit["n"])
print("equivalence failures:", len(report.failures))
