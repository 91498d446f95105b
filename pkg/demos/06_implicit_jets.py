"""
Implicit differentiation in jet space
=====================================

Differentiating f(x, y) = 0 repeatedly, with y a function of x, gives a
system in the jets y', y'', .... For the nodal family in the all-1 chart the
jets are the tower coordinates x2(1), x2(11), ..., and the system is the
ideal of that chart.
"""

from nodal_prolong import ideal_generators, implicit_system
from nodal_prolong.kernel import primitive_part
from nodal_prolong.parsing import parse_polynomial as P
from nodal_prolong.prolong import regular_chart_renaming, rename

system = implicit_system(P("y^2 - x^3"), 2)
for eq in system.equations:
    print(eq)

k = 3
eqs = implicit_system(P("x1*x2 - t"), k, x="x1", y="x2").equations
renamed = [rename(e, regular_chart_renaming(k)) for e in eqs]
for ours, theirs in zip(renamed, ideal_generators("1" * k).generators):
    print(f"{str(ours):<40} {theirs}   same up to scale: {primitive_part(ours) == primitive_part(theirs)}")
