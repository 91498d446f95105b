"""
Node binomials and the ideal of a chart
=======================================

Each chart of the tower carries a stack of binomials: one per prefix of its
label. Together with ``x1*x2 - t`` they cut out the prolonged family there.
"""

from nodal_prolong import binomials_by_differentiation, ideal_generators, node_binomial
from nodal_prolong.kernel import primitive_part
from nodal_prolong.tower import chart_frame, charts

# The binomial of a chart is alpha*n*r + beta*d, where n, r, d are the new,
# retained and deactivated coordinates of that chart.
frame = chart_frame("212")
print("chart 212: n =", frame.new, " r =", frame.retained, " d =", frame.deactivated)
print("B(212) =", node_binomial("212").render())

# All binomials up to length three, in compact juxtaposed form.
for k in range(4):
    print("  ".join(node_binomial(c).render() for c in charts(k)))

# The full ideal of a chart: the family, then one binomial per level.
for g in ideal_generators("212").generators:
    print("   ", g)

# The same binomials come out of repeated implicit differentiation of
# x1*x2 = t, up to a positive integer factor.
derived = binomials_by_differentiation("212")
print(derived[-1], "->", primitive_part(derived[-1]))
