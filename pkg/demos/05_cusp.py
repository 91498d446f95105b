"""
Lifting the cusp
================

A parametrized curve is lifted by recording its slope in the active chart.
The cusp x = s^2, y = s^3 is singular at the origin, yet its lift is smooth
with new coordinate (3/2) s.
"""

from nodal_prolong import check_identification, curve, prolong
from nodal_prolong.parsing import parse_polynomial as P

cusp = curve("s^2", "s^3", order=8)
once = prolong(cusp, 1)
for name, series in once.as_dict().items():
    print(f"{name:>6} = {series}")

# %%
# A second lift is critical: the lifted curve is tangent to the fiber over
# the origin, so the chart label changes symbol.
twice = prolong(cusp, 2)
print(twice.chart, [k.value for k in twice.steps])
print("x1(12) =", twice["x1(12)"])

# %%
# The lift of the dual curve (3/2 s, s^3) is the same curve in disguise:
# xbar = y', ybar = y and ybar' = 2x identify the two.
dual = prolong(curve("3/2*s", "s^3", order=8), 1)
dictionary = {"x1": P("1/2*x2(1)"), "x2": P("x2"), "x2(1)": P("x1")}
print("identified:", check_identification(once, dual, dictionary))
