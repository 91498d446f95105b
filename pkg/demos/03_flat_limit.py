"""
Flatness, one chart at a time
=============================

Eliminating the deactivated coordinates level by level reduces the ideal of a
chart to a single relation c * n^a * r^b - t. The exponents are the
multiplicities of the two twigs through the node.
"""

from nodal_prolong import node_binomial, verify_flat_limit
from nodal_prolong.tower import chart_frame, charts

for chart in ["", "1", "21", "212", "2121"]:
    f = chart_frame(chart) if chart else None
    flat = verify_flat_limit(chart)
    b = node_binomial(chart)
    n, r = (f.new, f.retained) if f else ("x2", "x1")
    print(f"{chart or '∅':>5}: {flat.unit}*{n}^{flat.exp_n}*{r}^{flat.exp_r} - t"
          f"   (alpha, alpha+beta) = ({b.alpha}, {b.alpha + b.beta})")

# Every chart up to length 8 behaves the same way.
def exponents_match(chart):
    b = node_binomial(chart)
    return verify_flat_limit(chart)[1:] == (b.alpha, b.alpha + b.beta)


print("all 510 charts agree:", all(exponents_match(c) for k in range(1, 9) for c in charts(k)))
