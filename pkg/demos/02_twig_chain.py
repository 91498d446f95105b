"""
The central fiber as a chain of twigs
=====================================

At t = 0 the k-th prolongation is a chain of 2^k + 1 curves ("twigs") meeting
at 2^k nodes. Nodes are named by chart labels in lexicographic order, and an
interior twig by the common prefix of the two nodes it joins.
"""

from nodal_prolong import annotate_chain, build_chain, multiplicity_sequence
from nodal_prolong.render import chain_ascii, label_text

chain = build_chain(3)
print(chain.nodes)
print([label_text(t) for t in chain.twigs])

# %%
# Multiplicities come from the binomials: at each node the retained twig gets
# alpha and the emergent twig gets alpha + beta. Mediant insertion from (1, 1)
# produces the same numbers.
print(chain.multiplicities)
print(multiplicity_sequence(3))

# %%
# The picture, with multiplicities.
print(chain_ascii(annotate_chain(chain), mults=True))

# %%
# Levels 0 to 5 side by side: each row is the previous one with sums
# inserted between neighbours.
for k in range(6):
    print(" ".join(map(str, multiplicity_sequence(k))))
