"""
Code words, node words and twig words
=====================================

Strata of the tower are indexed by code words over R, V2, V3, .... There are
F(2k-1) of them at level k. Each node and each twig of the chain lies in one
stratum; its word can be computed recursively from twig words or read off
the blocks of the label directly.
"""

from nodal_prolong import enumerate_code_words, node_word_explicit, node_word_recursive, trace_node_word
from nodal_prolong.render import trace_ascii

print([str(w) for w in enumerate_code_words(3)])
print([len(enumerate_code_words(k)) for k in range(1, 11)])

# %%
# The recursion, step by step, for the node N(21221). The starred twig is the
# one that emerged from the node one level down.
steps = trace_node_word("21221")
print(trace_ascii(steps))

# %%
# The block formula: the first block of equal symbols gives R's, a block
# starting at position j gives V_j's.
label = "222122112"
print(label, node_word_explicit(label), node_word_recursive(label))
