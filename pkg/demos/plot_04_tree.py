"""
The tree of numerical semigroups
================================

Children remove a minimal generator larger than the Frobenius number.  In
multiplicity three the number of children is predicted by the Frobenius
number and genus alone.
"""

from collections import Counter

from kunzsg import build_tree, children_in_mult_tree, classify_mult3, export_tree
from kunzsg.tree import levels

print([len(lv) for _, lv in levels(10)])

# DOT output can be rendered with Graphviz:  dot -Tsvg tree.dot > tree.svg
print(export_tree(build_tree(4), "dot"))

###############################################################################
# Multiplicity three: leaves, one-child and two-children nodes per genus.

for g, lv in levels(15, 3):
    kinds = Counter(classify_mult3(S).name for S in lv)
    assert all(classify_mult3(S).value == len(children_in_mult_tree(S, 3)) for S in lv)
    print(g, len(lv), dict(kinds))
