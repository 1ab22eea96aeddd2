"""
Counting semigroups of multiplicity three, four and five
========================================================

Closed forms for multiplicities three and four are checked against lattice
point enumeration, and the multiplicity-four count against a restricted
partition count.
"""

import matplotlib.pyplot as plt

from kunzsg import (
    count_enumerated,
    count_mult3_closed,
    count_mult4_closed,
    count_mult4_residue,
    partition_count_closed,
    verify_nondecreasing,
)

G = range(0, 121)
m3 = [count_mult3_closed(g) for g in G]
m4 = [count_mult4_closed(g) for g in G]
m5 = [count_enumerated(5, g).value for g in G]

assert m4 == [count_enumerated(4, g).value for g in G]
assert m4 == [partition_count_closed(g + 6) for g in G]

###############################################################################
# The per-residue counts wiggle, but their sum does not.

res = {r: [count_mult4_residue(g, r) for g in G] for r in (1, 2, 3)}
for r in (1, 2, 3):
    print(r, verify_nondecreasing(lambda g: count_mult4_residue(g, r), 3, 120))
print("sum", verify_nondecreasing(count_mult4_closed, 0, 120, period=60))
print("m=5", verify_nondecreasing(lambda g: count_enumerated(5, g).value, 4, 120))

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(G, m3, label="m = 3")
ax1.plot(G, m4, label="m = 4")
ax1.plot(G, m5, label="m = 5")
ax1.set_yscale("log")
ax1.set_xlabel("genus")
ax1.legend()
for r in (1, 2, 3):
    ax2.plot(G[:40], res[r][:40], marker=".", label=f"F = {r} mod 4")
ax2.set_xlabel("genus")
ax2.legend()
fig.tight_layout()
plt.show()
