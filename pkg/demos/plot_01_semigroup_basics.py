"""
Numerical semigroups and their Apery sets
=========================================

A numerical semigroup is stored as its multiplicity together with the Apery
set of that multiplicity.  Everything else is derived from those numbers.
"""

from kunzsg import semigroup_from_generators, invariants

S = semigroup_from_generators([4, 5, 7])
print(S, "multiplicity", S.multiplicity, "Apery set", S.apery)

# Membership only needs one lookup: n is in S exactly when n >= w(n mod m).
print([n for n in range(15) if n in S])

# The standard invariants.
print(invariants(S))

###############################################################################
# Redundant generators are dropped, and N itself is ``<1>`` with Frobenius -1.

print(semigroup_from_generators([6, 4, 9, 5, 8]))
N = semigroup_from_generators([1])
print(N, N.frobenius, N.genus)

###############################################################################
# Two generators: Sylvester's formula F = ab - a - b, and exactly half of
# 0..F are gaps.

T = semigroup_from_generators([5, 8])
print(T.frobenius, 5 * 8 - 5 - 8, T.genus, (T.frobenius + 1) // 2)
