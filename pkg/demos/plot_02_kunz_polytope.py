"""
Kunz coordinates and the Kunz polytope
======================================

Writing the Apery elements as ``w(i) = k_i*m + i`` turns a semigroup of
multiplicity ``m`` into a positive integer vector.  Which vectors occur is
decided by a short list of linear inequalities, and the genus is the sum of
the coordinates.
"""

from kunzsg import (
    enumerate_kunz,
    enumerate_kunz_case,
    kunz_coordinates,
    kunz_polytope,
    reduced_system,
    semigroup_from_generators,
    semigroup_from_kunz,
)

print(kunz_coordinates(semigroup_from_generators([4, 5, 7])))

# The inequality rows, each read as  row . (x, 1) >= 0.
for row in kunz_polytope(4).rows:
    print(row)

# The same system in the layout GAP prints (ordered pairs, duplicates kept).
print(kunz_polytope(4, verbatim=True).to_gap())

###############################################################################
# Lattice points on the genus hyperplane are the semigroups of that genus.

for kc in enumerate_kunz(4, 4):
    print(kc.k, semigroup_from_kunz(kc))

print("#S(4,204) =", len(enumerate_kunz(4, 204)))

###############################################################################
# Splitting by where the largest Apery element sits gives three smaller
# systems; the residue of that position is the Frobenius number mod 4.

for r in (1, 2, 3):
    print(r, reduced_system(4, r).rows)
    print("   genus 9:", [kc.k for kc in enumerate_kunz_case(9, r)])
