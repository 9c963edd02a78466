"""
Standard subrings and the divisibility obstruction
==================================================

A standard subring is spanned by a basis subset containing the unit and
closed under product supports; dual-closed ones carry a Hopf dimension
(sum of squared degrees).  For rings realizable as comodule categories,
nested dual-closed subrings must have dividing dimensions — so a nested
pair that fails divisibility rules realizability out.
"""

import fusionring as fr

# Subring lattices of group rings mirror the subgroup lattice: dimensions
# of the cyclic ring of order 6 are exactly the divisors of 6.
z6 = fr.cyclic_group_ring(6)
for sub in fr.enumerate_standard_subrings(z6):
    print(f"dim {sub.hopf_dimension}: {sub.members}")

# Character rings: the order-12 ring has subrings of dimensions 1, 3, 12
# (trivial, the three linears, everything).
a4 = fr.a4_character_ring()
print("\nA4 ring dims:", [s.hopf_dimension for s in fr.enumerate_standard_subrings(a4)])
print("all nested pairs divide:", fr.freeness_obstructions(a4) == [])

# The shipped rank-11 partial ring is the interesting one.  Closing {x5}
# pulls in the five grouplikes fixing it: dimension 5*1 + 25 = 30.  Closing
# {x3} reaches all eleven elements: 5*1 + 5*9 + 25 = 75.
frag = fr.fragment_ring()
small = fr.closure(frag, {"x5"})
big = fr.closure(frag, {"x3"})
print("\nclosure({x5}):", small.members, "dim", small.hopf_dimension)
print("closure({x3}): dim", big.hopf_dimension, f"({len(big.members)} elements)")

# 30 does not divide 75 — no ring containing this configuration can come
# from a Hopf algebra.  That is the terminal contradiction the ladder
# analysis in demo 04 lands on.
violations = fr.freeness_obstructions(frag)
for sub, sup in violations:
    print(f"obstruction: {sub.hopf_dimension} inside {sup.hopf_dimension}, "
          f"{sup.hopf_dimension} % {sub.hopf_dimension} = {sup.hopf_dimension % sub.hopf_dimension}")

# Grouplike groups and stabilizers come with tables and element orders.
print("\ngrouplikes of the fragment:", fr.grouplike_group(frag).as_dict())
print("stabilizer of x5:", fr.stabilizer_group(frag, "x5").elements)
