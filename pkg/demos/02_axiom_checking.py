"""
Checking the fusion-ring identities
===================================

A valid ring satisfies: the unit law, the duality pairing m(1,ab) = [b = a*],
associativity, the degree homomorphism, dual compatibility (ab)* = b*a*,
Frobenius reciprocity m(x,ab) = m(a*,bx*) = m(a,xb*), and the grouplike rule
m(g,ab) = [b = a*g].  The checker evaluates every instance over the basis and
never short-circuits; on partial rings, instances needing Unknown products
are counted as skipped, not passed.
"""

import fusionring as fr

# A clean ring: every check passes with zero skips.
f21 = fr.f21_character_ring()
report = fr.check_axioms(f21)
for entry in report.entries:
    print(f"{entry.name:24s} {entry.status:8s} pass={entry.passed} skip={entry.skipped}")
print("all pass:", report.all_pass)

# Corrupt one structure constant of the cyclic ring of order 5 and watch the
# downstream symptoms light up: one bad constant breaks four identities.
z5 = fr.cyclic_group_ring(5)
products = {}
for i, j in z5.known_pairs():
    row = z5.product_row(i, j)
    products[(z5.label(i), z5.label(j))] = {z5.label(c): m for c, m in enumerate(row) if m}
products[("g", "g")] = {"g2": 2}  # should be coefficient 1
bad = fr.build_ring("Z5corrupt", [(b.label, b.degree, b.dual_label) for b in z5.elements], "1", products)

print("\ncorrupted ring:")
for entry in fr.check_axioms(bad).entries:
    marker = "  <-- " + entry.witness.detail if entry.witness else ""
    print(f"{entry.name:24s} {entry.status}{marker}")

# Partial rings skip what they cannot decide.  The degree-9 truncation knows
# x3*x3 but not x9*x9, so some associativity instances are skipped.
so9 = fr.so3_truncated(9)
report = fr.check_axioms(so9)
print("\ntruncated ring skip counts:")
for entry in report.entries:
    print(f"{entry.name:24s} {entry.status:16s} skipped={entry.skipped}")

# The stabilizer rule, per element: grouplikes fixing x are exactly those
# appearing in x x*, they form a group, and there are at most deg(x)^2.
print("\nstabilizer of x3 in F21:", fr.stabilizer_labels(f21, "x3"))
stab_report = fr.check_stabilizer_rule(f21, "x3")
print("stabilizer checks:", [(e.name, e.status) for e in stab_report.entries])
