"""
Building fusion rings and doing exact arithmetic in them
========================================================

A fusion ring is a free abelian group on a finite labelled basis with
nonnegative-integer structure constants, a unit, a degree on each basis
element, and a degree-preserving dual involution.  Everything here is
exact integer arithmetic; no floats anywhere.
"""

import fusionring as fr

# The easiest rings: group rings of cyclic groups.  Every basis element has
# degree 1 and the product is addition of exponents.
z6 = fr.cyclic_group_ring(6)
print(z6)
g = z6.element("g")
g2 = z6.multiply(g, g)
print("g * g =", z6.decompose(g2))
print("g * g5 =", z6.decompose(z6.multiply(g, z6.element("g5"))))  # inverse pair

# Character rings carry higher degrees.  The order-12 alternating-group ring
# has three degree-1 elements and one of degree 3.
a4 = fr.a4_character_ring()
x3 = a4.element("x3")
print("\nA4 ring:", a4)
print("x3 * x3 =", a4.decompose(a4.multiply(x3, x3)))
print("degree of x3^2:", a4.degree(a4.multiply(x3, x3)))  # 3*3 = 9

# Duality transports coefficients along the involution; in the order-21
# Frobenius-group ring the two degree-3 elements are each other's duals.
f21 = fr.f21_character_ring()
x3 = f21.element("x3")
print("\nF21 dual of x3:", f21.decompose(f21.dual(x3)))
print("x3 * x3* =", f21.decompose(f21.multiply(x3, f21.dual(x3))))

# The multiplicity pairing m(w, z) counts shared basic components,
# biadditively.  m(x, z) for basic x is just z's coefficient at x.
prod = f21.multiply(x3, f21.dual(x3))
print("m(1, x3 x3*) =", f21.multiplicity(f21.unit_element(), prod))
print("m(x3, x3 x3*) =", f21.multiplicity(x3, prod))

# Truncated rings mark products beyond the bound as Unknown (None) rather
# than inventing them: the odd triangle-rule ring up to degree 9.
so9 = fr.so3_truncated(9)
x3, x5, x9 = so9.element("x3"), so9.element("x5"), so9.element("x9")
print("\nso3(9) x3*x5 =", so9.decompose(so9.multiply(x3, x5)))
print("so3(9) x9*x9 =", so9.multiply(x9, x9))  # None: needs x11..x17

# The positivity cone: actual objects have nonnegative coordinates.
diff = so9.multiply(x3, x3) - so9.unit_element()
print("\nx3^2 - 1 nonnegative?", diff.is_nonnegative())
print("x3 - x5 nonnegative?", (x3 - x5).is_nonnegative())
