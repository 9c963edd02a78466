"""
The degree-3 dichotomy: case split, self-dual chain, ladder, verdict
====================================================================

For an odd-degree ring with a degree-3 basic element x3, the analysis
either finds a grouplike of order 2 or 3, or certifies two families
x_{2n+1}, x'_{2n+1} with

    x_{2n+1} * x3 = x_{2n-1} + x'_{2n+1} + x_{2n+3}

as far as the data reaches.  Inputs that can do neither get a concrete
impossibility diagnosis.
"""

import fusionring as fr

# Case split on x3 x3* - 1 (degree 8): its grouplike count decides.
# In the order-12 and order-21 character rings there are two grouplikes in
# the remainder, so together with 1 they form a group of order 3.
a4 = fr.a4_character_ring()
print("A4 case split:", fr.degree3_case_split(a4, "x3"))

# In the truncated triangle-rule ring there are none, forcing a degree-3
# plus degree-5 decomposition.
so9 = fr.so3_truncated(9)
print("so3(9) case split:", fr.degree3_case_split(so9, "x3"))

# The chain iterates the split until it stabilizes on a self-dual element
# with x^2 = 1 + x + x5 (here: immediately), short-circuiting on grouplikes.
print("so3(9) chain:", fr.selfdual_chain(so9, "x3"))
print("F21 chain:", fr.selfdual_chain(fr.f21_character_ring(), "x3"))

# The ladder builds the two families step by step, re-verifying each
# relation.  On the degree-21 truncation it certifies nine relations and
# stops honestly at the truncation.
so21 = fr.so3_truncated(21)
cert = fr.ladder_build(so21, "x3")
print("\nladder depth:", cert.depth_reached)
for n, decomp in cert.relations[:3]:
    print(f"  x_{2*n+1} * x3 =", " + ".join(l if m == 1 else f"{m}*{l}" for l, m in decomp))
print("  ...")
print("terminal:", cert.terminal_status)
# The certificate is checkable independently of how it was built.
print("independent re-verification:", fr.verify_certificate(so21, cert))

# On the rank-11 fragment the ladder enters the descending-chain diagnosis,
# recognizes the terminal configuration, constructs the forced subrings,
# and reports the 30-inside-75 divisibility violation.
frag = fr.fragment_ring()
cert = fr.ladder_build(frag, "x3")
print("\nfragment terminal:", cert.terminal_status.kind, cert.terminal_status.violation)

# The verdict wires it all together.
for ring in (fr.f21_character_ring(), a4, so21, frag, fr.cyclic_group_ring(5)):
    v = fr.dichotomy_verdict(ring)
    extra = ""
    if v.kind == "grouplike":
        extra = f" (grouplike {v.grouplike} of order {v.order})"
        if v.dimension is not None:
            extra += f", dim {v.dimension} divisible by 3: {v.divisible_by_3}"
    if v.kind == "ladder":
        extra = f" (ladder depth {v.certificate.depth_reached})"
    print(f"{ring.name:10s} -> {v.kind}{extra}")
