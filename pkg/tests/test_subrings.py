"""Subring closure, enumeration, grouplike groups, freeness obstructions."""

import pytest

import fusionring as fr
from fusionring.subrings import IncompleteClosure

from conftest import all_fixture_rings


def divisors(n):
    return sorted(d for d in range(1, n + 1) if n % d == 0)


def test_closure_unit_only(fragment):
    sub = fr.closure(fragment, set())
    assert sub.members == ("1",)
    assert sub.hopf_dimension == 1


def test_closure_fragment_x5(fragment):
    sub = fr.closure(fragment, {"x5"})
    assert sub.members == ("1", "g", "h1", "h2", "h3", "x5")
    assert sub.hopf_dimension == 30
    assert sub.closed_under_dual


def test_closure_fragment_x3(fragment):
    sub = fr.closure(fragment, {"x3"})
    assert len(sub.members) == 11
    assert sub.hopf_dimension == 75


def test_closure_monotone_idempotent_extensive(fragment):
    sub = fr.closure(fragment, {"x5"})
    again = fr.closure(fragment, set(sub.members))
    assert again.members == sub.members  # idempotent
    assert {"x5"} <= set(sub.members)  # extensive
    bigger = fr.closure(fragment, {"x5", "g"})
    assert set(sub.members) <= set(bigger.members)  # monotone here


def test_closure_duals_flag(f21):
    with_duals = fr.closure(f21, {"x3"})
    without = fr.closure(f21, {"x3"}, include_duals=False)
    # x3*x3 already contains the dual, so both closures agree here
    assert with_duals == without
    assert with_duals.closed_under_dual


def test_closure_incomplete_on_truncated():
    so = fr.so3_truncated(9)
    result = fr.closure(so, {"x3"})
    assert isinstance(result, IncompleteClosure)
    assert ("x9", "x9") in result.pending


def test_enumerate_zn_matches_divisor_lattice():
    for n in range(1, 9):
        ring = fr.cyclic_group_ring(n)
        subs = fr.enumerate_standard_subrings(ring)
        assert [s.hopf_dimension for s in subs] == divisors(n)


def test_enumerate_quotient_dims():
    # Hopf quotients: A4 -> {1, Z3, A4}, F21 -> {1, Z3, F21}, S3 -> {1, Z2, S3}
    assert [s.hopf_dimension for s in fr.enumerate_standard_subrings(fr.a4_character_ring())] == [1, 3, 12]
    assert [s.hopf_dimension for s in fr.enumerate_standard_subrings(fr.f21_character_ring())] == [1, 3, 21]
    assert [s.hopf_dimension for s in fr.enumerate_standard_subrings(fr.s3_character_ring())] == [1, 2, 6]


def test_enumerate_fragment(fragment):
    subs = fr.enumerate_standard_subrings(fragment, allow_incomplete=True)
    assert [s.hopf_dimension for s in subs] == [1, 5, 30, 75]


def test_enumerate_exhaustive_agrees():
    ring = fr.cyclic_group_ring(6)
    fast = fr.enumerate_standard_subrings(ring)
    full = fr.enumerate_standard_subrings(ring, exhaustive=True)
    assert fast == full


def test_enumerate_partial_requires_flag():
    with pytest.raises(fr.UnknownProduct):
        fr.enumerate_standard_subrings(fr.so3_truncated(9))


def test_enumerate_so3_only_trivial_completes():
    # every nontrivial closure runs past the truncation
    subs = fr.enumerate_standard_subrings(fr.so3_truncated(9), allow_incomplete=True)
    assert [s.hopf_dimension for s in subs] == [1]


def test_enumerate_rank_bound():
    with pytest.raises(fr.RankTooLarge):
        fr.enumerate_standard_subrings(fr.cyclic_group_ring(8), rank_bound=5)


def test_subring_restriction_is_valid_ring():
    # restricting a complete valid ring to a standard subring stays valid
    for ring in (fr.cyclic_group_ring(6), fr.a4_character_ring(), fr.f21_character_ring()):
        for sub in fr.enumerate_standard_subrings(ring):
            members = set(sub.members)
            products = {}
            for a in members:
                for b in members:
                    row = ring.product_row(ring.index(a), ring.index(b))
                    products[(a, b)] = {
                        ring.label(c): m for c, m in enumerate(row) if m
                    }
                    assert all(lab in members for lab in products[(a, b)])
            basis = [
                (x.label, x.degree, x.dual_label)
                for x in ring.elements
                if x.label in members
            ]
            restricted = fr.build_ring(f"{ring.name}_sub", basis, ring.label(ring.unit_index), products)
            assert fr.check_axioms(restricted).all_pass


def test_grouplike_group_z3():
    gg = fr.grouplike_group(fr.cyclic_group_ring(3))
    assert gg.elements == ("1", "g", "g2")
    assert gg.orders == (1, 3, 3)


def test_grouplike_group_f21(f21):
    gg = fr.grouplike_group(f21)
    assert gg.elements == ("1", "s", "s2")
    assert gg.orders == (1, 3, 3)
    assert gg.product("s", "s2") == "1"


def test_grouplike_group_so3(so3_21):
    gg = fr.grouplike_group(so3_21)
    assert gg.elements == ("x1",)
    assert gg.orders == (1,)


def test_grouplike_lagrange_property():
    for ring in all_fixture_rings():
        try:
            gg = fr.grouplike_group(ring)
        except fr.UnknownProduct:
            continue
        for order in gg.orders:
            assert gg.order % order == 0


def test_grouplike_not_closed():
    # degree-1 products leaving the grouplike set signal an invalid ring
    bad = fr.build_ring(
        "bad",
        [("1", 1, "1"), ("g", 1, "g"), ("x", 3, "x")],
        "1",
        {("g", "g"): {"x": 1}},
    )
    with pytest.raises(fr.NotClosed):
        fr.grouplike_group(bad)


def test_stabilizer_group_unit():
    ring = fr.cyclic_group_ring(5)
    assert fr.stabilizer_group(ring, "1").elements == ("1",)


def test_stabilizer_group_f21(f21):
    stab = fr.stabilizer_group(f21, "x3")
    assert stab.elements == ("1", "s", "s2")
    assert stab.orders == (1, 3, 3)


def test_stabilizer_group_fragment_x5(fragment):
    stab = fr.stabilizer_group(fragment, "x5")
    assert stab.elements == ("1", "g", "h1", "h2", "h3")
    assert sorted(stab.orders) == [1, 5, 5, 5, 5]


def test_stabilizer_group_unknown(fragment):
    with pytest.raises(fr.UnknownProduct):
        fr.stabilizer_group(fragment, "x3")


def test_stabilizer_order_bound_violation():
    # a degree-1 element fixed by a non-unit grouplike breaks the deg^2 bound
    bad = fr.build_ring("bad", [
        ("1", 1, "1"), ("g", 1, "g"), ("x", 1, "x"),
    ], "1", {
        ("g", "g"): {"1": 1},
        ("g", "x"): {"x": 1}, ("x", "g"): {"x": 1},
        ("x", "x"): {"1": 1},
    })
    with pytest.raises(fr.NotClosed, match="order 2 > deg"):
        fr.stabilizer_group(bad, "x")


def test_freeness_z6_clean():
    assert fr.freeness_obstructions(fr.cyclic_group_ring(6)) == []


def test_freeness_a4_clean(a4):
    assert fr.freeness_obstructions(a4) == []


def test_freeness_fragment_violation(fragment):
    violations = fr.freeness_obstructions(fragment)
    assert [(s.hopf_dimension, b.hopf_dimension) for s, b in violations] == [(30, 75)]


def test_freeness_supplied_subrings(fragment):
    small = fr.closure(fragment, {"x5"})
    big = fr.closure(fragment, {"x3"})
    violations = fr.freeness_obstructions(fragment, [small, big])
    assert [(s.hopf_dimension, b.hopf_dimension) for s, b in violations] == [(30, 75)]
