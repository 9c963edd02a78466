"""Shared fixtures: oracle rings and hand-built diagnostic rings."""

from __future__ import annotations

import cmath

import pytest

import fusionring as fr


@pytest.fixture(scope="session")
def a4():
    return fr.a4_character_ring()


@pytest.fixture(scope="session")
def f21():
    return fr.f21_character_ring()


@pytest.fixture(scope="session")
def s3():
    return fr.s3_character_ring()


@pytest.fixture(scope="session")
def fragment():
    return fr.fragment_ring()


@pytest.fixture(scope="session")
def so3_21():
    return fr.so3_truncated(21)


def complete_fixture_rings():
    """Every complete (no Unknown) reference ring in the corpus."""
    rings = [fr.cyclic_group_ring(n) for n in range(1, 9)]
    rings += [fr.s3_character_ring(), fr.a4_character_ring(), fr.f21_character_ring()]
    return rings


def all_fixture_rings():
    return complete_fixture_rings() + [
        fr.so3_truncated(9),
        fr.so3_truncated(21),
        fr.fragment_ring(),
    ]


# -- independent oracles -------------------------------------------------------


def float_inner_product(table, i, j):
    """Row inner product evaluated numerically; independent of the exact route."""
    total = 0j
    zeta = cmath.exp(2j * cmath.pi / table.conductor)
    for size, a, b in zip(table.class_sizes, table.characters[i], table.characters[j]):
        va = sum(c * zeta**k for k, c in enumerate(a.coeffs))
        vb = sum(c * zeta**k for k, c in enumerate(b.coeffs))
        total += size * va * vb.conjugate()
    return total / table.group_order


def float_structure_constant(table, i, j, k):
    """<chi_i chi_j, chi_k> via complex floats, rounded with a tight guard."""
    total = 0j
    zeta = cmath.exp(2j * cmath.pi / table.conductor)

    def value(row, cls):
        return sum(c * zeta**p for p, c in enumerate(table.characters[row][cls].coeffs))

    for cls, size in enumerate(table.class_sizes):
        total += size * value(i, cls) * value(j, cls) * value(k, cls).conjugate()
    total /= table.group_order
    nearest = round(total.real)
    assert abs(total - nearest) < 1e-9, f"non-integral inner product {total}"
    return nearest


def laurent_cg_decompose(a, b, max_index):
    """Decompose the product of odd-dimensional rotation characters.

    chi_l(q) = q^-l + ... + q^l as an integer Laurent polynomial; peel the
    top character repeatedly.  Returns None when the decomposition needs an
    index beyond max_index (the truncation case).
    """

    def chi(l):
        return {k: 1 for k in range(-l, l + 1)}

    poly = {}
    for p, cp in chi(a).items():
        for q, cq in chi(b).items():
            poly[p + q] = poly.get(p + q, 0) + cp * cq
    out = {}
    while any(poly.values()):
        top = max(k for k, v in poly.items() if v)
        mult = poly[top]
        assert mult > 0
        if top > max_index:
            return None
        out[top] = mult
        for k in range(-top, top + 1):
            poly[k] = poly.get(k, 0) - mult
    return out


def brute_cyclic_products(n):
    """Group-ring products of Z_n straight from modular arithmetic."""
    return {(a, b): (a + b) % n for a in range(n) for b in range(n)}


# -- diagnostic rings -----------------------------------------------------------


def order2_branch_ring():
    """Ladder input whose descending chain ends in the order-2 grouplike branch."""
    return fr.build_ring("order2", [
        ("1", 1, "1"), ("g", 1, "g"),
        ("x3", 3, "x3"), ("gx3", 3, "gx3"),
        ("x5", 5, "x5"), ("z9", 9, "z9"),
    ], "1", {
        ("g", "g"): {"1": 1},
        ("x3", "x3"): {"1": 1, "x3": 1, "x5": 1},
        ("x5", "x3"): {"x3": 1, "gx3": 1, "z9": 1},
        ("gx3", "x3"): {"x5": 1, "g": 1, "gx3": 1},
        ("g", "x3"): {"gx3": 1},
        ("g", "x5"): {"x5": 1},
    })


def factorization_branch_ring():
    """Corrupt ladder input that walks the chain to k=1 < n=2 and trips the
    concrete equation-3 identity check."""
    return fr.build_ring("factorization_branch", [
        ("1", 1, "1"), ("g", 1, "g2"), ("g2", 1, "g"),
        ("u3", 3, "u3"), ("x3", 3, "x3"),
        ("x5", 5, "x5"), ("x7", 7, "x7"),
    ], "1", {
        ("g", "g"): {"g2": 1}, ("g", "g2"): {"1": 1},
        ("g2", "g"): {"1": 1}, ("g2", "g2"): {"g": 1},
        ("x3", "x3"): {"1": 1, "x3": 1, "x5": 1},
        ("x5", "x3"): {"x3": 1, "x5": 1, "x7": 1},
        ("x7", "x3"): {"x5": 1, "u3": 2, "x3": 1, "x7": 1},
        ("u3", "x3"): {"x7": 1, "g": 1, "g2": 1},
        ("g", "x3"): {"u3": 1},
        ("g", "x5"): {"x5": 1},
    })


def chain_length_one_ring():
    """Partial ring where the self-dual chain moves once: a -> u, u stabilizes.

    No complete ring of rank <= 6 supports this (see test_search); the two
    Known squares are exactly what the chain needs.
    """
    return fr.build_ring("chain1", [
        ("1", 1, "1"), ("a", 3, "a"), ("u", 3, "u"), ("c", 5, "c"), ("d", 5, "d"),
    ], "1", {
        ("a", "a"): {"1": 1, "u": 1, "c": 1},
        ("u", "u"): {"1": 1, "u": 1, "d": 1},
    })


def count4_corrupt_ring():
    """Degree-sum-corrupt ring with exactly 4 grouplikes in x3*x3 - 1."""
    zt = {}
    labs = ["1", "g", "g2", "g3", "g4"]
    for i in range(5):
        for j in range(5):
            zt[(labs[i], labs[j])] = {labs[(i + j) % 5]: 1}
    zt[("x3", "x3")] = {"1": 1, "g": 1, "g2": 1, "g3": 1, "g4": 1, "x3": 1}
    return fr.build_ring("count4", [
        ("1", 1, "1"), ("g", 1, "g4"), ("g2", 1, "g3"),
        ("g3", 1, "g2"), ("g4", 1, "g"), ("x3", 3, "x3"),
    ], "1", zt)


def corrupt_z5_ring():
    """Z5 with one structure constant bumped to 2."""
    z5 = fr.cyclic_group_ring(5)
    products = {}
    for i, j in z5.known_pairs():
        row = z5.product_row(i, j)
        products[(z5.label(i), z5.label(j))] = {
            z5.label(c): m for c, m in enumerate(row) if m
        }
    products[("g", "g")] = {"g2": 2}
    basis = [(b.label, b.degree, b.dual_label) for b in z5.elements]
    return fr.build_ring("Z5corrupt", basis, "1", products)
