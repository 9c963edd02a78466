"""Identity checks for fusion rings.

Every check a valid ring must satisfy is evaluated over all applicable
basic pairs/triples whose products are Known; instances touching an
Unknown product are counted as skipped, never as passed.  Checks run in a
fixed order and never short-circuit, so a single corrupt constant shows
every downstream symptom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .ring import FusionRing, UnknownProduct

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-unknown"


@dataclass(frozen=True)
class Witness:
    """First offending instance of a failed check, with both sides' values."""

    instance: tuple[str, ...]
    detail: str


@dataclass(frozen=True)
class CheckEntry:
    name: str
    status: str
    passed: int
    failed: int
    skipped: int
    witness: Optional[Witness] = None

    def as_dict(self) -> dict:
        d = {
            "name": self.name,
            "status": self.status,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
        }
        if self.witness is not None:
            d["witness"] = {"instance": list(self.witness.instance), "detail": self.witness.detail}
        return d


@dataclass(frozen=True)
class CheckReport:
    """Itemized pass/fail record; every named check appears exactly once."""

    ring_name: str
    entries: tuple[CheckEntry, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.status == PASS for e in self.entries)

    @property
    def has_failures(self) -> bool:
        return any(e.status == FAIL for e in self.entries)

    @property
    def total_skipped(self) -> int:
        return sum(e.skipped for e in self.entries)

    def entry(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {"ring": self.ring_name, "checks": [e.as_dict() for e in self.entries]}


class _Tally:
    """Accumulates instance outcomes for one named check."""

    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.skipped = 0
        self.witness: Optional[Witness] = None

    def ok(self) -> None:
        self.passed += 1

    def skip(self) -> None:
        self.skipped += 1

    def fail(self, instance: tuple[str, ...], detail: str) -> None:
        if self.witness is None:
            self.witness = Witness(instance, detail)
        self.failed += 1

    def check(self, condition: bool, instance: tuple[str, ...], detail: str) -> None:
        if condition:
            self.ok()
        else:
            self.fail(instance, detail)

    def entry(self) -> CheckEntry:
        if self.failed:
            status = FAIL
        elif self.skipped:
            status = SKIPPED
        else:
            status = PASS
        return CheckEntry(self.name, status, self.passed, self.failed, self.skipped, self.witness)


def check_axioms(ring: FusionRing) -> CheckReport:
    """Run every ring identity; returns one entry per named check.

    Checks, in order: unit law; duality pairing m(1,ab)=[b=a*]; associativity;
    degree homomorphism; dual compatibility (ab)* = b*a*; Frobenius
    reciprocity m(x,ab)=m(a*,bx*)=m(a,xb*); grouplike rule m(g,ab)=[b=a*g].
    """
    entries = [
        _unit_law(ring),
        _duality_pairing(ring),
        _associativity(ring),
        _degree_homomorphism(ring),
        _dual_compatibility(ring),
        _frobenius(ring),
        _grouplike_rule(ring),
    ]
    return CheckReport(ring.name, tuple(entries))


def _pairs(ring: FusionRing) -> Iterator[tuple[int, int]]:
    r = ring.rank
    for a in range(r):
        for b in range(r):
            yield a, b


def _unit_law(ring: FusionRing) -> CheckEntry:
    t = _Tally("unit_law")
    u = ring.unit_index
    for i in range(ring.rank):
        for a, b in ((u, i), (i, u)):
            row = ring.product_row(a, b)
            if row is None:
                t.skip()
                continue
            expect = tuple(1 if c == i else 0 for c in range(ring.rank))
            t.check(
                row == expect,
                (ring.label(a), ring.label(b)),
                f"unit row {ring.label(a)}*{ring.label(b)} = {row}, expected delta at {ring.label(i)}",
            )
    return t.entry()


def _duality_pairing(ring: FusionRing) -> CheckEntry:
    t = _Tally("duality_pairing")
    u = ring.unit_index
    for a, b in _pairs(ring):
        row = ring.product_row(a, b)
        if row is None:
            t.skip()
            continue
        expect = 1 if b == ring.dual_index(a) else 0
        t.check(
            row[u] == expect,
            (ring.label(a), ring.label(b)),
            f"m(1, {ring.label(a)}*{ring.label(b)}) = {row[u]}, expected {expect}",
        )
    return t.entry()


def _associativity(ring: FusionRing) -> CheckEntry:
    t = _Tally("associativity")
    r = ring.rank

    def expand(outer, pick_row):
        # sum of m * pick_row(t) over the support of the outer row
        acc = [0] * r
        for k, m in enumerate(outer):
            if not m:
                continue
            row = pick_row(k)
            if row is None:
                return None
            for c, n in enumerate(row):
                if n:
                    acc[c] += m * n
        return acc

    for a in range(r):
        for b in range(r):
            ab = ring.product_row(a, b)
            for c in range(r):
                bc = ring.product_row(b, c)
                if ab is None or bc is None:
                    t.skip()
                    continue
                lhs = expand(ab, lambda k: ring.product_row(k, c))
                rhs = expand(bc, lambda k: ring.product_row(a, k))
                if lhs is None or rhs is None:
                    t.skip()
                    continue
                if lhs == rhs:
                    t.ok()
                else:
                    t.fail(
                        (ring.label(a), ring.label(b), ring.label(c)),
                        f"({ring.label(a)}{ring.label(b)}){ring.label(c)} = {_fmt(ring, lhs)} but "
                        f"{ring.label(a)}({ring.label(b)}{ring.label(c)}) = {_fmt(ring, rhs)}",
                    )
    return t.entry()


def _fmt(ring: FusionRing, vec) -> str:
    terms = [
        ring.label(c) if m == 1 else f"{m}*{ring.label(c)}"
        for c, m in enumerate(vec)
        if m
    ]
    return " + ".join(terms) if terms else "0"


def _degree_homomorphism(ring: FusionRing) -> CheckEntry:
    t = _Tally("degree_homomorphism")
    for a, b in _pairs(ring):
        row = ring.product_row(a, b)
        if row is None:
            t.skip()
            continue
        total = sum(n * ring.degree_of(c) for c, n in enumerate(row))
        expect = ring.degree_of(a) * ring.degree_of(b)
        t.check(
            total == expect,
            (ring.label(a), ring.label(b)),
            f"deg({ring.label(a)}*{ring.label(b)}) sums to {total}, expected {expect}",
        )
    return t.entry()


def _dual_compatibility(ring: FusionRing) -> CheckEntry:
    t = _Tally("dual_compatibility")
    for a, b in _pairs(ring):
        row = ring.product_row(a, b)
        mirror = ring.product_row(ring.dual_index(b), ring.dual_index(a))
        if row is None or mirror is None:
            t.skip()
            continue
        ok = all(row[c] == mirror[ring.dual_index(c)] for c in range(ring.rank))
        t.check(
            ok,
            (ring.label(a), ring.label(b)),
            f"({ring.label(a)}{ring.label(b)})* != {ring.label(ring.dual_index(b))}{ring.label(ring.dual_index(a))}",
        )
    return t.entry()


def _frobenius(ring: FusionRing) -> CheckEntry:
    t = _Tally("frobenius_reciprocity")
    r = ring.rank
    for y in range(r):
        for z in range(r):
            row_yz = ring.product_row(y, z)
            for x in range(r):
                row_zxd = ring.product_row(z, ring.dual_index(x))
                row_xzd = ring.product_row(x, ring.dual_index(z))
                if row_yz is None or row_zxd is None or row_xzd is None:
                    t.skip()
                    continue
                v1 = row_yz[x]
                v2 = row_zxd[ring.dual_index(y)]
                v3 = row_xzd[y]
                if v1 == v2 == v3:
                    t.ok()
                else:
                    t.fail(
                        (ring.label(y), ring.label(z), ring.label(x)),
                        f"m({ring.label(x)},{ring.label(y)}{ring.label(z)})={v1}, "
                        f"m({ring.label(y)}*,{ring.label(z)}{ring.label(x)}*)={v2}, "
                        f"m({ring.label(y)},{ring.label(x)}{ring.label(z)}*)={v3}",
                    )
    return t.entry()


def _grouplike_rule(ring: FusionRing) -> CheckEntry:
    t = _Tally("grouplike_rule")
    grouplikes = ring.grouplike_indices()
    for a, b in _pairs(ring):
        row = ring.product_row(a, b)
        for g in grouplikes:
            translate = ring.basic_product(ring.dual_index(a), g)
            if row is None or translate is None:
                t.skip()
                continue
            expect = 1 if translate == ring.element(ring.label(b)) else 0
            t.check(
                row[g] == expect,
                (ring.label(g), ring.label(a), ring.label(b)),
                f"m({ring.label(g)},{ring.label(a)}{ring.label(b)}) = {row[g]}, expected {expect}",
            )
    return t.entry()


def check_stabilizer_rule(ring: FusionRing, x_label: str) -> CheckReport:
    """Stabilizer law for one basic element x.

    Verifies m(g,xx*) is 0 or 1, that m(g,xx*)=1 exactly when gx=x, that the
    fixing grouplikes form a product-closed set containing the unit, and that
    their number is at most deg(x)^2.  Requires the product x*x* to be Known.
    """
    x = ring.index(x_label)
    xd = ring.dual_index(x)
    row = ring.product_row(x, xd)
    if row is None:
        raise UnknownProduct(f"product {x_label}*{ring.label(xd)} is Unknown")

    grouplikes = ring.grouplike_indices()
    mult_range = _Tally("stabilizer_multiplicity_range")
    fixes = _Tally("stabilizer_fixes_iff_multiplicity")
    for g in grouplikes:
        m = row[g]
        mult_range.check(
            m in (0, 1),
            (ring.label(g), x_label),
            f"m({ring.label(g)},{x_label}{ring.label(xd)}) = {m}, expected 0 or 1",
        )
        gx = ring.basic_product(g, x)
        if gx is None:
            fixes.skip()
            continue
        fixed = gx == ring.element(x_label)
        fixes.check(
            (m == 1) == fixed,
            (ring.label(g), x_label),
            f"m({ring.label(g)},{x_label}{ring.label(xd)}) = {m} but "
            f"{ring.label(g)}*{x_label} {'=' if fixed else '!='} {x_label}",
        )

    stab = [g for g in grouplikes if row[g] == 1]
    closure = _Tally("stabilizer_subgroup")
    u = ring.unit_index
    closure.check(u in stab, (x_label,), f"unit not in stabilizer of {x_label}")
    for g in stab:
        for h in stab:
            gh = ring.basic_product(g, h)
            if gh is None:
                closure.skip()
                continue
            inside = gh.is_basic() and gh.basic_index() in stab
            closure.check(
                inside,
                (ring.label(g), ring.label(h), x_label),
                f"{ring.label(g)}*{ring.label(h)} leaves the stabilizer of {x_label}",
            )

    bound = _Tally("stabilizer_order_bound")
    limit = ring.degree_of(x) ** 2
    bound.check(
        len(stab) <= limit,
        (x_label,),
        f"stabilizer of {x_label} has order {len(stab)} > deg^2 = {limit}",
    )

    return CheckReport(
        ring.name,
        (mult_range.entry(), fixes.entry(), closure.entry(), bound.entry()),
    )


def stabilizer_labels(ring: FusionRing, x_label: str) -> tuple[str, ...]:
    """Grouplikes g with m(g, x x*) = 1, from the multiplicity side."""
    x = ring.index(x_label)
    row = ring.product_row(x, ring.dual_index(x))
    if row is None:
        raise UnknownProduct(f"product {x_label}*{ring.label(ring.dual_index(x))} is Unknown")
    return tuple(ring.label(g) for g in ring.grouplike_indices() if row[g] == 1)
