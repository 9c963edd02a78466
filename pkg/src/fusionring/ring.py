"""Exact integer arithmetic for fusion rings.

A fusion ring here is a free abelian group on a finite ordered basis of
labelled elements, each carrying a positive integer degree and a dual
partner, together with nonnegative-integer structure constants
``N[a][b][c] = m(c, a*b)``.  Rings may be *partial*: the decomposition of a
product pair is either fully known or marked Unknown (``None``), never
guessed.  All coefficients are checked against the signed 64-bit range so
that an overflow is a loud error instead of silent nonsense.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class FusionRingError(Exception):
    """Base class for all errors raised by this package."""


class UnknownLabel(FusionRingError):
    """A label does not name a basis element of the ring."""


class OverflowDetected(FusionRingError):
    """A coefficient left the checked 64-bit range."""


class UnknownProduct(FusionRingError):
    """An operation needed a product the (partial) ring does not know."""


class InvalidRing(FusionRingError):
    """Ring construction data is structurally malformed."""


class NotClosed(FusionRingError):
    """A set expected to be a group under the product is not."""


class RankTooLarge(FusionRingError):
    """The basis rank exceeds a configured enumeration bound."""


class PreconditionUnmet(FusionRingError):
    """An operation's stated precondition does not hold for the input."""


def _check64(value: int) -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise OverflowDetected(f"coefficient {value} exceeds checked 64-bit range")
    return value


@dataclass(frozen=True)
class BasisElement:
    """One basis label with its degree and the label of its dual."""

    label: str
    degree: int
    dual_label: str


class RingElement:
    """Sparse integer coordinate vector over a ring's basis.

    Supports the table-free abelian-group operations (``+``, ``-``, integer
    scaling); multiplication lives on :meth:`FusionRing.multiply` because it
    may be Unknown on partial rings.
    """

    __slots__ = ("ring", "_coords")

    def __init__(self, ring: "FusionRing", coords: Mapping[int, int]):
        self.ring = ring
        self._coords = {i: _check64(v) for i, v in coords.items() if v != 0}

    def coefficient(self, index: int) -> int:
        return self._coords.get(index, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coords.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coords))

    def is_zero(self) -> bool:
        return not self._coords

    def is_nonnegative(self) -> bool:
        """True iff every coefficient is >= 0 (the positivity cone)."""
        return all(v >= 0 for v in self._coords.values())

    def is_basic(self) -> bool:
        """True iff the element is a single basis vector with coefficient 1."""
        return len(self._coords) == 1 and next(iter(self._coords.values())) == 1

    def basic_index(self) -> int:
        if not self.is_basic():
            raise ValueError("element is not basic")
        return next(iter(self._coords))

    def _check_same_ring(self, other: "RingElement") -> None:
        if self.ring is not other.ring:
            raise FusionRingError("elements belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_same_ring(other)
        coords = dict(self._coords)
        for i, v in other._coords.items():
            coords[i] = _check64(coords.get(i, 0) + v)
        return RingElement(self.ring, coords)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, {i: -v for i, v in self._coords.items()})

    def __rmul__(self, scalar: int) -> "RingElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return RingElement(self.ring, {i: _check64(scalar * v) for i, v in self._coords.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self._coords == other._coords

    def __hash__(self) -> int:
        return hash((id(self.ring), tuple(sorted(self._coords.items()))))

    def __repr__(self) -> str:
        if not self._coords:
            return "0"
        parts = []
        for i, v in sorted(self._coords.items()):
            label = self.ring.label(i)
            if v == 1:
                parts.append(label)
            else:
                parts.append(f"{v}*{label}")
        return " + ".join(parts).replace("+ -", "- ")


ProductTable = Mapping[tuple[str, str], Mapping[str, int]]


class FusionRing:
    """Immutable fusion ring on a canonically ordered basis.

    The basis is sorted by ``(degree, label)`` at construction; every report
    and iteration order downstream derives from that ordering, which keeps
    all outputs deterministic.  Construction validates *structure* (label
    syntax and uniqueness, dual involution, unit shape, coefficient ranges);
    the arithmetic identities a genuine fusion ring must satisfy are the
    axiom checker's job, so deliberately corrupt rings can be built for
    diagnosis.
    """

    def __init__(
        self,
        name: str,
        basis: Iterable[BasisElement],
        unit_label: str,
        products: ProductTable,
        truncation_bound: Optional[int] = None,
    ):
        self.name = name
        elements = sorted(basis, key=lambda b: (b.degree, b.label))
        if not elements:
            raise InvalidRing("basis is empty")
        labels = [b.label for b in elements]
        if len(set(labels)) != len(labels):
            raise InvalidRing("duplicate basis labels")
        for b in elements:
            if not LABEL_RE.match(b.label):
                raise InvalidRing(f"bad label {b.label!r}: must match [A-Za-z0-9_]+")
            if not isinstance(b.degree, int) or b.degree < 1:
                raise InvalidRing(f"degree of {b.label} must be a positive integer")
        self._elements: tuple[BasisElement, ...] = tuple(elements)
        self._index: dict[str, int] = {b.label: i for i, b in enumerate(elements)}

        dual = []
        for b in elements:
            j = self._index.get(b.dual_label)
            if j is None:
                raise InvalidRing(f"dangling dual label {b.dual_label!r} on {b.label}")
            dual.append(j)
        self._dual: tuple[int, ...] = tuple(dual)
        for i, j in enumerate(self._dual):
            if self._dual[j] != i:
                raise InvalidRing(f"dual map is not an involution at {labels[i]}")
            if self._elements[i].degree != self._elements[j].degree:
                raise InvalidRing(f"dual does not preserve degree at {labels[i]}")

        u = self._index.get(unit_label)
        if u is None:
            raise InvalidRing(f"unit label {unit_label!r} not in basis")
        if self._elements[u].degree != 1:
            raise InvalidRing("unit must have degree 1")
        if self._dual[u] != u:
            raise InvalidRing("unit must be self-dual")
        self._unit = u

        if truncation_bound is not None and (not isinstance(truncation_bound, int) or truncation_bound < 1):
            raise InvalidRing("truncation bound must be a positive integer")
        self.truncation_bound = truncation_bound

        rank = len(elements)
        table: dict[tuple[int, int], tuple[int, ...]] = {}
        for (a_lab, b_lab), row in products.items():
            ia = self._index.get(a_lab)
            ib = self._index.get(b_lab)
            if ia is None or ib is None:
                raise InvalidRing(f"product row ({a_lab},{b_lab}) references unknown label")
            vec = [0] * rank
            for c_lab, mult in row.items():
                ic = self._index.get(c_lab)
                if ic is None:
                    raise InvalidRing(f"product row ({a_lab},{b_lab}) targets unknown label {c_lab!r}")
                if not isinstance(mult, int) or mult < 0:
                    raise InvalidRing(f"multiplicity of {c_lab} in ({a_lab},{b_lab}) must be a nonnegative integer")
                vec[ic] = _check64(mult)
            key = (ia, ib)
            if key in table:
                raise InvalidRing(f"duplicate product row ({a_lab},{b_lab})")
            table[key] = tuple(vec)

        # Unit rows are implied by the unit law; explicit ones must agree.
        for i in range(rank):
            for key, expect in (((u, i), i), ((i, u), i)):
                implied = tuple(1 if k == expect else 0 for k in range(rank))
                if key in table:
                    if table[key] != implied:
                        raise InvalidRing(f"explicit unit row {key} contradicts the unit law")
                else:
                    table[key] = implied
        self._table = table

    # -- basis access -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> tuple[BasisElement, ...]:
        return self._elements

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self._elements)

    @property
    def unit_index(self) -> int:
        return self._unit

    def index(self, label: str) -> int:
        i = self._index.get(label)
        if i is None:
            raise UnknownLabel(f"no basis element labelled {label!r} in ring {self.name!r}")
        return i

    def label(self, index: int) -> str:
        return self._elements[index].label

    def degree_of(self, index: int) -> int:
        return self._elements[index].degree

    def dual_index(self, index: int) -> int:
        return self._dual[index]

    def grouplike_indices(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self._elements) if b.degree == 1)

    def dimension(self) -> int:
        """Sum of squared degrees over the represented basis."""
        return sum(b.degree**2 for b in self._elements)

    # -- partiality ---------------------------------------------------------

    def product_row(self, i: int, j: int) -> Optional[tuple[int, ...]]:
        """Structure-constant row for basic pair (i, j); None when Unknown."""
        return self._table.get((i, j))

    def known_pairs(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._table))

    def unknown_pairs(self) -> Iterator[tuple[int, int]]:
        r = self.rank
        for i in range(r):
            for j in range(r):
                if (i, j) not in self._table:
                    yield (i, j)

    @property
    def is_partial(self) -> bool:
        return len(self._table) < self.rank * self.rank

    @property
    def is_complete(self) -> bool:
        return not self.is_partial

    # -- elements and arithmetic --------------------------------------------

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def element(self, label: str) -> RingElement:
        """Basis injection: the element with coefficient 1 at ``label``."""
        return RingElement(self, {self.index(label): 1})

    def unit_element(self) -> RingElement:
        return RingElement(self, {self._unit: 1})

    def from_coords(self, coords: Mapping[str, int]) -> RingElement:
        return RingElement(self, {self.index(lab): v for lab, v in coords.items()})

    def basic_product(self, i: int, j: int) -> Optional[RingElement]:
        row = self._table.get((i, j))
        if row is None:
            return None
        return RingElement(self, {c: v for c, v in enumerate(row) if v})

    def multiply(self, a: RingElement, b: RingElement) -> Optional[RingElement]:
        """Bilinear product; None when any contributing basic pair is Unknown."""
        self._own(a)
        self._own(b)
        acc: dict[int, int] = {}
        for i, ci in a._coords.items():
            for j, cj in b._coords.items():
                row = self._table.get((i, j))
                if row is None:
                    return None
                scale = _check64(ci * cj)
                for c, n in enumerate(row):
                    if n:
                        acc[c] = _check64(acc.get(c, 0) + _check64(scale * n))
        return RingElement(self, acc)

    def multiplicity(self, w: RingElement, z: RingElement) -> int:
        """Biadditive multiplicity pairing: sum of coordinatewise products."""
        self._own(w)
        self._own(z)
        total = 0
        small, large = (w._coords, z._coords) if len(w._coords) <= len(z._coords) else (z._coords, w._coords)
        for i, v in small.items():
            total = _check64(total + _check64(v * large.get(i, 0)))
        return total

    def dual(self, z: RingElement) -> RingElement:
        self._own(z)
        return RingElement(self, {self._dual[i]: v for i, v in z._coords.items()})

    def degree(self, z: RingElement) -> int:
        self._own(z)
        total = 0
        for i, v in z._coords.items():
            total = _check64(total + _check64(v * self._elements[i].degree))
        return total

    def decompose(self, z: RingElement) -> list[tuple[str, int]]:
        """Nonzero coordinates in canonical basis order."""
        self._own(z)
        return [(self._elements[i].label, v) for i, v in sorted(z._coords.items()) if v]

    def _own(self, z: RingElement) -> None:
        if z.ring is not self:
            raise FusionRingError("element belongs to a different ring")

    # -- equality / repr ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.name == other.name
            and self._elements == other._elements
            and self._unit == other._unit
            and self._table == other._table
            and self.truncation_bound == other.truncation_bound
        )

    def __hash__(self) -> int:
        return hash((self.name, self._elements, self._unit, self.truncation_bound))

    def __repr__(self) -> str:
        kind = "partial " if self.is_partial else ""
        return f"FusionRing({self.name!r}, rank={self.rank}, {kind}dim={self.dimension()})"


def build_ring(
    name: str,
    basis: Sequence[tuple[str, int, str]],
    unit: str,
    products: ProductTable,
    truncation_bound: Optional[int] = None,
) -> FusionRing:
    """Convenience constructor from (label, degree, dual_label) triples."""
    return FusionRing(
        name,
        [BasisElement(lab, deg, dual) for lab, deg, dual in basis],
        unit,
        products,
        truncation_bound,
    )
