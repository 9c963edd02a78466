"""Line-oriented text format for fusion rings, with a strict round trip.

::

    ring <name>
    partial <true|false>          # default false
    truncation <odd integer>      # optional
    basis <label> <degree> <dual-label>
    unit <label>
    prod <a> <b> : <label> <mult> [, <label> <mult>]*

``#`` starts a comment.  Unit rows are implied and never written.  Omitted
non-unit pairs are Unknown when partial, an error otherwise.  Parsing
validates label uniqueness, the dual involution, and per-row degree sums
at load time; writing emits canonical order so parse(write(r)) == r and
write(parse(write(r))) is byte-identical.
"""

from __future__ import annotations

import re
from typing import Optional

from .ring import LABEL_RE, FusionRing, FusionRingError, InvalidRing, build_ring


class RingSyntaxError(FusionRingError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class RingSemanticError(FusionRingError):
    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line
        self.message = message


_TOKEN_RE = re.compile(r"\S+")


def _tokenize(line: str) -> list[tuple[str, int]]:
    """(token, 1-based column) pairs, comments stripped."""
    code = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(code)]


def parse_spec(text: str) -> FusionRing:
    """Parse the ring spec format into a FusionRing."""
    name: Optional[str] = None
    partial = False
    truncation: Optional[int] = None
    basis: list[tuple[str, int, str]] = []
    basis_lines: dict[str, int] = {}
    unit: Optional[str] = None
    rows: dict[tuple[str, str], dict[str, int]] = {}
    row_lines: dict[tuple[str, str], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        head, col = tokens[0]

        def need(k: int) -> tuple[str, int]:
            if k >= len(tokens):
                raise RingSyntaxError(lineno, len(raw) + 1, f"{head}: missing token {k}")
            return tokens[k]

        if head == "ring":
            if name is not None:
                raise RingSemanticError("duplicate ring line", lineno)
            name = need(1)[0]
        elif head == "partial":
            value, vcol = need(1)
            if value not in ("true", "false"):
                raise RingSyntaxError(lineno, vcol, f"partial must be true or false, got {value!r}")
            partial = value == "true"
        elif head == "truncation":
            value, vcol = need(1)
            if not value.isdigit() or int(value) % 2 == 0:
                raise RingSyntaxError(lineno, vcol, f"truncation must be an odd integer, got {value!r}")
            truncation = int(value)
        elif head == "basis":
            label, lcol = need(1)
            degree_s, dcol = need(2)
            dual, _ = need(3)
            if not LABEL_RE.match(label):
                raise RingSyntaxError(lineno, lcol, f"bad label {label!r}")
            if not degree_s.isdigit() or int(degree_s) < 1:
                raise RingSyntaxError(lineno, dcol, f"degree must be a positive integer, got {degree_s!r}")
            if label in basis_lines:
                raise RingSemanticError(f"duplicate basis label {label!r}", lineno)
            basis_lines[label] = lineno
            basis.append((label, int(degree_s), dual))
        elif head == "unit":
            if unit is not None:
                raise RingSemanticError("duplicate unit line", lineno)
            unit = need(1)[0]
        elif head == "prod":
            a, _ = need(1)
            b, _ = need(2)
            colon, ccol = need(3)
            if colon != ":":
                raise RingSyntaxError(lineno, ccol, f"expected ':', got {colon!r}")
            terms = tokens[4:]
            if not terms:
                raise RingSyntaxError(lineno, len(raw) + 1, "product row has no terms")
            row: dict[str, int] = {}
            # terms come as label mult pairs, comma-separated
            flat: list[tuple[str, int]] = []
            for tok, tcol in terms:
                for piece in tok.split(","):
                    if piece:
                        flat.append((piece, tcol))
            if len(flat) % 2 != 0:
                raise RingSyntaxError(lineno, flat[-1][1], "product terms must be label/multiplicity pairs")
            for k in range(0, len(flat), 2):
                lab, lcol = flat[k]
                mult_s, mcol = flat[k + 1]
                if not LABEL_RE.match(lab):
                    raise RingSyntaxError(lineno, lcol, f"bad label {lab!r}")
                if not mult_s.isdigit() or int(mult_s) < 1:
                    raise RingSyntaxError(lineno, mcol, f"multiplicity must be a positive integer, got {mult_s!r}")
                if lab in row:
                    raise RingSemanticError(f"label {lab!r} repeated in product row ({a},{b})", lineno)
                row[lab] = int(mult_s)
            if (a, b) in rows:
                raise RingSemanticError(f"duplicate product line ({a},{b})", lineno)
            rows[(a, b)] = row
            row_lines[(a, b)] = lineno
        else:
            raise RingSyntaxError(lineno, col, f"unknown directive {head!r}")

    if name is None:
        raise RingSemanticError("missing ring line")
    if not basis:
        raise RingSemanticError("no basis lines")
    if unit is None:
        raise RingSemanticError("missing unit line")

    labels = {lab for lab, _, _ in basis}
    degrees = {lab: deg for lab, deg, _ in basis}
    for lab, _, dual in basis:
        if dual not in labels:
            raise RingSemanticError(
                f"dangling dual label {dual!r} on basis element {lab!r}", basis_lines[lab]
            )
    if unit not in labels:
        raise RingSemanticError(f"unit label {unit!r} has no basis line")

    for (a, b), row in rows.items():
        lineno = row_lines[(a, b)]
        for lab in (a, b, *row):
            if lab not in labels:
                raise RingSemanticError(f"product row ({a},{b}) references unknown label {lab!r}", lineno)
        total = sum(m * degrees[lab] for lab, m in row.items())
        expect = degrees[a] * degrees[b]
        if total != expect:
            raise RingSemanticError(
                f"degree sum of product row ({a},{b}) is {total}, expected {expect}", lineno
            )

    if not partial:
        for a in sorted(labels):
            for b in sorted(labels):
                if a == unit or b == unit:
                    continue
                if (a, b) not in rows:
                    raise RingSemanticError(
                        f"missing product row ({a},{b}) in a complete (partial false) ring"
                    )

    try:
        return build_ring(name, basis, unit, rows, truncation_bound=truncation)
    except InvalidRing as exc:
        raise RingSemanticError(str(exc)) from exc


def write_spec(ring: FusionRing) -> str:
    """Canonical text form of a ring; inverse of parse_spec."""
    lines = [f"ring {ring.name}"]
    if ring.is_partial:
        lines.append("partial true")
    if ring.truncation_bound is not None:
        lines.append(f"truncation {ring.truncation_bound}")
    for b in ring.elements:
        lines.append(f"basis {b.label} {b.degree} {b.dual_label}")
    lines.append(f"unit {ring.label(ring.unit_index)}")
    u = ring.unit_index
    for i, j in ring.known_pairs():
        if i == u or j == u:
            continue
        row = ring.product_row(i, j)
        terms = [
            f"{ring.label(c)} {m}" for c, m in enumerate(row) if m
        ]
        lines.append(f"prod {ring.label(i)} {ring.label(j)} : " + ", ".join(terms))
    return "\n".join(lines) + "\n"
