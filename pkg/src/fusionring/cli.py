"""Command-line surface: check, verdict, ladder, subrings, search, gen.

Exit codes: 0 = report computed with no failures; 1 = at least one
Fail/violation/obstruction (or an unmet mathematical precondition) in the
report; 2 = usage or input error.  Reports are deterministic: identical
inputs produce byte-identical output, in text or JSON
(``--format json``, stable schema ``fusionring-report/1``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .axioms import check_axioms, check_stabilizer_rule
from .chartable import char_table_ring, parse_character_table
from .oracles import cyclic_group_ring, fragment_ring, so3_truncated
from .ring import FusionRing, FusionRingError, PreconditionUnmet, UnknownProduct
from .search import enumerate_rings
from .specfmt import RingSemanticError, RingSyntaxError, parse_spec, write_spec
from .subrings import enumerate_standard_subrings, freeness_obstructions
from .ladder import TruncationReached, ladder_build, dichotomy_verdict

SCHEMA = "fusionring-report/1"


class _InputError(Exception):
    pass


def _read_ring(path: str) -> FusionRing:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_spec(text)
    except (RingSyntaxError, RingSemanticError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return "\n".join(text_lines) + "\n"


def _cmd_check(args) -> tuple[int, str]:
    ring = _read_ring(args.file)
    report = check_axioms(ring)
    lines = [f"ring {ring.name}: axiom checks"]
    for e in report.entries:
        lines.append(f"  {e.name}: {e.status} (pass {e.passed}, fail {e.failed}, skip {e.skipped})")
        if e.witness:
            lines.append(f"    witness: {e.witness.detail}")
    stab_reports = []
    failed = report.has_failures
    for b in ring.elements:
        try:
            stab = check_stabilizer_rule(ring, b.label)
        except UnknownProduct:
            lines.append(f"  stabilizer[{b.label}]: skipped-unknown")
            stab_reports.append({"element": b.label, "status": "skipped-unknown"})
            continue
        status = "fail" if stab.has_failures else ("pass" if stab.all_pass else "skipped-unknown")
        failed = failed or stab.has_failures
        lines.append(f"  stabilizer[{b.label}]: {status}")
        for e in stab.entries:
            if e.witness:
                lines.append(f"    {e.name}: {e.witness.detail}")
        stab_reports.append({"element": b.label, "status": status, "checks": stab.as_dict()["checks"]})
    code = 1 if failed else 0
    payload = {
        "schema": SCHEMA,
        "command": "check",
        "ring": ring.name,
        "exit_code": code,
        "axioms": report.as_dict()["checks"],
        "stabilizers": stab_reports,
    }
    lines.append("FAIL" if failed else "OK")
    return code, _emit(payload, args.format, lines)


def _cmd_verdict(args) -> tuple[int, str]:
    ring = _read_ring(args.file)
    verdict = dichotomy_verdict(ring, max_depth=args.depth)
    lines = [f"ring {ring.name}: verdict {verdict.kind}"]
    if verdict.kind == "grouplike":
        lines.append(f"  grouplike {verdict.grouplike} of order {verdict.order}")
        if verdict.dimension is not None:
            word = "divisible" if verdict.divisible_by_3 else "NOT divisible"
            lines.append(f"  dimension {verdict.dimension} is odd and {word} by 3")
    elif verdict.kind == "ladder":
        cert = verdict.certificate
        lines.append(f"  ladder depth {cert.depth_reached}")
        lines.append(f"  x family: {' '.join(cert.x_family)}")
        lines.append(f"  x' family: {' '.join(cert.xprime_family)}")
    elif verdict.kind == "obstruction":
        lines.append(f"  {verdict.detail}")
    code = 1 if verdict.kind == "obstruction" else 0
    payload = {
        "schema": SCHEMA,
        "command": "verdict",
        "ring": ring.name,
        "exit_code": code,
        "verdict": verdict.as_dict(),
    }
    return code, _emit(payload, args.format, lines)


def _cmd_ladder(args) -> tuple[int, str]:
    ring = _read_ring(args.file)
    try:
        cert = ladder_build(ring, args.x3, max_depth=args.depth)
    except (PreconditionUnmet, FusionRingError) as exc:
        payload = {
            "schema": SCHEMA,
            "command": "ladder",
            "ring": ring.name,
            "exit_code": 1,
            "error": str(exc),
        }
        return 1, _emit(payload, args.format, [f"ring {ring.name}: ladder error: {exc}"])
    lines = [f"ring {ring.name}: ladder from {args.x3}, depth {cert.depth_reached}"]
    for n, decomp in cert.relations:
        terms = " + ".join(lab if m == 1 else f"{m}*{lab}" for lab, m in decomp)
        lines.append(f"  x_{2 * n + 1} * x_3 = {terms}")
    terminal = cert.terminal_status
    if isinstance(terminal, TruncationReached):
        lines.append(f"  truncation reached at depth {terminal.depth}")
        code = 0
    else:
        lines.append(f"  failure branch: {terminal.kind}: {terminal.diagnosis}")
        code = 0 if terminal.kind == "grouplike_order2" else 1
    payload = {
        "schema": SCHEMA,
        "command": "ladder",
        "ring": ring.name,
        "exit_code": code,
        "certificate": cert.as_dict(),
    }
    return code, _emit(payload, args.format, lines)


def _cmd_subrings(args) -> tuple[int, str]:
    ring = _read_ring(args.file)
    subs = enumerate_standard_subrings(ring, allow_incomplete=ring.is_partial)
    violations = freeness_obstructions(ring, subs)
    lines = [f"ring {ring.name}: {len(subs)} dual-closed standard subrings"]
    for s in subs:
        lines.append(f"  dimension {s.hopf_dimension}: {{{', '.join(s.members)}}}")
    if violations:
        lines.append("realizability obstructions (nested dimensions fail to divide):")
        for small, big in violations:
            lines.append(
                f"  {small.hopf_dimension} does not divide {big.hopf_dimension}"
            )
    code = 1 if violations else 0
    payload = {
        "schema": SCHEMA,
        "command": "subrings",
        "ring": ring.name,
        "exit_code": code,
        "subrings": [s.as_dict() for s in subs],
        "violations": [
            [small.hopf_dimension, big.hopf_dimension] for small, big in violations
        ],
    }
    return code, _emit(payload, args.format, lines)


def _cmd_search(args) -> tuple[int, str]:
    try:
        degrees = [int(tok) for tok in args.degrees.split(",") if tok]
    except ValueError as exc:
        raise _InputError(f"--degrees: {exc}") from exc
    rings = enumerate_rings(degrees, args.max_mult, workers=args.workers)
    specs = [write_spec(r) for r in rings]
    lines = [f"# {len(rings)} ring(s) with degrees {sorted(degrees)}"]
    for spec in specs:
        lines.append("")
        lines.append(spec.rstrip("\n"))
    payload = {
        "schema": SCHEMA,
        "command": "search",
        "exit_code": 0,
        "count": len(rings),
        "rings": specs,
    }
    return 0, _emit(payload, args.format, lines)


def _cmd_gen(args) -> tuple[int, str]:
    kind = args.what[0]
    if kind == "cyclic":
        if len(args.what) != 2:
            raise _InputError("gen cyclic needs an order, e.g. gen cyclic 5")
        try:
            ring = cyclic_group_ring(int(args.what[1]))
        except ValueError as exc:
            raise _InputError(f"gen cyclic: {exc}") from exc
    elif kind == "so3":
        if len(args.what) != 2:
            raise _InputError("gen so3 needs an odd max degree, e.g. gen so3 21")
        try:
            ring = so3_truncated(int(args.what[1]))
        except ValueError as exc:
            raise _InputError(f"gen so3: {exc}") from exc
    elif kind == "fragment":
        ring = fragment_ring()
    elif kind == "chartable":
        if len(args.what) != 2:
            raise _InputError("gen chartable needs a table file")
        try:
            with open(args.what[1], "r", encoding="utf-8") as fh:
                table = parse_character_table(fh.read())
        except OSError as exc:
            raise _InputError(f"cannot read {args.what[1]}: {exc.strerror or exc}") from exc
        except (ValueError, FusionRingError) as exc:
            raise _InputError(f"{args.what[1]}: {exc}") from exc
        ring = char_table_ring(table)
    else:
        raise _InputError(f"gen: unknown generator {kind!r} (cyclic|so3|fragment|chartable)")
    spec = write_spec(ring)
    payload = {
        "schema": SCHEMA,
        "command": "gen",
        "exit_code": 0,
        "ring": ring.name,
        "spec": spec,
    }
    return 0, _emit(payload, args.format, [spec.rstrip("\n")])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="Exact fusion-ring checks, subring obstructions, and ladder analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    parser.add_argument(
        "--seed-order",
        choices=("canonical",),
        default="canonical",
        help="iteration order (fixed; flag reserved)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run axiom and stabilizer checks on a ring file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verdict", help="degree-3 dichotomy verdict for a ring file")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=None, help="cap on verified ladder relations")
    p.set_defaults(func=_cmd_verdict)

    p = sub.add_parser("ladder", help="build the odd-degree ladder certificate")
    p.add_argument("file")
    p.add_argument("--x3", required=True, help="label of the self-dual degree-3 element")
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(func=_cmd_ladder)

    p = sub.add_parser("subrings", help="enumerate standard subrings and divisibility obstructions")
    p.add_argument("file")
    p.set_defaults(func=_cmd_subrings)

    p = sub.add_parser("search", help="enumerate rings with prescribed degrees")
    p.add_argument("--degrees", required=True, help="comma-separated degree list, e.g. 1,1,1,3")
    p.add_argument("--max-mult", type=int, default=3, dest="max_mult")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default FUSIONRING_THREADS or CPU count)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("gen", help="generate a ring spec: cyclic N | so3 MAXDEG | fragment | chartable FILE")
    p.add_argument("what", nargs="+")
    p.set_defaults(func=_cmd_gen)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, output = args.func(args)
    except _InputError as exc:
        print(f"fusionring: {exc}", file=sys.stderr)
        return 2
    except (RingSyntaxError, RingSemanticError) as exc:
        print(f"fusionring: {exc}", file=sys.stderr)
        return 2
    except FusionRingError as exc:
        print(f"fusionring: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return code


def main() -> None:
    sys.exit(run())
