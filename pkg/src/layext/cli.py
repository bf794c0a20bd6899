"""Command-line front end: parse JSON inputs, run the algebra, emit reports.

Subcommands: decompose, eval, closure, kernel, semifield, torsion-degree,
rank.  Inputs are JSON files ("-" reads stdin); output is a human-readable
report, or the machine payload with --json.  --notes adds one line per
derived field naming the operation that produced it.  Output is deterministic
byte for byte for identical inputs, and the exit code is 0 exactly when no
error occurred.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import jsonio
from .bipotent import (
    INFINITE,
    decompose_extension,
    extension_rank,
    is_bipotent_semifield,
    torsion_degree,
)
from .cancellative import kernel_contains
from .errors import LayextError, ParseError
from .tropical import LayeredElem
from .uniform import (
    essential_indices,
    eval_layered_poly,
    is_layerset_semiring,
    is_uniform_semifield,
    sort_is_semifield,
    uniform_closure,
)


@dataclass
class Session:
    """Named, immutable bindings of parsed inputs plus the command log."""

    bound: int = 8
    bindings: dict = field(default_factory=dict)
    log: list = field(default_factory=list)

    def bind(self, name: str, obj):
        if name in self.bindings:
            raise ValueError(f"binding {name!r} already exists")
        self.bindings[name] = obj
        return obj

    def record(self, command: str):
        self.log.append(command)


@dataclass
class Report:
    """A command echo, a machine-readable payload, and derivation notes."""

    command: str
    payload: dict
    notes: list

    def to_json(self) -> dict:
        return {"command": self.command, "result": self.payload, "notes": self.notes}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str, parse):
    return parse(jsonio.load_document(_read(path), source=path))


def _fin(x) -> object:
    return "infinite" if x == INFINITE else int(x)


def cmd_decompose(session: Session, args) -> Report:
    P = session.bind("presentation", _load(args.presentation, jsonio.parse_presentation))
    dec = decompose_extension(P)
    payload = {
        "free_rank": dec.free_rank,
        "torsion_orders": list(dec.torsion_orders),
        "free_monomials": [list(m) for m in dec.free_monomials],
        "torsion_monomials": [
            {"exps": list(m), "order": o}
            for m, o in zip(dec.torsion_monomials, dec.torsion_orders)
        ],
        "rank": _fin(dec.rank()),
        "generator_expressions": [
            {"free_coeffs": list(fc), "torsion_coeffs": list(tc)}
            for fc, tc in dec.generator_coords
        ],
    }
    notes = [
        "free_rank and torsion_orders come from the Smith normal form of the exponent lattice",
        "monomials are rows of the inverse column transform, one per invariant factor > 1 or free column",
        "rank is the product of the torsion orders, infinite when a free part exists",
    ]
    return Report("decompose", payload, notes)


def cmd_eval(session: Session, args) -> Report:
    f = session.bind("poly", _load(args.poly, jsonio.parse_layered_poly))
    a = session.bind("scalar", _load(args.scalar, jsonio.parse_scalar))
    layer, value = eval_layered_poly(f, a)
    ess = essential_indices(f, a)
    payload = {
        "layer": str(layer),
        "value": jsonio.render_rational(value),
        "essential": list(ess),
    }
    if isinstance(layer, Fraction):
        payload["rendered"] = str(LayeredElem(layer, value))
    notes = [
        "value is the maximum of coefficient value + exponent * scalar value",
        "layer sums coefficient layer * scalar layer^exponent over the essential exponents",
    ]
    return Report("eval", payload, notes)


def cmd_closure(session: Session, args) -> Report:
    H = session.bind("descriptor", _load(args.descriptor, jsonio.parse_descriptor))
    a = session.bind("scalar", _load(args.scalar, jsonio.parse_scalar))
    C = uniform_closure(H, a)
    payload = {
        "descriptor": jsonio.render_descriptor(C),
        "layerset_semiring": is_layerset_semiring(H, a, bound=session.bound),
    }
    notes = [
        "the closure extends the sort part by the scalar layer and the value part by the scalar value",
        "layerset_semiring is the membership of the scalar value in the base value group",
    ]
    return Report("closure", payload, notes)


def cmd_kernel(session: Session, args) -> Report:
    a = session.bind("a", _load(args.numerator, jsonio.parse_pos_poly))
    b = session.bind("b", _load(args.denominator, jsonio.parse_pos_poly))
    gen = session.bind("generator", _load(args.generator, jsonio.parse_generator))
    payload = {"in_kernel": kernel_contains(a, b, gen)}
    notes = ["membership holds when the minimal polynomial divides numerator - denominator"]
    return Report("kernel", payload, notes)


def cmd_semifield(session: Session, args) -> Report:
    H = session.bind("descriptor", _load(args.descriptor, jsonio.parse_descriptor))
    payload = {
        "semifield": is_uniform_semifield(H),
        "sort_part_semifield": sort_is_semifield(H.sort_part),
        "value_part_semifield": is_bipotent_semifield(H.value_part),
        "value_part_rank": _fin(extension_rank(H.value_part)),
    }
    notes = [
        "a uniform layered domain is a semifield when both its parts are",
        "the value part qualifies exactly when its quotient group is finite (all generators torsion)",
    ]
    return Report("semifield", payload, notes)


def _parse_exps(text: str, n: int) -> tuple:
    try:
        exps = tuple(int(x) for x in text.split(",")) if text else ()
    except ValueError:
        raise ParseError(f"bad exponent list {text!r}") from None
    if len(exps) != n:
        raise ParseError(f"expected {n} exponents, got {len(exps)}")
    return exps


def cmd_torsion_degree(session: Session, args) -> Report:
    P = session.bind("presentation", _load(args.presentation, jsonio.parse_presentation))
    exps = _parse_exps(args.exps, P.n)
    payload = {"degree": _fin(torsion_degree(P, exps))}
    notes = ["the degree is the order of the monomial class in the quotient by the exponent lattice"]
    return Report("torsion-degree", payload, notes)


def cmd_rank(session: Session, args) -> Report:
    P = session.bind("presentation", _load(args.presentation, jsonio.parse_presentation))
    over = ()
    if args.over:
        try:
            over = tuple(int(x) for x in args.over.split(","))
        except ValueError:
            raise ParseError(f"bad index list {args.over!r}") from None
        if any(i < 0 or i >= P.n for i in over):
            raise ParseError("subset indices out of range")
    payload = {"rank": _fin(extension_rank(P, over=over))}
    notes = ["the rank is the size of the quotient group over the chosen sub-extension"]
    return Report("rank", payload, notes)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset by
    # the subparser's own defaults
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the machine-readable report")
    common.add_argument("--notes", action="store_true", default=argparse.SUPPRESS,
                        help="include derivation notes")
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="sample bound for witness checks (default 8)")

    ap = argparse.ArgumentParser(
        prog="layext",
        description="exact computations in layered (max-plus) semifield extensions",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="free/torsion decomposition of a bipotent presentation")
    p.add_argument("presentation")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("eval", parents=[common], help="evaluate a layered polynomial at a scalar")
    p.add_argument("poly")
    p.add_argument("scalar")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("closure", parents=[common],
                       help="uniform closure of a descriptor by a scalar")
    p.add_argument("descriptor")
    p.add_argument("scalar")
    p.set_defaults(run=cmd_closure)

    p = sub.add_parser("kernel", parents=[common],
                       help="kernel membership of a quotient of positive polynomials")
    p.add_argument("numerator")
    p.add_argument("denominator")
    p.add_argument("generator")
    p.set_defaults(run=cmd_kernel)

    p = sub.add_parser("semifield", parents=[common], help="semifield test for a uniform descriptor")
    p.add_argument("descriptor")
    p.set_defaults(run=cmd_semifield)

    p = sub.add_parser("torsion-degree", parents=[common],
                       help="minimal power of a monomial landing in the base")
    p.add_argument("presentation")
    p.add_argument("--exps", required=True, help="comma-separated exponent vector")
    p.set_defaults(run=cmd_torsion_degree)

    p = sub.add_parser("rank", parents=[common], help="extension rank over a sub-presentation")
    p.add_argument("presentation")
    p.add_argument("--over", default="", help="comma-separated generator indices of the sub-extension")
    p.set_defaults(run=cmd_rank)

    return ap


def _emit(report: Report, args, out):
    if args.json:
        doc = report.to_json()
        if not args.notes:
            doc.pop("notes")
        out.write(json.dumps(doc, sort_keys=True, separators=(", ", ": ")) + "\n")
        return
    out.write(f"command: {report.command}\n")
    for key, val in report.payload.items():
        if isinstance(val, (dict, list)):
            out.write(f"{key}: {json.dumps(val, sort_keys=True)}\n")
        else:
            out.write(f"{key}: {val}\n")
    if args.notes:
        for note in report.notes:
            out.write(f"note: {note}\n")


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = build_parser()
    args = ap.parse_args(argv)
    for name, default in (("json", False), ("notes", False), ("bound", 8)):
        if not hasattr(args, name):
            setattr(args, name, default)
    session = Session(bound=args.bound)
    session.record(" ".join(argv if argv is not None else sys.argv[1:]))
    try:
        report = args.run(session, args)
    except LayextError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 1
    _emit(report, args, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
