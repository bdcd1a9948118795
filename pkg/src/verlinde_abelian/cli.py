"""Command-line interface: ``verlinde <subcommand> ...``.

Exit codes: 0 success, 1 domain or precondition error, 2 identity or
conjecture violation, 3 usage error.  The default output format may be set
with the ``VERLINDE_FORMAT`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .arith import (
    CongruenceInstance,
    count_coordinate_solutions,
    lemma_a2_hypotheses,
    solve_congruence_pair,
)
from .errors import DomainError, IdentityViolation, VerlindeError
from .heisenberg import character_sum, character_sum_bruteforce, jordan_symbol
from .mukai import MukaiVector
from .nslattice import (
    IsogenyMatrix,
    NsClass,
    circ,
    format_fraction,
    isogeny_degree,
    mat_vec,
    pullback_matrix,
    pullback_matrix_inverse,
    quartic_form,
)
from .semihom import (
    det_triple,
    euler_triple,
    factorize,
    invert_triple,
    is_admissible,
    rank_triple,
    semihom_invariants,
)
from .suites import SUITES, run_suite
from .verlinde import (
    decompose,
    decompose_minus,
    decompose_plus,
    delta,
    slope_triple,
    strange_duality_status,
    trace,
)

EXIT_OK, EXIT_DOMAIN, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 3
FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _vector(text: str) -> MukaiVector:
    try:
        return MukaiVector.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _matrix(text: str) -> IsogenyMatrix:
    try:
        return IsogenyMatrix.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _ns_class(text: str) -> NsClass:
    try:
        return NsClass.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _default_format() -> str:
    fmt = os.environ.get("VERLINDE_FORMAT", "json")
    return fmt if fmt in FORMATS else "json"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="verlinde", description="Exact Verlinde-bundle arithmetic on abelian surfaces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(p):
        p.add_argument("--v", type=_vector, required=True, metavar="r,k,chi")
        p.add_argument("--w", type=_vector, required=True, metavar="r,k,chi")

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default=_default_format())

    p = sub.add_parser("decompose", help="multiplicity table of a Verlinde bundle")
    pair(p)
    p.add_argument("--variant", choices=("full", "plus", "minus"), default="full")
    fmt(p)

    p = sub.add_parser("trace", help="trace of a torsion point of the given order")
    pair(p)
    p.add_argument("--delta", type=int, required=True)
    fmt(p)

    p = sub.add_parser("triple", help="slope triple, Delta, admissibility and inverse")
    pair(p)
    fmt(p)

    p = sub.add_parser("pullback", help="pullback action of an isogeny matrix")
    p.add_argument("--matrix", type=_matrix, required=True, metavar="a,b,c,d")
    p.add_argument("--class", dest="ns_class", type=_ns_class, metavar="u,v,h")
    fmt(p)

    p = sub.add_parser("oracle", help="brute-force oracles")
    osub = p.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    q = osub.add_parser("charsum", help="character sum over elements of one order")
    for name in ("a", "b", "omega", "delta"):
        q.add_argument(f"--{name}", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    fmt(q)
    for name, text in (("lemma-a2", "count torsion solutions"), ("lemma-a1", "solve the congruence pair")):
        q = osub.add_parser(name, help=text)
        for coef in ("a", "b", "c", "d"):
            q.add_argument(f"--{coef}", type=int, required=True)
        fmt(q)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument(
        "--max-d", type=int, default=30,
        help="bound on d_v + d_w (bookkeeping), on d_v and d_w (duality, twist), on the modulus (appendix)",
    )
    p.add_argument("--seed", type=int, default=0)
    fmt(p)
    return parser


def _frac(x) -> str:
    return format_fraction(x)


def _emit_doc(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
        return
    if fmt == "csv":
        out.write("key,value\n")
        for key, val in doc.items():
            out.write(f"{key},{json.dumps(val, separators=(',', ':'))}\n")
        return
    width = max((len(k) for k in doc), default=0)
    for key, val in doc.items():
        text = val if isinstance(val, str) else json.dumps(val, separators=(", ", ": "))
        out.write(f"{key.ljust(width)}  {text}\n")


def _cmd_decompose(args, out) -> int:
    fn = {"full": decompose, "plus": decompose_plus, "minus": decompose_minus}[args.variant]
    table = fn(args.v, args.w)
    if args.format == "json":
        out.write(json.dumps(table.to_json(), indent=2) + "\n")
    elif args.format == "csv":
        out.write(table.to_csv())
    else:
        out.write(table.to_text())
    return EXIT_OK


def _cmd_trace(args, out) -> int:
    value = trace(args.v, args.w, args.delta)
    if args.format == "table":
        out.write(f"{value}\n")
    else:
        _emit_doc({"v": args.v.to_json(), "w": args.w.to_json(), "delta": args.delta, "trace": str(value)}, args.format, out)
    return EXIT_OK


def _cmd_triple(args, out) -> int:
    p = slope_triple(args.v, args.w)
    doc = {
        "v": args.v.to_json(),
        "w": args.w.to_json(),
        "slope": p.to_json(),
        "delta": delta(args.v, args.w),
        "det": _frac(det_triple(p)),
        "rank": str(rank_triple(p)),
        "euler": str(euler_triple(p)),
        "admissible": is_admissible(p),
        "inverse": invert_triple(p).to_json() if det_triple(p) != 0 else None,
        "strange_duality": strange_duality_status(args.v, args.w),
    }
    if is_admissible(p):
        try:
            doc["invariants"] = semihom_invariants(p).to_dict()
        except DomainError:
            doc["invariants"] = None
    fac = factorize(p)
    doc["factorization"] = fac.to_dict() if fac else None
    _emit_doc(doc, args.format, out)
    return EXIT_OK


def _cmd_pullback(args, out) -> int:
    m = args.matrix
    big_r = pullback_matrix(m)
    doc = {
        "matrix": m.to_json(),
        "det": m.det,
        "circ": circ(m).to_json(),
        "pullback": [list(row) for row in big_r],
        "degree": str(isogeny_degree(m)) if m.det != 0 else None,
    }
    if m.a * m.d + m.b * m.c != 0:
        doc["pullback_inverse"] = [[_frac(x) for x in row] for row in pullback_matrix_inverse(m)]
    else:
        doc["pullback_inverse"] = None
    if args.ns_class is not None:
        image = mat_vec(big_r, args.ns_class.as_tuple())
        doc["class"] = args.ns_class.to_json()
        doc["image"] = [_frac(x) for x in image]
        doc["quartic_form"] = _frac(quartic_form(args.ns_class))
        doc["quartic_form_image"] = _frac(quartic_form(image))
    _emit_doc(doc, args.format, out)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    if args.oracle == "charsum":
        mob = character_sum(args.a, args.b, args.omega, args.delta)
        brute = character_sum_bruteforce(args.a, args.b, args.omega, args.delta, seed=args.seed)
        sym = jordan_symbol(args.a * args.b // args.omega, args.delta)
        expected = sym * args.delta**4
        doc = {
            "a": args.a, "b": args.b, "omega": args.omega, "delta": args.delta,
            "moebius": str(mob), "bruteforce": str(brute),
            "jordan_symbol": _frac(sym), "agree": mob == brute == expected,
        }
        _emit_doc(doc, args.format, out)
        if not doc["agree"]:
            raise IdentityViolation("character sum", f"moebius {mob}, brute force {brute}, symbol {expected}")
        return EXIT_OK
    inst = CongruenceInstance(args.a, args.b, args.c, args.d)
    if args.oracle == "lemma-a1":
        m, n = solve_congruence_pair(inst)
        _emit_doc({"instance": list(inst.as_tuple()), "m": m, "n": n}, args.format, out)
        return EXIT_OK
    if not lemma_a2_hypotheses(inst):
        raise DomainError(f"{inst.as_tuple()} does not satisfy b^2 = ac (mod d) with gcd(a, c, d, (b^2-ac)/d) = 1")
    per = count_coordinate_solutions(*inst.as_tuple())
    doc = {
        "instance": list(inst.as_tuple()),
        "per_coordinate": per,
        "count": str(per**4),
        "expected": str(inst.d**4),
        "agree": per**4 == inst.d**4,
    }
    _emit_doc(doc, args.format, out)
    if not doc["agree"]:
        raise IdentityViolation("torsion count", f"{per ** 4} != {inst.d ** 4}")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.max_d < 1:
        raise DomainError("--max-d must be positive")
    doc = run_suite(args.suite, max_d=args.max_d, seed=args.seed)
    _emit_doc(doc, args.format, out)
    return EXIT_OK if doc["ok"] else EXIT_VIOLATION


COMMANDS = {
    "decompose": _cmd_decompose,
    "trace": _cmd_trace,
    "triple": _cmd_triple,
    "pullback": _cmd_pullback,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except VerlindeError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code


def main(argv=None) -> None:
    sys.exit(run(argv))
