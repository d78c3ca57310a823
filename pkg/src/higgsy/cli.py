"""``higgsy`` command line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal invariant
violation. Output is written only after the whole computation succeeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

from .errors import DomainError, InvariantViolation
from .exactalg import LaurentPoly
from .genus import METHODS, PglInput, euler_pgl, pgl_hy
from .stability import (
    ChainDatum,
    enumerate_admissible_degrees,
    find_walls,
    higgs_index_set,
    necessary_conditions,
)

__all__ = ["render_poly", "parse_poly_json", "dispatch", "main"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


# serialization


def _poly_obj(P: LaurentPoly) -> dict:
    return {
        "variable": "y",
        "terms": [{"exp": e, "coeff": str(c)} for e, c in P.terms],
    }


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_poly(P: LaurentPoly, fmt: str = "human") -> str:
    """Serialize ``P`` as ``human`` text, a ``json`` object or ``csv`` rows."""
    if fmt == "human":
        return str(P)
    if fmt == "json":
        return _dumps(_poly_obj(P))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exp", "coeff"])
        for e, c in P.terms:
            w.writerow([e, c])
        return buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown format {fmt!r}")


def parse_poly_json(text: str) -> LaurentPoly:
    """Inverse of ``render_poly(P, "json")``."""
    obj = json.loads(text) if isinstance(text, str) else text
    if obj.get("variable") != "y":
        raise ValueError("expected a polynomial in y")
    terms = {}
    for t in obj["terms"]:
        e = int(t["exp"])
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        terms[e] = Fraction(t["coeff"])
    return LaurentPoly(terms)


# argument types; failures here are usage errors


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q: {s!r}")


def _int_vector(s: str) -> List[int]:
    if not s or " " in s:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {s!r}")
    return [_int(x) for x in s.split(",")]


def _rational_vector(s: str) -> List[Fraction]:
    if not s or " " in s:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals: {s!r}")
    return [_rational(x) for x in s.split(",")]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        # only reached through --help
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="higgsy", description="Exact y-genera of PGL_n Higgs moduli.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    y = sub.add_parser("ygenus", help="compactly supported y-genus")
    y.add_argument("--n", type=_int, required=True)
    y.add_argument("--d", type=_int, required=True)
    y.add_argument("--g", type=_int, required=True)
    y.add_argument("--method", choices=METHODS + ("all",), default="closed")
    y.add_argument("--format", choices=("human", "json", "csv"), default="human")

    e = sub.add_parser("euler", help="Euler characteristic")
    e.add_argument("--n", type=_int, required=True)
    e.add_argument("--g", type=_int, required=True)
    e.add_argument("--format", choices=("human", "json"), default="human")

    ch = sub.add_parser("chains", help="chain combinatorics")
    chs = ch.add_subparsers(dest="chains_command", parser_class=_Parser)
    chs.required = True
    c = chs.add_parser("conditions", help="necessary conditions C1-C4")
    c.add_argument("--ranks", type=_int_vector, required=True)
    c.add_argument("--degrees", type=_int_vector, required=True)
    c.add_argument("--alpha", type=_rational_vector, required=True)
    c.add_argument("--format", choices=("human", "json"), default="human")
    dg = chs.add_parser("degrees", help="admissible degree vectors")
    dg.add_argument("--ranks", type=_int_vector, required=True)
    dg.add_argument("--alpha", type=_rational_vector, required=True)
    dg.add_argument("--total", type=_int, required=True)
    dg.add_argument("--format", choices=("human", "json", "csv"), default="human")

    ix = sub.add_parser("index-set", help="Higgs index set")
    ix.add_argument("--n", type=_int, required=True)
    ix.add_argument("--d", type=_int, required=True)
    ix.add_argument("--g", type=_int, required=True)
    ix.add_argument("--format", choices=("human", "json"), default="human")

    w = sub.add_parser("walls", help="walls along a parameter ray")
    w.add_argument("--ranks", type=_int_vector, required=True)
    w.add_argument("--degrees", type=_int_vector, required=True)
    w.add_argument("--alpha", type=_rational_vector, required=True)
    w.add_argument("--delta", type=_int_vector, required=True)
    w.add_argument("--t-max", type=_rational, required=True)
    w.add_argument("--format", choices=("human", "json"), default="human")

    t = sub.add_parser("table", help="closed-form table for n = 1..n-max")
    t.add_argument("--n-max", type=_int, required=True)
    t.add_argument("--g", type=_int, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


# commands


def _vec(v) -> str:
    return ",".join(str(x) for x in v)


def _cmd_ygenus(a) -> str:
    inp = PglInput(a.n, a.d, a.g)
    methods = METHODS if a.method == "all" else (a.method,)
    results = {m: pgl_hy(inp, m) for m in methods}
    if a.method != "all":
        return render_poly(results[a.method], a.format)
    if a.format == "json":
        return _dumps(
            {
                "n": a.n,
                "d": a.d,
                "g": a.g,
                "N": inp.N,
                "methods": {m: _poly_obj(P) for m, P in results.items()},
            }
        )
    if a.format == "csv":
        lines = ["method,exp,coeff"]
        for m, P in results.items():
            lines += [f"{m},{e},{c}" for e, c in P.terms]
        return "\n".join(lines)
    return "\n".join(f"{m}: {P}" for m, P in results.items())


def _cmd_euler(a) -> str:
    value = euler_pgl(a.n, a.g)
    if a.format == "json":
        return _dumps({"n": a.n, "g": a.g, "euler": str(value)})
    return str(value)


def _cmd_conditions(a) -> str:
    report = necessary_conditions(ChainDatum(a.ranks, a.degrees, a.alpha))
    if a.format == "json":
        return _dumps(
            {
                "passed": report.passed,
                "failures": [
                    {
                        "condition": f.condition,
                        "witness": list(f.witness),
                        "lhs": str(f.lhs),
                        "rhs": str(f.rhs),
                    }
                    for f in report.failures
                ],
            }
        )
    if report.passed:
        return "passed"
    lines = ["failed"]
    for f in report.failures:
        lines.append(f"{f.condition} at {_vec(f.witness)}: {f.lhs} > {f.rhs}")
    return "\n".join(lines)


def _cmd_degrees(a) -> str:
    found = enumerate_admissible_degrees(a.ranks, a.alpha, a.total)
    if a.format == "json":
        return _dumps([list(d) for d in found])
    if a.format == "csv":
        header = ",".join(f"d{i}" for i in range(len(a.ranks)))
        return "\n".join([header] + [_vec(d) for d in found])
    return "\n".join(_vec(d) for d in found)


def _cmd_index_set(a) -> str:
    found = higgs_index_set(a.n, a.d, a.g)
    if a.format == "json":
        return _dumps([[list(r), list(d)] for r, d in found])
    return "\n".join(f"ranks={_vec(r)} degrees={_vec(d)}" for r, d in found)


def _cmd_walls(a) -> str:
    report = find_walls(a.ranks, a.degrees, a.alpha, a.delta, a.t_max)
    if a.format == "json":
        return _dumps(
            [
                [str(w.t), [[list(m), list(e)] for m, e in w.witnesses]]
                for w in report.walls
            ]
        )
    lines = []
    for w in report.walls:
        wit = "; ".join(f"({_vec(m)} | {_vec(e)})" for m, e in w.witnesses)
        lines.append(f"t={w.t}: {wit}")
    return "\n".join(lines)


def _cmd_table(a) -> str:
    if a.n_max < 1:
        raise DomainError("n-max must be positive")
    rows = []
    for n in range(1, a.n_max + 1):
        d = next(x for x in range(n) if gcd(n, x) == 1)
        inp = PglInput(n, d, a.g)
        P = pgl_hy(inp, "closed")
        rows.append((n, d, a.g, inp.N, euler_pgl(n, a.g), P))
    if a.format == "json":
        return _dumps(
            [
                {"n": n, "d": d, "g": g, "N": N, "euler": str(eu), "poly": _poly_obj(P)}
                for n, d, g, N, eu, P in rows
            ]
        )
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "d", "g", "N", "euler", "poly"])
    for n, d, g, N, eu, P in rows:
        w.writerow([n, d, g, N, eu, str(P)])
    return buf.getvalue().rstrip("\n")


_COMMANDS = {
    "ygenus": _cmd_ygenus,
    "euler": _cmd_euler,
    "index-set": _cmd_index_set,
    "walls": _cmd_walls,
    "table": _cmd_table,
}


def dispatch(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run one command; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = _build_parser().parse_args(list(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    if args.command == "chains":
        handler = {"conditions": _cmd_conditions, "degrees": _cmd_degrees}[args.chains_command]
    else:
        handler = _COMMANDS[args.command]
    try:
        out = handler(args)
    except DomainError as exc:
        stderr.write(f"higgsy: error: {exc}\n")
        return EXIT_DOMAIN
    except InvariantViolation as exc:
        stderr.write(f"higgsy: internal error: {exc}\n")
        return EXIT_INTERNAL
    stdout.write(out + "\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(dispatch(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
