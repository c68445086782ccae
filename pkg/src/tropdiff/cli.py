"""Command line front end: ``tropdiff <verb> ...``.

Every verb reads its operands as inline text or as paths to files holding the
text grammar (or the JSON encodings), and prints JSON with ``--json`` or a
short human-readable line otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

from .diffpoly import (DiffPoly, eval_poly, initial_form, initial_form_frac, is_solution,
                       theta, translate, trop_w, trop_w_frac)
from .lattice import DimensionError, GeneratorSet
from .newton import newton_contains, newton_vertices
from .series import BSeries, KFraction, KPoly, sp
from .text import ParseError, parse_diffpoly, parse_series, parse_series_list
from .vertex_semiring import VertexPolynomial, vp_leq, vp_prec

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3

SEED_ENV = "TROPDIFF_SEED"


def seed_from_env(default: int = 0) -> int:
    """Seed for randomized checks, overridable through the environment."""
    return int(os.environ.get(SEED_ENV, default))


def read_operand(arg: str) -> str:
    """Inline text, or the contents of the file it names."""
    path = Path(arg)
    try:
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return arg


def _json_or_none(text: str):
    stripped = text.strip()
    if not stripped or stripped[0] not in "[{":
        return None
    try:
        return json.loads(stripped)
    except json.JSONDecodeError:
        return None


def load_boolean(arg: str, m: Optional[int]) -> BSeries:
    text = read_operand(arg)
    data = _json_or_none(text)
    if isinstance(data, dict) and "terms" in data:
        return BSeries(GeneratorSet.make(data["dim"], [t["exp"] for t in data["terms"]]))
    if isinstance(data, dict):
        return BSeries(GeneratorSet.from_json(data))
    if isinstance(data, list):
        if not data:
            raise ParseError("an empty point list does not fix the dimension", text)
        return BSeries(GeneratorSet.make(len(data[0]), data))
    if "omega" in text:
        return parse_series(text, m, boolean=True)
    # read rationally so that cancellation is honoured, then take the support
    value = parse_series(text, m)
    if not isinstance(value, KPoly):
        raise ParseError("expected a series without denominators", text)
    return sp(value)


def load_vector(arg: str, m: Optional[int]) -> list[BSeries]:
    return parse_series_list(read_operand(arg).strip(), m, boolean=True)


def load_diffpoly(arg: str, m: Optional[int], n: Optional[int], boolean: bool) -> DiffPoly:
    return parse_diffpoly(read_operand(arg), m, n, BSeries if boolean else KPoly)


def _index(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()")
    try:
        return tuple(int(v) for v in body.split(","))
    except ValueError:
        raise ParseError(f"bad multi-index {text!r}", text) from None


def _poly_json(P: DiffPoly, pretty: bool) -> dict:
    return {"m": P.m, "n": P.n, "terms": len(P), "text": P.format(pretty)}


# -- verbs ----------------------------------------------------------------------

def do_vert(args, operand: str) -> dict:
    a = load_boolean(operand, args.m)
    return {"vertices": sorted(list(p) for p in newton_vertices(a.carrier))}


def _pair(args, operand: str) -> tuple[VertexPolynomial, VertexPolynomial]:
    if args.other is None:
        raise ParseError("this verb needs a second operand")
    a = load_boolean(operand, args.m)
    b = load_boolean(args.other, args.m)
    if args.m is None and a.dim != b.dim:
        # inferred separately; read both again in the larger dimension
        m = max(a.dim, b.dim)
        a, b = load_boolean(operand, m), load_boolean(args.other, m)
    return a.vertex(), b.vertex()


def do_add(args, operand: str) -> dict:
    a, b = _pair(args, operand)
    return {"result": (a + b).to_json()}


def do_mul(args, operand: str) -> dict:
    a, b = _pair(args, operand)
    return {"result": (a * b).to_json()}


def do_cmp(args, operand: str) -> dict:
    a, b = _pair(args, operand)
    return {"leq": vp_leq(a, b), "geq": vp_leq(b, a), "equal": a == b,
            "prec": (not a.is_zero()) and vp_prec(a, b)}


def do_member(args, operand: str) -> dict:
    a = load_boolean(operand, args.m)
    if args.point is None:
        raise ParseError("member needs --point")
    I = _index(args.point)
    return {"point": list(I), "in_support": I in a.carrier,
            "in_newton": newton_contains(a.carrier, I),
            "is_vertex": I in newton_vertices(a.carrier)}


def do_deriv(args, operand: str) -> dict:
    P = load_diffpoly(operand, args.m, args.n, args.boolean)
    J = _index(args.index) if args.index else None
    if J is None:
        raise ParseError("deriv needs --index")
    return {"result": _poly_json(theta(P, J), args.pretty)}


def do_eval(args, operand: str) -> dict:
    P = load_diffpoly(operand, args.m, args.n, args.boolean)
    a = _candidate(args, P)
    ev = eval_poly(P, a)
    return {"value": ev.value.format(args.pretty),
            "per_term": [v.format(args.pretty) for v in ev.per_term]}


def _candidate(args, P: DiffPoly) -> list:
    if args.candidate is None:
        raise ParseError("this verb needs --candidate")
    text = read_operand(args.candidate).strip()
    if P.domain is BSeries:
        return parse_series_list(text, P.m, boolean=True)
    return parse_series_list(text, P.m, boolean=False)


def do_check(args, operand: str) -> dict:
    P = load_diffpoly(operand, args.m, args.n, boolean=True)
    a = _candidate(args, P)
    return is_solution(P, a).to_json()


def _weight(args, P: DiffPoly) -> list[BSeries]:
    if args.weight is None:
        raise ParseError("this verb needs --weight")
    return load_vector(args.weight, P.m)


def do_tropw(args, operand: str) -> dict:
    P = load_diffpoly(operand, args.m, args.n, boolean=False)
    w = _weight(args, P)
    if P.domain is KFraction:
        return {"value": trop_w_frac(P, w).to_json()}
    return {"value": trop_w(P, w).to_json()}


def do_initial(args, operand: str) -> dict:
    P = load_diffpoly(operand, args.m, args.n, boolean=False)
    w = _weight(args, P)
    Q = initial_form_frac(P, w) if P.domain is KFraction else initial_form(P, w)
    return {"result": _poly_json(Q, args.pretty)}


def do_translate(args, operand: str) -> dict:
    P = load_diffpoly(operand, args.m, args.n, boolean=False)
    w = _weight(args, P)
    return {"result": _poly_json(translate(P, w), args.pretty)}


def do_plot(args, operand: str) -> dict:
    from .plot import render_svg

    if args.out is None:
        raise ParseError("plot needs --out")
    layers = None
    if args.candidate is not None:
        P = load_diffpoly(operand, args.m, args.n, boolean=True)
        ev = eval_poly(P, _candidate(args, P))
        total, layers = ev.value.carrier, [v.carrier for v in ev.per_term]
    else:
        total = load_boolean(operand, args.m).carrier
    svg = render_svg(total, layers)
    Path(args.out).write_text(svg)
    return {"svg": args.out, "vertices": sorted(list(p) for p in newton_vertices(total))}


VERBS = {
    "vert": (do_vert, "vertex set of a boolean series"),
    "add": (do_add, "tropical sum of two vertex polynomials"),
    "mul": (do_mul, "tropical product of two vertex polynomials"),
    "cmp": (do_cmp, "order and relevancy between two vertex polynomials"),
    "member": (do_member, "is a lattice point in the Newton polyhedron"),
    "deriv": (do_deriv, "apply a derivative multi-index to a differential polynomial"),
    "eval": (do_eval, "evaluate a differential polynomial at a candidate"),
    "check": (do_check, "two-witness solution test over the booleans"),
    "tropw": (do_tropw, "tropical value at a weight vector"),
    "initial": (do_initial, "initial form at a weight vector"),
    "translate": (do_translate, "weight-vector translation"),
    "plot": (do_plot, "SVG of a planar series and its Newton polyhedron"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropdiff",
                                     description="Vertex polynomials and tropical "
                                                 "differential equations.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for name, (_, help_text) in VERBS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("operand", nargs="+",
                       help="inline expression or file; several run as a batch")
        p.add_argument("--other", help="second operand for add, mul and cmp")
        p.add_argument("--m", type=int, help="number of series variables")
        p.add_argument("--n", type=int, help="number of differential indeterminates")
        p.add_argument("--weight", help="weight vector, entries separated by ';'")
        p.add_argument("--candidate", help="candidate solution, entries separated by ';'")
        p.add_argument("--index", help="derivative multi-index such as (1,0)")
        p.add_argument("--point", help="lattice point such as (2,1)")
        p.add_argument("--boolean", action="store_true",
                       help="read coefficients as boolean series")
        p.add_argument("--out", help="output file (SVG for plot, JSON otherwise)")
        p.add_argument("--json", action="store_true", help="print JSON")
        p.add_argument("--pretty", action="store_true", help="use t,u,v and x,y aliases")
        p.add_argument("--jobs", type=int, default=1, help="parallel batch workers")
    return parser


def _human(result: dict) -> str:
    return "\n".join(f"{k}: {v}" for k, v in result.items())


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    fn = VERBS[args.verb][0]
    try:
        if len(args.operand) == 1:
            results = [fn(args, args.operand[0])]
        else:
            if args.verb == "plot":
                raise ParseError("plot takes a single operand")
            with ThreadPoolExecutor(max_workers=max(args.jobs, 1)) as pool:
                results = list(pool.map(lambda op: fn(args, op), args.operand))
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except DimensionError as exc:
        print(f"dimension error: {exc}", file=stderr)
        return EXIT_DIMENSION
    except (ValueError, ArithmeticError, TypeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAILURE

    payload = results[0] if len(results) == 1 else results
    if args.json or (args.out and args.verb != "plot"):
        text = json.dumps(payload, sort_keys=True)
    elif isinstance(payload, list):
        text = "\n---\n".join(_human(r) for r in payload)
    else:
        text = _human(payload)
    if args.out and args.verb != "plot":
        Path(args.out).write_text(text + "\n")
    else:
        print(text, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
