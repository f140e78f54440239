"""Command-line front end.

Every command shares the flags ``--v``, ``--w`` (a count such as ``2``, or a
comma list such as ``x,y``), ``--max`` (degree cap, default 8), ``--format``
and ``--seed``.  Exit codes: 0 success, 1 user error, 2 a property check
failed, 3 an internal decomposition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .elimination import (DecompositionFailure, bigraded_dimension_audit, default_symbols, eliminate_lie,
                          format_smash, free_generators, smash_normal_form, smash_to_json, u_expansion)
from .free_lie import NotALieElement, expand, format_lie, lie_extract
from .parsing import EvalError, ParseError, parse, to_lie, to_tensor
from .tensor import adjoint_action, format_tensor, tensor_to_json
from .words import MixedAlphabet, UnknownSymbol

EXIT_OK, EXIT_USER, EXIT_CHECK, EXIT_INTERNAL = 0, 1, 2, 3


class UserError(ValueError):
    pass


def generator_list(text: str, prefix: str) -> list[str]:
    """``"3"`` -> ``v1,v2,v3`` (``v`` alone when 1); otherwise a comma list."""
    text = text.strip()
    if text.isdigit():
        return [] if int(text) == 0 else default_symbols(prefix, int(text))
    return [s.strip() for s in text.split(",") if s.strip()]


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--v", default="1", help="V generators: a count or a comma list (default 1, i.e. 'v')")
    p.add_argument("--w", default="1", help="W generators: a count or a comma list (default 1, i.e. 's')")
    p.add_argument("--max", type=int, default=8, help="degree cap (default 8)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="hopfelim", description="Exact computations in T(V + W).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, *args):
        sp = sub.add_parser(name, parents=[common], help=help)
        for a in args:
            sp.add_argument(a, help="expression, or '-' to read stdin")
        return sp

    add("expand", "Lie expression -> tensor", "expr")
    add("extract", "tensor expression -> Lyndon coordinates", "expr")
    add("adjoint", "adjoint action h.c with h over W", "h", "c")
    add("normal-form", "coordinates on (U-word)*(W-word)", "expr")
    add("eliminate", "split a Lie element as x_U + x_W", "expr")
    add("gens", "list the free generators u[alpha;v] up to --max")
    add("dims", "bigraded dimension audit up to --max")
    add("check", "run the invariant suites, degrees capped at --max")
    return parser


def _source(arg: str) -> str:
    return sys.stdin.read().strip() if arg == "-" else arg


def _alphabet(args) -> MixedAlphabet:
    return MixedAlphabet(generator_list(args.v, "v"), generator_list(args.w, "s"))


def _cap(x, args, what: str = "expression") -> None:
    top = max((sum(l.degree for l in w) for w in x.body.terms), default=0)
    if top > args.max:
        raise UserError(f"{what} has degree {top}, above --max {args.max}")


def _parse(source: str, alphabets):
    try:
        return parse(source, alphabets)
    except ParseError as e:
        e.source = source
        raise


def _tensor(source: str, alphabet: MixedAlphabet, args):
    node = _parse(source, [alphabet, alphabet.u])
    x = to_tensor(node, alphabet, lambda name: u_expansion(alphabet, alphabet.u.resolve(name)))
    _cap(x, args)
    return x


def _lie(source: str, alphabet: MixedAlphabet, args):
    x = to_lie(_parse(source, alphabet), alphabet)
    _cap(x, args)
    return x


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(text)


def cmd_expand(args) -> int:
    t = expand(_lie(_source(args.expr), _alphabet(args), args))
    _emit(args, format_tensor(t), {"result": tensor_to_json(t)})
    return EXIT_OK


def cmd_extract(args) -> int:
    t = _tensor(_source(args.expr), _alphabet(args), args)
    try:
        x = lie_extract(t)
    except NotALieElement as e:
        _emit(args, f"not a Lie element; residual: {format_tensor(e.residual)}",
              {"error": "not a Lie element", "residual": tensor_to_json(e.residual)})
        return EXIT_USER
    _emit(args, format_lie(x), {"result": tensor_to_json(x)})
    return EXIT_OK


def cmd_adjoint(args) -> int:
    alphabet = _alphabet(args)
    h = _tensor(_source(args.h), alphabet, args)
    c = _tensor(_source(args.c), alphabet, args)
    _cap(h * c, args, "h*c")
    r = adjoint_action(h, c)
    _emit(args, format_tensor(r), {"result": tensor_to_json(r)})
    return EXIT_OK


def cmd_normal_form(args) -> int:
    p = smash_normal_form(_tensor(_source(args.expr), _alphabet(args), args))
    _emit(args, format_smash(p), {"result": smash_to_json(p)})
    return EXIT_OK


def _generator_rows(alphabet: MixedAlphabet, letters) -> tuple[list[str], list[dict]]:
    lines, data = [], []
    for l in letters:
        e = u_expansion(alphabet, l)
        lines.append(f"{l.symbol} = {format_tensor(e)}")
        data.append({"symbol": l.symbol, "degree": l.degree, "expansion": tensor_to_json(e)})
    return lines, data


def cmd_eliminate(args) -> int:
    alphabet = _alphabet(args)
    x_u, x_w = eliminate_lie(_lie(_source(args.expr), alphabet, args))
    used = sorted({l for w in x_u.body.terms for l in w})
    lines, gens = _generator_rows(alphabet, used)
    text = "\n".join([f"x_U = {format_lie(x_u)}", f"x_W = {format_lie(x_w)}"]
                     + (["where"] + ["  " + s for s in lines] if lines else []))
    _emit(args, text, {"x_U": tensor_to_json(x_u), "x_W": tensor_to_json(x_w), "generators": gens})
    return EXIT_OK


def cmd_gens(args) -> int:
    alphabet = _alphabet(args)
    gens = free_generators(alphabet, args.max)
    lines, data = _generator_rows(alphabet, [g.letter for g in gens])
    _emit(args, "\n".join(lines), {"generators": data})
    return EXIT_OK


def cmd_dims(args) -> int:
    n_v, n_w = len(generator_list(args.v, "v")), len(generator_list(args.w, "s"))
    rows = bigraded_dimension_audit(n_v, n_w, args.max)
    header = ("degree", "F(V+W)", "F(W)", "F(U)", "F(W)+F(U)")
    table = [header] + [(str(r.degree), str(r.free_lie), str(r.free_w), str(r.free_u), str(r.semidirect))
                        for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    text = "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table)
    data = {"v": n_v, "w": n_w,
            "rows": [{"degree": r.degree, "free_lie": r.free_lie, "free_w": r.free_w,
                      "free_u": r.free_u, "semidirect": r.semidirect} for r in rows]}
    _emit(args, text, data)
    return EXIT_OK if all(r.equal for r in rows) else EXIT_CHECK


def cmd_check(args) -> int:
    if args.max < 2:
        raise UserError("check needs --max >= 2")
    results = checks.run_all(args.seed, args.max)
    data = {"seed": args.seed, "max": args.max, "passed": all(r.passed for r in results),
            "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
    _emit(args, "\n".join(r.line() for r in results), data)
    return EXIT_OK if data["passed"] else EXIT_CHECK


COMMANDS = {
    "expand": cmd_expand, "extract": cmd_extract, "adjoint": cmd_adjoint, "normal-form": cmd_normal_form,
    "eliminate": cmd_eliminate, "gens": cmd_gens, "dims": cmd_dims, "check": cmd_check,
}


def _report(message: str, source: str | None = None, column: int | None = None) -> None:
    print(f"error: {message}", file=sys.stderr)
    if source is not None and column is not None:
        print(f"  {source}\n  {' ' * (column - 1)}^", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USER
    if args.max < 1:
        _report("--max must be >= 1")
        return EXIT_USER
    try:
        return COMMANDS[args.command](args)
    except ParseError as e:
        _report(str(e), getattr(e, "source", None), e.column)
        return EXIT_USER
    except DecompositionFailure as e:
        _report(f"decomposition failure: {e}")
        return EXIT_INTERNAL
    except UnknownSymbol as e:
        _report(f"unknown symbol {e.args[0]!r}")
        return EXIT_USER
    except (EvalError, UserError, ValueError) as e:
        _report(str(e))
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
