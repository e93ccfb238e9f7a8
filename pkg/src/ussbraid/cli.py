"""Command-line driver.

Braid words are single arguments: space or '.' separated signed generator
indices, with ``D`` or ``D^k`` for powers of Delta.  Exit status is 0 on
success, 1 when the answer is "not conjugate", 2 on usage errors and 3 when
the brute-force oracle runs out of budget.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence

from .braid_garside import check_strands
from .conjugacy import (
    cycling,
    decycling,
    is_periodic,
    is_rigid,
    to_sss,
    to_uss,
    twisted_decycling,
)
from .normal_form import GroupElement, inverse, power
from .solver import BudgetExhausted, ConjugacyResult, brute_force_conjugate, solve
from .uss_graph import (
    black_component,
    build_graph,
    export_dot,
    export_json,
    grey_component,
    quotient_graph,
)

ORACLE_MAX_STRANDS = 5

EXIT_OK = 0
EXIT_NOT_CONJUGATE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class UsageError(Exception):
    pass


def _element(n: int, text: str) -> GroupElement:
    try:
        return GroupElement.parse(n, text)
    except ValueError as e:
        raise UsageError(f"bad braid word {text!r}: {e}") from None


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _lines(args: argparse.Namespace, lines: Sequence[str]) -> None:
    _emit(args, "".join(line + "\n" for line in lines))


def _unary(fn: Callable[[GroupElement], GroupElement]) -> Callable[[argparse.Namespace], int]:
    def run(args: argparse.Namespace) -> int:
        x = _element(args.n, args.word)
        try:
            y = fn(x)
        except ValueError as e:
            raise UsageError(str(e)) from None
        _lines(args, [y.serialize()])
        return EXIT_OK

    return run


def _cmd_pow(args: argparse.Namespace) -> int:
    _lines(args, [power(_element(args.n, args.word), args.k).serialize()])
    return EXIT_OK


def _cmd_sss(args: argparse.Namespace) -> int:
    y, wit = to_sss(_element(args.n, args.word))
    _lines(args, [y.serialize(), f"conjugator {wit.conjugator.serialize()}"])
    return EXIT_OK


def _cmd_uss(args: argparse.Namespace) -> int:
    g = build_graph(_element(args.n, args.word))
    out = [y.serialize() for y in g.vertices]
    sizes = sorted({len(o) for o in g.orbits})
    out.append(
        f"# {len(g.vertices)} elements, {len(g.orbits)} orbits, "
        f"orbit size {' '.join(map(str, sizes))}"
    )
    _lines(args, out)
    return EXIT_OK


def _cmd_rigid(args: argparse.Namespace) -> int:
    _lines(args, ["rigid" if is_rigid(_element(args.n, args.word)) else "not rigid"])
    return EXIT_OK


def _cmd_periodic(args: argparse.Namespace) -> int:
    r = is_periodic(_element(args.n, args.word))
    _lines(args, ["not periodic" if r is None else f"periodic: x^{r[0]} = D^{r[1]}"])
    return EXIT_OK


def _render(args: argparse.Namespace, g) -> int:
    _emit(args, export_json(g) if args.format == "json" else export_dot(g))
    return EXIT_OK


def _cmd_graph(args: argparse.Namespace) -> int:
    return _render(args, build_graph(_element(args.n, args.word)))


def _cmd_black(args: argparse.Namespace) -> int:
    y, _, inv = to_uss(_element(args.n, args.word))
    return _render(args, black_component(y, inv))


def _cmd_grey(args: argparse.Namespace) -> int:
    y, _, inv = to_uss(_element(args.n, args.word))
    return _render(args, grey_component(y, inv))


def _cmd_quotient(args: argparse.Namespace) -> int:
    return _render(args, quotient_graph(build_graph(_element(args.n, args.word))))


def _answer(args: argparse.Namespace, res: ConjugacyResult) -> int:
    if not res.conjugate:
        _lines(args, ["FAIL"])
        return EXIT_NOT_CONJUGATE
    assert res.witness is not None
    if not res.witness.verify():
        raise AssertionError("witness failed verification")
    _lines(args, [res.witness.conjugator.serialize()])
    return EXIT_OK


def _pair(args: argparse.Namespace) -> tuple[GroupElement, GroupElement]:
    return _element(args.n, args.x), _element(args.n, args.y)


def _cmd_conjugate(args: argparse.Namespace) -> int:
    return _answer(args, solve(*_pair(args)))


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.n > ORACLE_MAX_STRANDS:
        raise UsageError(f"oracle is limited to n <= {ORACLE_MAX_STRANDS}")
    x, y = _pair(args)
    try:
        res = brute_force_conjugate(x, y, args.budget)
    except BudgetExhausted as e:
        _lines(args, ["INCONCLUSIVE"])
        print(str(e), file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return _answer(args, res)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ussbraid", description="Ultra summit set tools for braid groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, run: Callable[[argparse.Namespace], int], *, pair=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-n", type=int, required=True, help="number of strands")
        p.add_argument("-o", "--output", help="write output to this file")
        if pair:
            p.add_argument("x", help="first braid word")
            p.add_argument("y", help="second braid word (after --)")
        else:
            p.add_argument("word", help="braid word")
        p.set_defaults(run=run)
        return p

    add("nf", "left normal form", _unary(lambda x: x))
    add("inv", "inverse", _unary(inverse))
    add("pow", "k-th power", _cmd_pow).add_argument("k", type=int)
    add("cycle", "cycling", _unary(cycling))
    add("decycle", "decycling", _unary(decycling))
    add("tdecycle", "twisted decycling", _unary(twisted_decycling))
    add("sss", "a super summit representative and its conjugator", _cmd_sss)
    add("uss", "all elements of the ultra summit set", _cmd_uss)
    add("rigid", "rigidity test", _cmd_rigid)
    add("periodic", "periodicity test", _cmd_periodic)
    for name, help_, run in [
        ("graph", "graph of the ultra summit set", _cmd_graph),
        ("black", "black component of an ultra summit representative", _cmd_black),
        ("grey", "grey component of an ultra summit representative", _cmd_grey),
        ("quotient", "graph of cycling orbits", _cmd_quotient),
    ]:
        add(name, help_, run).add_argument("--format", choices=["dot", "json"], default="dot")
    add("conjugate", "conjugacy test; prints a witness or FAIL", _cmd_conjugate, pair=True)
    add("oracle", "brute-force conjugacy test (small n)", _cmd_oracle, pair=True).add_argument(
        "--budget", type=int, default=200_000
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        check_strands(args.n)
        return args.run(args)
    except (UsageError, ValueError) as e:
        print(f"ussbraid: error: {e}", file=sys.stderr)
        return EXIT_USAGE


run = main
