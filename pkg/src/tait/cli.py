"""Command-line interface.

``tait <count|euler|p3|reduce|verify|gen> [args]``; graph files use the
plain-text map format, with ``-`` (the default) meaning stdin.  Exit
codes are a stable contract: 0 success, 1 parse or validation failure
(including usage errors), 2 irreducible graph, 3 non-bipartite input
where bipartiteness is required.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import GENERATORS
from .coloring import count_tait
from .laurent import NotBipartiteError, p3
from .planar import MapError, parse_map, serialize_map
from .reduction import EULER_WEIGHTS, IrreducibleError, format_trace, reduce_map
from .verify import SUITES

__all__ = ["main"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IRREDUCIBLE = 2
EXIT_NOT_BIPARTITE = 3

_CLI_FAMILIES = ("circle", "theta", "k4", "prism", "cube", "dodecahedron", "petersen")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse normally exits with code 2 on bad usage; 2 is taken."""

    def error(self, message):
        raise _UsageError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _add_file_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "file",
        nargs="?",
        default="-",
        help="graph file in map text format, or - for stdin (default)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tait", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of Tait colorings")
    _add_file_argument(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("euler", help="reduction value (loop=3, bigon=2)")
    _add_file_argument(p)
    p.add_argument("--trace", action="store_true", help="print the reduction tree")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("p3", help="quantum coloring polynomial (bipartite maps)")
    _add_file_argument(p)
    p.add_argument("--at", metavar="Q", help="evaluate at a rational q instead")
    p.set_defaults(func=_cmd_p3)

    p = sub.add_parser("reduce", help="print the reduction tree and its value")
    _add_file_argument(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="run a property campaign")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="write a catalog graph to stdout")
    p.add_argument("family", choices=_CLI_FAMILIES)
    p.add_argument("n", nargs="?", type=int, help="ring size (prism only)")
    p.set_defaults(func=_cmd_gen)

    return parser


def _cmd_count(args) -> int:
    cmap = parse_map(_read_text(args.file))
    print(count_tait(cmap))
    return EXIT_OK


def _cmd_euler(args) -> int:
    cmap = parse_map(_read_text(args.file), check_planar=True)
    trace = reduce_map(cmap, EULER_WEIGHTS)
    if args.trace:
        print(format_trace(trace))
    print(trace.value())
    return EXIT_OK


def _cmd_p3(args) -> int:
    cmap = parse_map(_read_text(args.file), check_planar=True)
    poly = p3(cmap)
    if args.at is None:
        print(poly)
    else:
        print(poly(Fraction(args.at)))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    cmap = parse_map(_read_text(args.file), check_planar=True)
    trace = reduce_map(cmap, EULER_WEIGHTS)
    print(format_trace(trace))
    print(f"value {trace.value()}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = SUITES[args.suite](trials=args.trials, tol=args.tol, seed=args.seed)
    if args.json:
        print(json.dumps(report.as_dict()))
    else:
        print(report.format_text())
    return EXIT_OK if report.passed else EXIT_INVALID


def _cmd_gen(args) -> int:
    if args.family == "prism":
        if args.n is None:
            raise _UsageError("prism needs a ring size, e.g. 'tait gen prism 4'")
        cmap = GENERATORS["prism"](args.n)
    else:
        if args.n is not None:
            raise _UsageError(f"{args.family} takes no size argument")
        cmap = GENERATORS[args.family]()
    sys.stdout.write(serialize_map(cmap))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"tait: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except IrreducibleError as exc:
        print(f"tait: irreducible: {exc}", file=sys.stderr)
        sys.stderr.write(serialize_map(exc.graph))
        return EXIT_IRREDUCIBLE
    except NotBipartiteError as exc:
        print(f"tait: not bipartite: {exc}", file=sys.stderr)
        return EXIT_NOT_BIPARTITE
    except ZeroDivisionError:
        print("tait: error: evaluation at q = 0 hits a negative power", file=sys.stderr)
        return EXIT_INVALID
    except (MapError, ValueError, OSError) as exc:
        print(f"tait: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
