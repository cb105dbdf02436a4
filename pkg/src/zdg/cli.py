"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 axiom violation, 3 failed structural check.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators as gen
from .analysis import analyze_digraph, analyze_semigroup, to_dot
from .errors import AxiomError, ParseError, TheoremViolation
from .generators import CorpusSpec, FAMILIES
from .graph_inverse import DEFAULT_MAX_LEN, format_graph, parse_graph
from .semigroup import format_semigroup, parse_semigroup
from .verify import format_summary, run_corpus

EXIT_OK, EXIT_INPUT, EXIT_AXIOM, EXIT_CHECK = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _finish(report, g, args) -> int:
    _emit(report.to_json(), args.json)
    if args.dot and g is not None:
        _emit(to_dot(g), args.dot)
    for c in report.failures:
        print(f"check failed: {c.name}: {c.note or ''} {c.witness or ''}".rstrip(), file=sys.stderr)
    return EXIT_CHECK if report.failures else EXIT_OK


def cmd_analyze(args) -> int:
    S = parse_semigroup(_read(args.file))
    report, g = analyze_semigroup(S, name=args.file)
    return _finish(report, g, args)


def cmd_ig(args) -> int:
    G = parse_graph(_read(args.file))
    if G.is_trivial:
        print("error: I(G) has no zero-divisors (trivial graph)", file=sys.stderr)
        return EXIT_INPUT
    report, g = analyze_digraph(G, args.max_len, name=args.file)
    return _finish(report, g, args)


def cmd_export_dot(args) -> int:
    text = _read(args.file)
    if args.file.endswith(".dgf"):
        G = parse_graph(text)
        if G.is_trivial:
            print("error: I(G) has no zero-divisors (trivial graph)", file=sys.stderr)
            return EXIT_INPUT
        _, g = analyze_digraph(G, args.max_len, name=args.file, associativity=False)
    else:
        _, g = analyze_semigroup(parse_semigroup(text), name=args.file)
    if g is None:
        print("error: no zero-divisor graph", file=sys.stderr)
        return EXIT_AXIOM
    _emit(to_dot(g), args.dot)
    return EXIT_OK


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def generate(name: str, params: list[str], groups: str | None = None, homs: str | None = None) -> str:
    if name == "b2":
        return format_semigroup(gen.b2(), "Brandt semigroup B2: a^2 = b^2 = 0, aba = a, bab = b, e = ab, f = ba")
    if name in ("i1", "i2", "i3"):
        n = int(name[1])
        return format_semigroup(gen.symmetric_inverse_monoid(n), f"symmetric inverse monoid I{n}")
    if name == "in":
        n = int(params[0]) if params else 2
        if n > 3:
            raise AxiomError("unsupported size: symmetric inverse monoids are generated for n <= 3")
        return format_semigroup(gen.symmetric_inverse_monoid(n), f"symmetric inverse monoid I{n}")
    if name == "cyclic":
        n = int(params[0]) if params else 2
        return format_semigroup(gen.cyclic_group(n), f"cyclic group Z{n}")
    if name == "s3":
        return format_semigroup(gen.symmetric_group_s3(), "symmetric group S3")
    if name == "clifford":
        gs = _ints(groups or (params[0] if params else "1,2"))
        hs = _ints(homs or (params[1] if len(params) > 1 else ""))
        if not hs and len(gs) > 1:
            hs = [0] * (len(gs) - 1)
        return format_semigroup(gen.clifford_chain(gs, hs),
                                f"Clifford chain, groups {gs}, linking multipliers {hs}")
    if name == "digraph":
        which = params[0] if params else "g3"
        return format_graph(gen.example_digraph(which), f"example digraph {which}")
    if name == "loop":
        return format_graph(gen.loop_graph(), "single vertex with one loop")
    raise ParseError(f"unknown generator {name!r}")


def cmd_gen(args) -> int:
    _emit(generate(args.name, args.params, args.groups, args.homs), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = CorpusSpec(args.family, seed=args.seed, count=args.count, max_len=args.max_len)
    summary = run_corpus(spec)
    sys.stdout.write(format_summary(summary))
    if args.json:
        _emit(json.dumps(summary, indent=2, default=str) + "\n", args.json)
    return EXIT_OK if summary["ok"] else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyse a semigroup given as a .sgp file")
    p.add_argument("file")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here (default stdout)")
    p.add_argument("--dot", metavar="PATH", help="also write the zero-divisor graph as DOT")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ig", help="analyse the graph inverse semigroup of a .dgf digraph")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_ig)

    p = sub.add_parser("gen", help="emit a named semigroup (.sgp) or digraph (.dgf)")
    p.add_argument("name", help="b2, i1, i2, i3, in N, cyclic N, s3, clifford, digraph g1|g2|g3, loop")
    p.add_argument("params", nargs="*")
    p.add_argument("--groups", help="clifford: comma-separated group orders, top level first")
    p.add_argument("--homs", help="clifford: comma-separated linking multipliers")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run all structural checks over a seeded corpus")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="write the zero-divisor graph of a .sgp or .dgf file as DOT")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AxiomError as exc:
        print(f"axiom violation: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except TheoremViolation as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
