"""Command-line interface: ``borderlab analyze | scan | generate | examples``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import monomials as mon
from .analysis import EXIT_ERROR, analyze
from .deformations import DOUBLE_PRIME, PRIME
from .examples import EXAMPLES, get_example
from .ideals import CoefficientSource, DistinguishedIdeal, build_distinguished_ideal
from .order_ideals import ShapeParams, lex_segment_complement, order_ideal_from_shape
from .plausibility import plausible_scan, rows_to_csv, rows_to_json
from .tangent import parse_field


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _range(text: str) -> list[int]:
    """``5..50``, ``7`` or ``3,5,9``."""
    text = text.replace(" ", "")
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _add_source_args(p: argparse.ArgumentParser, allow_file: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--shape", help="n,kappa,r,s")
    g.add_argument("--hilbert", help="Hilbert function h_0,...,h_s,0 (lex-segment complement)")
    if allow_file:
        g.add_argument("--example", help="named example (see 'borderlab examples')")
        g.add_argument("--ideal", help="ideal JSON file")
    p.add_argument("--n", type=int, help="number of variables (with --hilbert; default len(h_1))")
    p.add_argument("--lm", help="leading monomials, comma separated (with --hilbert)")
    p.add_argument("--tm", help="trailing monomials, comma separated (with --hilbert)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--rng", default="ternary", help="ternary (default) or bernoulli:P")


def _ideal_from_args(args) -> tuple[DistinguishedIdeal, dict, str | None, str | None]:
    """(ideal, source description, default variant, default field)."""
    if getattr(args, "example", None):
        ex = get_example(args.example)
        return ex.build(), {"example": ex.name}, ex.variant, ex.default_field
    if getattr(args, "ideal", None):
        with open(args.ideal) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{args.ideal}: invalid JSON: {exc}") from exc
        return DistinguishedIdeal.from_json(data), {"ideal_file": args.ideal}, None, None
    source = CoefficientSource.parse(args.rng)
    if args.shape:
        shape = ShapeParams.parse(args.shape)
        O, lm, tm = order_ideal_from_shape(shape)
        ideal = build_distinguished_ideal(O, lm, tm, seed=args.seed, source=source)
        return ideal, {"shape": [shape.n, shape.kappa, shape.r, shape.s], "seed": args.seed,
                       "rng": str(source)}, None, None
    h = _int_list(args.hilbert)
    n = args.n if args.n else (h[1] if len(h) > 1 else 1)
    if not args.lm or not args.tm:
        raise ValueError("--hilbert needs --lm and --tm")
    O = lex_segment_complement(n, h)
    lm = [mon.parse_monomial(s, n) for s in args.lm.split(",")]
    tm = [mon.parse_monomial(s, n) for s in args.tm.split(",")]
    ideal = build_distinguished_ideal(O, lm, tm, seed=args.seed, source=source)
    return ideal, {"hilbert": h, "n": n, "seed": args.seed, "rng": str(source)}, None, None


def cmd_analyze(args) -> int:
    ideal, source, variant, field = _ideal_from_args(args)
    variant = args.variant or variant or PRIME
    field = parse_field(args.field) if args.field else field
    result = analyze(
        ideal,
        variant=variant,
        field=field,
        check_efficiency=args.check_efficiency,
        check_exact_efficiency=args.check_exact_efficiency,
        dump_matrix=args.dump_matrix,
        budget=args.budget,
        source=source,
    )
    _emit(json.dumps(result.report, indent=2) + "\n", args.output)
    return result.exit_code


def cmd_generate(args) -> int:
    ideal, _, _, _ = _ideal_from_args(args)
    _emit(json.dumps(ideal.to_json(), indent=2) + "\n", args.output)
    return 0


def cmd_scan(args) -> int:
    rows = plausible_scan(_range(args.n), _range(args.kappa), _range(args.r), _range(args.s),
                          workers=args.workers)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.format == "json":
            rows_to_json(rows, out)
        else:
            rows_to_csv(rows, out)
    finally:
        if args.output:
            out.close()
    return 0


def cmd_examples(args) -> int:
    for name, ex in EXAMPLES.items():
        tag = " [extended]" if ex.extended else ""
        expect = ", ".join(f"{k}={v}" for k, v in ex.expected.items() if k != "theta")
        print(f"{name}{tag}: {ex.description}" + (f" ({expect})" if expect else ""))
    return 0


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borderlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="tangent space, genericity verdict, efficiency")
    _add_source_args(a)
    a.add_argument("--field", help="q or gf:PRIME (default q when mu*nu <= 2000, else gf:32713)")
    a.add_argument("--variant", choices=[PRIME, DOUBLE_PRIME])
    a.add_argument("--check-efficiency", action="store_true")
    a.add_argument("--check-exact-efficiency", action="store_true")
    a.add_argument("--budget", type=int, default=200_000, help="S-pair budget for Buchberger")
    a.add_argument("--dump-matrix", metavar="PATH", help="write the tangent relation matrix")
    a.add_argument("--format", choices=["json"], default="json")
    a.add_argument("--output", "-o")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="write a seeded distinguished ideal as JSON")
    _add_source_args(g, allow_file=False)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("scan", help="plausibility table over ranges of shapes")
    s.add_argument("--n", required=True, help="range like 5..50")
    s.add_argument("--kappa", required=True)
    s.add_argument("--r", required=True)
    s.add_argument("--s", required=True)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--workers", type=int, help="worker processes (default BORDERLAB_THREADS or 1)")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_scan)

    e = sub.add_parser("examples", help="list named examples")
    e.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ArithmeticError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
