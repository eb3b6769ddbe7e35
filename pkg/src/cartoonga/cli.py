"""Command-line interface.

Exit codes: 0 success, 1 selftest failure, 2 bad user input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, verify
from .dj import (
    FULL_PRODUCT_MAX_BITS,
    MAX_BITS,
    DJOutcome,
    parse_function,
    pipeline_stages,
    run_dj,
)
from .expr import ExprError, evaluate_text, format_multivector
from .multivector import Multivector
from .render import bag_of_shapes, render_ascii, render_svg

EXIT_OK, EXIT_SELFTEST, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class UserInputError(Exception):
    pass


@dataclass
class RunReport:
    description: str
    outcome: DJOutcome
    elapsed_ms: float
    stages: list[tuple[str, Multivector]] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = self.outcome
        return {
            "input": self.description,
            "bits": out.n,
            "classification": out.classification.value,
            "f_at_zero": out.f_at_zero,
            "scalar_witness": out.scalar_witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "stages": [{"name": name, "multivector": mv.to_dict()} for name, mv in self.stages],
        }


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _render(x: Multivector, fmt: str) -> str:
    try:
        shapes = bag_of_shapes(x)
    except ValueError as exc:
        raise UserInputError(str(exc)) from None
    if fmt == "svg":
        return render_svg(shapes)
    if fmt == "ascii":
        return render_ascii(shapes)
    if fmt == "json":
        return json.dumps([s.__dict__ for s in shapes], indent=2) + "\n"
    raise UserInputError(f"unknown render format {fmt!r}")


# -- subcommands --------------------------------------------------------------


def cmd_eval(args) -> int:
    x = evaluate_text(args.expr, args.dim)
    if args.output == "json":
        print(x.to_json())
    elif args.output == "glyph":
        try:
            print(format_multivector(x, "glyph"))
        except ValueError as exc:
            raise UserInputError(str(exc)) from None
    else:
        print(x.to_text())
    return EXIT_OK


def cmd_dj(args) -> int:
    if not 1 <= args.bits <= MAX_BITS:
        raise UserInputError(f"--bits must be in [1, {MAX_BITS}]")
    try:
        f = parse_function(args.function, args.bits)
    except ValueError as exc:
        raise UserInputError(f"bad --function: {exc}") from None
    needs_stages = args.show_stages or args.render
    if needs_stages and f.n > FULL_PRODUCT_MAX_BITS:
        raise UserInputError(f"--show-stages/--render support at most {FULL_PRODUCT_MAX_BITS} bits")

    start = time.perf_counter()
    outcome = run_dj(f, method=args.method)
    elapsed = (time.perf_counter() - start) * 1000
    stages = pipeline_stages(f) if needs_stages else []
    report = RunReport(f"{args.function} (n={f.n})", outcome, elapsed, stages if args.show_stages else [])

    if args.render:
        fmt, sep, path = args.render.partition(":")
        if not sep or fmt not in ("svg", "ascii") or not path:
            raise UserInputError("--render expects svg:<path> or ascii:<path>")
        bag = dict(stages)["F*" if args.render_full else "Pi"]
        _write(path, _render(bag, fmt))

    if args.output == "json":
        print(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK
    print(_color(outcome.describe(), "1", sys.stdout))
    if args.show_stages:
        for name, mv in report.stages:
            print(f"  {name:<7} {mv.to_text()}")
    print(f"  f = {f.to_bits() if len(f.table) <= 64 else args.function}, elapsed {elapsed:.3f} ms")
    return EXIT_OK


def cmd_render(args) -> int:
    if args.json:
        try:
            text = sys.stdin.read() if args.json == "-" else Path(args.json).read_text(encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot read {args.json}: {exc.strerror}") from None
        try:
            x = Multivector.from_json(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise UserInputError(f"bad multivector JSON: {exc}") from None
    elif args.expr is not None:
        x = evaluate_text(args.expr, args.dim)
    else:
        raise UserInputError("render needs an expression or --json FILE")
    out = _render(x, args.output)
    if args.out:
        _write(args.out, out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = verify.run_all()
    if args.output == "json":
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            print(r.summary())
    return EXIT_OK if all(r.ok for r in results) else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cartoonga",
        description="Exact geometric algebra on bitmask blades, Deutsch-Jozsa without qubits.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "expression precedence (tightest first): unary '-', postfix '~', '*', binary '+'/'-'.\n"
            "'*' is mandatory; blades: 1, e12, e{1,2,5}, eb110010; glyphs (dim 2):\n"
            "WDOT BDOT RIGHT LEFT UP DOWN WSQ BSQ (or their Unicode shapes).\n"
            "truth tables are written A_1 most significant: '0001' means f(1,1) = 1."
        ),
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("expr")
    e.add_argument("--dim", type=int, default=2)
    e.add_argument("--output", choices=("text", "json", "glyph"), default="text")
    e.set_defaults(func=cmd_eval)

    d = sub.add_parser("dj", help="run the Deutsch-Jozsa pipeline on a truth table")
    d.add_argument("--bits", type=int, required=True, help="number of input bits n")
    d.add_argument("--function", required=True,
                   help="2^n-character bit string (A_1 most significant) or constant0, constant1, "
                        "balanced:parity, balanced:tophalf, balanced:random?seed=<u64>")
    d.add_argument("--show-stages", action="store_true", help="print every intermediate bag")
    d.add_argument("--render", metavar="FMT:PATH", help="write the projected final bag as svg:<path> or ascii:<path>")
    d.add_argument("--render-full", action="store_true", help="render the whole final product instead of its scalar part")
    d.add_argument("--method", choices=("auto", "full", "scalar"), default="auto")
    d.add_argument("--output", choices=("text", "json"), default="text")
    d.set_defaults(func=cmd_dj)

    r = sub.add_parser("render", help="draw a 2D or 3D multivector as a bag of shapes")
    r.add_argument("expr", nargs="?")
    r.add_argument("--dim", type=int, default=2)
    r.add_argument("--json", metavar="FILE", help="read the multivector from a JSON file ('-' for stdin)")
    r.add_argument("--output", choices=("ascii", "svg", "json"), default="ascii")
    r.add_argument("--out", metavar="PATH")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("selftest", help="run the built-in verification suites")
    s.add_argument("--output", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExprError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except UserInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
