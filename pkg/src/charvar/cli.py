"""Command-line client for the analysis operations.

A thin layer over the same run_*/render_* functions the HTTP service uses:
reads a problem file, runs one analysis, prints the deterministic report.
Exit status: 0 on success, 1 on validation/unsupported input, 2 on parse
errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .problems import ParseError, parse_problem
from .reports import (UnsupportedProblemError, ValidationFailure, render_analyze,
                      render_lagrangian, render_omega, render_scheme, run_analyze,
                      run_lagrangian, run_omega, run_scheme)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="Exact local analysis of matrix-group representations of "
                    "finitely presented groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="problem file")
        p.add_argument("--machine", action="store_true",
                       help="emit key = value lines only")
        p.add_argument("--word-cap", type=int, default=6, metavar="K",
                       help="word length cap for the spanning test (default 6)")

    add_common(sub.add_parser("analyze", help="validation, centralizer, "
                              "irreducibility, Z1/B1/H1, smoothness, rigidity"))
    scheme_p = sub.add_parser("scheme", help="polynomial equations, Jacobian rank, "
                              "tangent dimension")
    add_common(scheme_p)
    scheme_p.add_argument("--equations", action="store_true",
                          help="also print the polynomial equations")
    add_common(sub.add_parser("lagrangian", help="boundary restriction: image "
                              "dimension in H1 and the isotropy verdict"))
    add_common(sub.add_parser("omega", help="the pairing matrix on H1 of a "
                              "surface group"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        problem = parse_problem(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "analyze":
            out = render_analyze(run_analyze(problem, args.word_cap),
                                 machine=args.machine)
        elif args.command == "scheme":
            out = render_scheme(run_scheme(problem), machine=args.machine,
                                include_equations=args.equations)
        elif args.command == "lagrangian":
            out = render_lagrangian(run_lagrangian(problem), machine=args.machine)
        else:
            out = render_omega(run_omega(problem, args.word_cap),
                               machine=args.machine)
    except ValidationFailure as exc:
        print("validation failure:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_VALIDATION
    except UnsupportedProblemError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
