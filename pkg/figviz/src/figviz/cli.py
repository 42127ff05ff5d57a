"""Command-line wrapper: figviz render --kind ... --in ... --out ...

Exit codes: 0 success, 2 validation failure (bad flags, missing or
malformed inputs), 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from .render import SCHEMAS, FigureJob, RenderError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="figviz", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure from sweep CSV files")
    p.add_argument("--kind", choices=sorted(SCHEMAS), required=True)
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE", help="input CSV (repeatable)")
    p.add_argument("--out", required=True, help="output image path")
    p.add_argument("--format", choices=("png", "svg", "pdf"),
                   help="image format (default: from --out suffix)")
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    job = FigureJob.make(args.inputs, args.kind, args.out, args.format)
    try:
        result = render(job)
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"rendered {result.kind} from {result.rows} rows to {result.output}", file=sys.stderr)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
