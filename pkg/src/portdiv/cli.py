"""Command-line interface.

Subcommands::

    compute   --matrix M.csv --sim S.csv [--disparity] [--labels L.txt]
              [--tolerance 1e-9] --out diverse.csv
    cosine    --occurrence O.csv --out S.csv
    correlate --table diverse.csv [--indicators a,b,...] --out corr.csv
    plot      --table diverse.csv [--labels L.txt] --out chart.svg

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 dimension
error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from portdiv import analysis, dataio, disparity, plot
from portdiv.errors import DimensionError, DiversityError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_DIMENSION = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cmd_compute(args: argparse.Namespace) -> int:
    matrix = dataio.load_matrix(args.matrix, labels=args.labels)
    if args.disparity:
        d = dataio.load_disparity(args.sim, args.tolerance)
    else:
        d = disparity.to_disparity(dataio.load_similarity(args.sim, args.tolerance))
    table = analysis.batch_indicators(matrix, d)
    dataio.write_output(table, args.out)
    n_rows, n_cols = matrix.shape
    print(f"analyzed {n_cols} columns over {n_rows} categories -> {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_cosine(args: argparse.Namespace) -> int:
    occ = dataio.load_matrix(args.occurrence)
    s = disparity.cosine_similarity(occ.values)
    dataio.write_matrix(s, args.out)
    print(f"cosine matrix {s.shape[0]}x{s.shape[0]} -> {args.out}", file=sys.stderr)
    return EXIT_OK


def _indicator_list(text: str | None) -> tuple[str, ...]:
    if text is None:
        return analysis.DEFAULT_INDICATORS
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    unknown = [name for name in names if name not in analysis.INDICATOR_NAMES]
    if unknown or not names:
        raise UsageError(
            f"unknown indicator(s): {', '.join(unknown) or '(none given)'}; "
            f"choose from {', '.join(analysis.INDICATOR_NAMES)}"
        )
    return names


def cmd_correlate(args: argparse.Namespace) -> int:
    names = _indicator_list(args.indicators)
    table = dataio.read_output(args.table)
    ct = analysis.correlation_table(table, names)
    analysis.write_correlation(ct, args.out)
    print(f"{len(names)}x{len(names)} correlations over {ct.n} portfolios -> {args.out}",
          file=sys.stderr)
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    table = dataio.read_output(args.table)
    labels = dataio.load_labels(args.labels, len(table)) if args.labels else None
    dataio.atomic_write_text(args.out, plot.render_range_svg(table, labels))
    print(f"plotted {len(table)} portfolios -> {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="portdiv", description="Variety, balance and disparity indicators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="indicator table for every column of a matrix")
    p.add_argument("--matrix", required=True, help="headerless CSV, categories x portfolios")
    p.add_argument("--sim", required=True, help="similarity (or, with --disparity, disparity) matrix")
    p.add_argument("--disparity", action="store_true", help="--sim already holds disparities")
    p.add_argument("--labels", help="one label per matrix column")
    p.add_argument("--tolerance", type=float, default=disparity.DEFAULT_TOLERANCE,
                   help="symmetry tolerance (default %(default)g)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("cosine", help="cosine similarity among the columns of a matrix")
    p.add_argument("--occurrence", required=True, help="headerless CSV, documents x categories")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_cosine)

    p = sub.add_parser("correlate", help="Pearson/Spearman table over indicator columns")
    p.add_argument("--table", required=True, help="diverse.csv from 'compute'")
    p.add_argument("--indicators", help="comma-separated indicator names")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("plot", help="SVG dot chart of Rao-Stirling vs DIV")
    p.add_argument("--table", required=True, help="diverse.csv from 'compute'")
    p.add_argument("--labels", help="one label per table row")
    p.add_argument("--out", required=True, help="output .svg path")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"portdiv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DimensionError as exc:
        print(f"portdiv {args.command}: dimension error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (DiversityError, KeyError, ValueError) as exc:
        print(f"portdiv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"portdiv {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
