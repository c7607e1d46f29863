"""pulsedecay-plots: render pulsedecay CSV artifacts into figures.

Usage:
    pulsedecay-plots render --kind bath --in bath.csv --out bath.png
    pulsedecay-plots render --kind freespace --in fs_tau_1.csv \
        --in2 fs_tau_pi.csv --out fs.png
    pulsedecay-plots render --kind ratio --in single.csv --out r.png \
        --dump arrays.txt

--dump re-emits the plotted arrays (header row plus data rows, exactly as
serialized on the wire) so they can be byte-compared with the input file.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .csvdata import KIND_SCHEMAS, SchemaError
from .render import FigureSpec, render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pulsedecay-plots")
    sub = parser.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", help="render one figure from CSV data")
    r.add_argument("--kind", required=True, choices=sorted(KIND_SCHEMAS))
    r.add_argument("--in", dest="input_path", required=True, metavar="CSV")
    r.add_argument("--in2", dest="input2_path", metavar="CSV",
                   help="second freespace CSV (other tau)")
    r.add_argument("--out", required=True, metavar="IMG")
    r.add_argument("--dump", metavar="PATH",
                   help="also write the plotted arrays for byte comparison")
    r.add_argument("--xlabel")
    r.add_argument("--ylabel")
    r.add_argument("--title")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    spec = FigureSpec(kind=ns.kind, input_path=ns.input_path,
                      output_path=ns.out, input2_path=ns.input2_path,
                      xlabel=ns.xlabel, ylabel=ns.ylabel, title=ns.title)
    try:
        table = render(spec)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if ns.dump:
        Path(ns.dump).write_text("\n".join(table.dump_lines()) + "\n", newline="\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
