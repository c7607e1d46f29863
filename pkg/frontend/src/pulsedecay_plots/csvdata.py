"""Parser for the pulsedecay CSV wire format.

The files carry '#'-prefixed key=value metadata lines, one header row, then
comma-separated data rows with floats at 12 significant digits (nan/inf
sentinels spelled out).  This module is a read-only consumer: values are
parsed once and can be re-serialized byte-identically, which is what the
--dump mode relies on to prove the renderer never transforms data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path


class SchemaError(ValueError):
    """The file does not match the expected figure-kind schema."""


# figure kind -> (header columns, non-numeric column names)
KIND_SCHEMAS: dict[str, tuple[tuple[str, ...], frozenset[str]]] = {
    "ratio": (("delta_tau", "N", "p_bare", "p_pulsed", "ratio", "tan2_prediction"),
              frozenset()),
    "bath": (("N", "p_pulsed_over_A_per_Gamma", "p_bare_over_A_per_Gamma"),
             frozenset()),
    "freespace": (("N", "I", "I0"), frozenset()),
    "oracle": (("check", "status", "observed", "tolerance", "detail"),
               frozenset({"check", "status", "detail"})),
}


def _format_value(value) -> str:
    if isinstance(value, str):
        return value
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.12g}"


@dataclass
class DataTable:
    """One parsed sweep or report file."""

    kind: str
    metadata: dict[str, str]
    columns: tuple[str, ...]
    rows: list[list] = field(default_factory=list)   # float or str per cell

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def dump_lines(self) -> list[str]:
        """Re-serialize the plotted arrays exactly as they appear on disk."""
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_format_value(v) for v in row))
        return lines


def load_table(path: str | Path, kind: str) -> DataTable:
    if kind not in KIND_SCHEMAS:
        raise SchemaError(f"unknown figure kind {kind!r}; "
                          f"expected one of {sorted(KIND_SCHEMAS)}")
    expected, text_columns = KIND_SCHEMAS[kind]
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc

    metadata: dict[str, str] = {}
    header: tuple[str, ...] | None = None
    rows: list[list] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key.strip()] = value
            continue
        if header is None:
            header = tuple(c.strip() for c in line.split(","))
            if header != expected:
                raise SchemaError(
                    f"{path}: columns {list(header)} do not match the "
                    f"{kind!r} schema {list(expected)}")
            continue
        tokens = line.split(",", len(expected) - 1)
        if len(tokens) != len(expected):
            raise SchemaError(f"{path}: row has {len(tokens)} fields, "
                              f"expected {len(expected)}: {line!r}")
        row = []
        for name, tok in zip(expected, tokens):
            if name in text_columns:
                row.append(tok)
            else:
                try:
                    row.append(float(tok))
                except ValueError as exc:
                    raise SchemaError(f"{path}: bad numeric value {tok!r} "
                                      f"in column {name}") from exc
        rows.append(row)

    if header is None:
        raise SchemaError(f"{path}: no header row found")
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return DataTable(kind, metadata, header, rows)
