"""Reading and writing matrices and indicator tables.

Input matrices are headerless comma-separated files of decimal numbers
(``Matrix.csv``, ``Sim.csv``). Indicator tables are written as CSV with a
header row and shortest round-trip float formatting, so identical inputs
give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import math
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from portdiv.disparity import DEFAULT_TOLERANCE, validate_disparity, validate_similarity
from portdiv.errors import DiversityError, ParseError
from portdiv.measures import IndicatorRecord

__all__ = [
    "OUTPUT_COLUMNS",
    "MatrixFile",
    "OutputTable",
    "atomic_write_text",
    "format_number",
    "load_disparity",
    "load_labels",
    "load_matrix",
    "load_similarity",
    "read_output",
    "write_matrix",
    "write_output",
]

OUTPUT_COLUMNS = (
    "column",
    "label",
    "rao_stirling",
    "div",
    "gini",
    "gini_simpson",
    "shannon",
    "h_max",
    "variety_relative",
    "n_total",
    "n_present",
    "coeff_variation",
)

_INT_FIELDS = {"column", "n_total", "n_present"}


@dataclass
class MatrixFile:
    """A parsed headerless numeric CSV file."""

    path: Path | None
    values: np.ndarray
    labels: list[str] | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


@dataclass
class OutputTable:
    """Indicator records, one per analysed column, in column order."""

    records: list[IndicatorRecord]
    labels: list[str] | None = None

    def __len__(self) -> int:
        return len(self.records)

    def column(self, name: str) -> list[float | None]:
        """Values of one indicator across all records."""
        if name not in OUTPUT_COLUMNS[2:]:
            raise KeyError(name)
        return [getattr(r, name) for r in self.records]

    def label_of(self, i: int) -> str:
        if self.labels is not None and self.labels[i]:
            return self.labels[i]
        return str(self.records[i].column_index)


def format_number(x: float | int | None) -> str:
    """Canonical text form: shortest repr that reparses to the same double."""
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot format non-finite value {x!r}")
    if x == 0.0:
        return "0.0"
    return repr(x)


def _read_rows(path: Path) -> list[list[str]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not a UTF-8 text file") from exc
    rows = list(csv.reader(io.StringIO(text)))
    while rows and not any(f.strip() for f in rows[-1]):
        rows.pop()
    if not rows:
        raise ParseError(f"{path}: empty file")
    return rows


def _parse_numeric(path: Path, rows: list[list[str]], nonnegative: bool) -> np.ndarray:
    width = len(rows[0])
    out = np.empty((len(rows), width), dtype=np.float64)
    for lineno, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(
                f"{path}: line {lineno} has {len(row)} fields, expected {width}"
            )
        for col, text in enumerate(row, start=1):
            try:
                value = float(text)
            except ValueError:
                raise ParseError(
                    f"{path}: line {lineno}, column {col}: not a number: {text!r}"
                ) from None
            if not math.isfinite(value):
                raise ParseError(f"{path}: line {lineno}, column {col}: non-finite value")
            if nonnegative and value < 0:
                raise ParseError(
                    f"{path}: line {lineno}, column {col}: negative value {text!r}"
                )
            out[lineno - 1, col - 1] = value
    return out


def load_matrix(path: str | os.PathLike, labels: str | os.PathLike | None = None) -> MatrixFile:
    """Load a headerless CSV of nonnegative numbers.

    Both LF and CRLF line endings are accepted and trailing blank lines are
    ignored. Ragged rows are an error; they are never padded.

    Parameters
    ----------
    path : path-like
        The CSV file. Columns are the units of analysis.
    labels : path-like, optional
        Sidecar file with one label per column.

    Raises
    ------
    ParseError
        On an empty file, a ragged row, or a negative or non-numeric field.
        The message names the offending line (and column).
    """
    path = Path(path)
    values = _parse_numeric(path, _read_rows(path), nonnegative=True)
    names = load_labels(labels, values.shape[1]) if labels is not None else None
    return MatrixFile(path=path, values=values, labels=names)


def load_similarity(path: str | os.PathLike, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Load and validate a square similarity matrix (unit diagonal)."""
    path = Path(path)
    raw = _parse_numeric(path, _read_rows(path), nonnegative=False)
    try:
        return validate_similarity(raw, tolerance)
    except DiversityError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def load_disparity(path: str | os.PathLike, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Load and validate a square disparity matrix (zero diagonal)."""
    path = Path(path)
    raw = _parse_numeric(path, _read_rows(path), nonnegative=False)
    try:
        return validate_disparity(raw, tolerance)
    except DiversityError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def load_labels(path: str | os.PathLike, expected: int | None = None) -> list[str]:
    """Read one label per line; the count must equal ``expected`` if given."""
    text = Path(path).read_text(encoding="utf-8")
    names = [line.rstrip("\r") for line in text.split("\n")]
    if names and names[-1] == "":
        names.pop()
    if expected is not None and len(names) != expected:
        raise ParseError(f"{path}: {len(names)} labels for {expected} columns")
    return names


def atomic_write_text(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to a temporary sibling file and rename it into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _csv_text(header: Sequence[str] | None, rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def write_matrix(values: np.ndarray, path: str | os.PathLike) -> None:
    """Write a headerless CSV matrix in canonical number format."""
    a = np.asarray(values, dtype=np.float64)
    rows = ([format_number(float(x)) for x in row] for row in a)
    atomic_write_text(path, _csv_text(None, rows))


def write_output(table: OutputTable, path: str | os.PathLike) -> None:
    """Write the indicator table as ``diverse.csv``.

    Raises
    ------
    DiversityError
        If the table is empty.
    """
    if len(table) == 0:
        raise DiversityError("no columns analyzed")
    rows = []
    for i, rec in enumerate(table.records):
        label = table.labels[i] if table.labels is not None else ""
        rows.append(
            [format_number(rec.column_index), label]
            + [format_number(getattr(rec, name)) for name in OUTPUT_COLUMNS[2:]]
        )
    atomic_write_text(path, _csv_text(OUTPUT_COLUMNS, rows))


def read_output(path: str | os.PathLike) -> OutputTable:
    """Read a table written by :func:`write_output`."""
    path = Path(path)
    rows = _read_rows(path)
    header = tuple(rows[0])
    if header != OUTPUT_COLUMNS:
        raise ParseError(f"{path}: unexpected header {','.join(header)!r}")
    records = []
    labels = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(OUTPUT_COLUMNS):
            raise ParseError(
                f"{path}: line {lineno} has {len(row)} fields, expected {len(OUTPUT_COLUMNS)}"
            )
        fields: dict[str, object] = {}
        for name, text in zip(OUTPUT_COLUMNS, row):
            if name == "label":
                labels.append(text)
                continue
            try:
                if name in _INT_FIELDS:
                    fields[name] = int(text)
                elif text == "" and name == "coeff_variation":
                    fields[name] = None
                else:
                    fields[name] = float(text)
            except ValueError:
                raise ParseError(f"{path}: line {lineno}, field {name}: {text!r}") from None
        fields["column_index"] = fields.pop("column")
        records.append(IndicatorRecord(**fields))
    return OutputTable(records=records, labels=labels if any(labels) else None)
