"""
File: linemix/io/csv_codec.py

Project: linemix

Purpose:
Measurement CSV files and plot-data tables.

Format:
- UTF-8, comma separated, mandatory header, "." decimal point
- header `x,y` or `x,y,label`
- floats written with 17 significant digits (lossless round trip)
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from linemix.core.types import Dataset
from linemix.errors import CsvFormatError, DatasetError

PathLike = Union[str, Path]

HEADER_PLAIN = ("x", "y")
HEADER_LABELED = ("x", "y", "label")


def format_float(value: float) -> str:
    return f"{float(value):.17g}"


def _format_cell(value) -> str:
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    return str(value)


def dump_dataset(d: Dataset) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if d.truth is not None:
        writer.writerow(HEADER_LABELED)
        for x, y, label in zip(d.x, d.y, d.truth):
            writer.writerow((format_float(x), format_float(y), int(label)))
    else:
        writer.writerow(HEADER_PLAIN)
        for x, y in zip(d.x, d.y):
            writer.writerow((format_float(x), format_float(y)))
    return buf.getvalue()


def write_dataset(d: Dataset, path: PathLike) -> None:
    Path(path).write_text(dump_dataset(d), encoding="utf-8")


def _parse_float(raw: str, line_number: int, column: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise CsvFormatError(line_number, f"{column} is not a number: {raw!r}") from None
    if not math.isfinite(value):
        raise CsvFormatError(line_number, f"{column} must be finite, got {raw!r}")
    return value


def parse_dataset(text: str) -> Dataset:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows:
        raise CsvFormatError(1, "empty file, expected a header row")

    header = tuple(cell.strip() for cell in rows[0])
    if header not in (HEADER_PLAIN, HEADER_LABELED):
        raise CsvFormatError(1, f"bad header {','.join(header)!r}, expected 'x,y' or 'x,y,label'")
    labeled = header == HEADER_LABELED
    width = len(header)

    xs: list[float] = []
    ys: list[float] = []
    labels: list[int] = []
    for line_number, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != width:
            raise CsvFormatError(line_number, f"expected {width} fields, got {len(row)}")
        xs.append(_parse_float(row[0], line_number, "x"))
        ys.append(_parse_float(row[1], line_number, "y"))
        if labeled:
            try:
                label = int(row[2])
            except ValueError:
                raise CsvFormatError(line_number, f"label is not an integer: {row[2]!r}") from None
            if label < 1:
                raise CsvFormatError(line_number, f"label must be >= 1, got {label}")
            labels.append(label)

    if not xs:
        raise CsvFormatError(len(rows), "no measurements after the header")
    return Dataset(x=xs, y=ys, truth=labels if labeled else None)


def read_dataset(path: PathLike) -> Dataset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise CsvFormatError(1, f"not UTF-8: {exc}") from None
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from None
    return parse_dataset(text)


def write_table(path: PathLike, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    """Plot-data table: one column per series, header row first."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(v) for v in row])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")
