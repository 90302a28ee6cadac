"""CSV loading and saving for scalar-response functional datasets.

The x file has a header row of numeric observation times (wavelengths,
tract positions, ...) and one subject per row; the y file has a single
header cell and one numeric response per row, in the same subject order.
Subjects with any missing value are dropped with a warning.
"""

from __future__ import annotations

import csv
import math
import warnings
from pathlib import Path

import numpy as np

from .datagen import Dataset, ScalarSubject
from .errors import DataError
from .functionalize import LongitudinalSample

__all__ = ["load_sonf_csv", "save_sonf_csv"]

_MISSING = {"", "na", "nan", "null"}


def _read_rows(path: str | Path) -> list[list[str]]:
    path = Path(path)
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    if not rows:
        raise DataError(f"{path}: file is empty")
    return rows


def _parse_cell(text: str, path, line_no: int, col: int) -> float | None:
    stripped = text.strip()
    if stripped.lower() in _MISSING:
        return None
    try:
        value = float(stripped)
    except ValueError:
        raise DataError(f"{path}:{line_no}: column {col + 1}: not a number: {text!r}") from None
    if math.isnan(value):
        return None
    if math.isinf(value):
        raise DataError(f"{path}:{line_no}: column {col + 1}: non-finite value {text!r}")
    return value


def load_sonf_csv(x_path: str | Path, y_path: str | Path) -> Dataset:
    """Load a scalar-on-function dataset from paired CSV files.

    Returns a Dataset whose subjects all live in ``train`` (splitting is up
    to the caller) and whose ``grid`` holds the common observation times.
    Subjects with missing values are dropped and the count is reported via
    a warning; structural problems raise :class:`DataError` with the file
    and line number.
    """
    x_rows = _read_rows(x_path)
    y_rows = _read_rows(y_path)

    header = x_rows[0]
    if len(header) < 1:
        raise DataError(f"{x_path}:1: empty header row")
    times = []
    for col, cell in enumerate(header):
        value = _parse_cell(cell, x_path, 1, col)
        if value is None:
            raise DataError(f"{x_path}:1: column {col + 1}: header time is missing")
        times.append(value)
    times = np.asarray(times)

    n_x = len(x_rows) - 1
    n_y = len(y_rows) - 1
    if n_x != n_y:
        raise DataError(
            f"row count mismatch: {x_path} has {n_x} subjects but {y_path} has {n_y}"
        )
    if n_x < 1:
        raise DataError(f"{x_path}: no subject rows after the header")

    subjects = []
    dropped = 0
    for i in range(n_x):
        x_line, y_line = i + 2, i + 2
        row = x_rows[i + 1]
        if len(row) != times.size:
            raise DataError(
                f"{x_path}:{x_line}: expected {times.size} columns, got {len(row)}"
            )
        y_row = y_rows[i + 1]
        if len(y_row) != 1:
            raise DataError(f"{y_path}:{y_line}: expected a single response column, got {len(y_row)}")
        values = [_parse_cell(cell, x_path, x_line, col) for col, cell in enumerate(row)]
        y_value = _parse_cell(y_row[0], y_path, y_line, 0)
        if y_value is None or any(v is None for v in values):
            dropped += 1
            continue
        sample = LongitudinalSample(times=times, values=np.asarray(values))
        subjects.append(ScalarSubject(x=sample, y=y_value, signal=y_value))

    if dropped:
        warnings.warn(
            f"dropped {dropped} of {n_x} subjects with missing values", stacklevel=2
        )
    if not subjects:
        raise DataError(f"{x_path}: all {n_x} subjects had missing values")
    return Dataset(kind="sonf", train=tuple(subjects), test=(), grid=times)


def save_sonf_csv(ds: Dataset, x_path: str | Path, y_path: str | Path):
    """Write a scalar-response dataset back to the paired CSV schema."""
    if ds.kind != "sonf":
        raise DataError(f"can only save scalar-response datasets, got kind {ds.kind!r}")
    subjects = tuple(ds.train) + tuple(ds.test)
    with open(x_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(format(t, ".17g") for t in ds.grid)
        for s in subjects:
            writer.writerow(format(v, ".17g") for v in s.x.values)
    with open(y_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["y"])
        for s in subjects:
            writer.writerow([format(s.y, ".17g")])
