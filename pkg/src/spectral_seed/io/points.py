"""Points CSV ingestion and export.

The dialect is fixed: comma separator, '.' decimal point, exactly two columns
(x, y) and an optional header line. Written floats use Python's shortest
round-trip representation, so identical inputs give byte-identical files.
"""

import csv
import logging
import math
from typing import TYPE_CHECKING

import numpy as np

from spectral_seed.grid import InvalidPointSetError, PointSet
from spectral_seed.io.base import PointsFormatError

if TYPE_CHECKING:
    from pathlib import Path

logger = logging.getLogger(__name__)


def _parse_row(row: list[str]) -> tuple[float, float] | None:
    """Parse a two-column row, returning None when it is not numeric."""
    try:
        x, y = float(row[0]), float(row[1])
    except ValueError:
        return None
    return x, y


def read_points_csv(path: Path) -> PointSet:
    """Read (x, y) rows from a CSV file.

    A first line whose fields are not both numbers is treated as a header.
    Blank lines are skipped.

    Args:
        path: CSV file to read.

    Returns:
        The parsed points.

    Raises:
        PointsFormatError: If a row does not hold exactly two finite numbers or the
            file holds no points.
    """
    rows: list[tuple[float, float]] = []
    with path.open(newline="") as f:
        for line_number, row in enumerate(csv.reader(f), start=1):
            if not row or all(not field.strip() for field in row):
                continue
            if len(row) != 2:
                msg = f"{path}:{line_number}: expected 2 columns, got {len(row)}"
                raise PointsFormatError(msg)
            parsed = _parse_row(row)
            if parsed is None:
                if not rows and line_number == 1:
                    logger.debug("Treating first line of %s as header: %s", path, row)
                    continue
                msg = f"{path}:{line_number}: non-numeric values {row}"
                raise PointsFormatError(msg)
            if not (math.isfinite(parsed[0]) and math.isfinite(parsed[1])):
                msg = f"{path}:{line_number}: non-finite values {row}"
                raise PointsFormatError(msg)
            rows.append(parsed)

    if not rows:
        msg = f"{path} contains no points"
        raise PointsFormatError(msg)
    try:
        points = PointSet(np.array(rows, dtype=np.float64))
    except InvalidPointSetError as e:
        raise PointsFormatError(str(e)) from e
    logger.info("Read %d points from %s", len(points), path)
    return points


def write_points_csv(points: PointSet, path: Path, *, header: bool = True) -> None:
    """Write points as "x,y" rows, optionally preceded by a header line."""
    with path.open("w", newline="") as f:
        if header:
            f.write("x,y\n")
        f.writelines(f"{x!r},{y!r}\n" for x, y in points.coords.tolist())


def write_assignments_csv(points: PointSet, assignments: np.ndarray, path: Path) -> None:
    """Write the input points with their cluster index appended as a third column.

    Raises:
        ValueError: If the number of assignments differs from the number of points.
    """
    if len(assignments) != len(points):
        msg = f"Got {len(assignments)} assignments for {len(points)} points"
        raise ValueError(msg)
    with path.open("w", newline="") as f:
        f.write("x,y,cluster\n")
        f.writelines(
            f"{x!r},{y!r},{int(label)}\n" for (x, y), label in zip(points.coords.tolist(), assignments, strict=True)
        )
