"""JSON result files."""

import json
from typing import TYPE_CHECKING, Any

from spectral_seed.peaks import PeakSet

if TYPE_CHECKING:
    from pathlib import Path


def write_json(data: dict[str, Any] | list[Any], path: Path) -> None:
    """Write data as indented JSON with a trailing newline, keeping key order."""
    with path.open("w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")


def read_json(path: Path) -> Any:  # noqa: ANN401
    """Read a JSON file."""
    with path.open() as f:
        return json.load(f)


def read_peaks_json(path: Path) -> PeakSet:
    """Read the peaks written by the detect command (or a bare PeakSet dictionary).

    Raises:
        ValueError: If the file does not hold a JSON object with a "peaks" list.
    """
    data = read_json(path)
    if not isinstance(data, dict) or not isinstance(data.get("peaks"), list):
        msg = f"{path} does not contain a peaks list"
        raise ValueError(msg)
    return PeakSet.from_dict(data)
