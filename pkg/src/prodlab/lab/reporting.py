"""
Deterministic JSON reports and CSV distance traces.
"""

from __future__ import annotations

import csv
import json
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Mapping, Union

from .bounds import Omega

logger = logging.getLogger(__name__)

TRACE_HEADER = ("index", "l", "m", "distance-num", "distance-den")


def _encode(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Omega):
        return "omega"
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(data: Any) -> str:
    """Render a report with sorted keys; equal inputs give equal bytes."""
    return json.dumps(data, sort_keys=True, indent=2, default=_encode, ensure_ascii=False) + "\n"


def write_json(data: Any, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data), encoding="utf-8")
    logger.debug("wrote %s", path)
    return path


def write_trace_csv(trace: Iterable[Mapping[str, Any]], path: Union[str, Path]) -> Path:
    """Write ``index,l,m,distance-num,distance-den`` rows."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        for row in trace:
            d = Fraction(row["distance"])
            writer.writerow([row["index"], row["l"], row["m"], d.numerator, d.denominator])
    logger.debug("wrote trace %s", path)
    return path
