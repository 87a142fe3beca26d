"""
Type definitions for prodlab reports.

These TypedDict definitions describe the JSON documents the library and the
CLI emit. Exact rationals are rendered as ``"num/den"`` strings.
"""

from typing import Any, Dict, List, Literal

from typing_extensions import NotRequired, TypedDict

# ============================================================================
# Verdict Types
# ============================================================================


VerdictStatus = Literal["holds", "fails", "inconclusive"]


class VerdictDict(TypedDict):
    """Serialized three-valued verdict."""

    status: VerdictStatus
    horizon: int
    tolerance: str
    witness: NotRequired[Dict[str, Any]]
    note: NotRequired[str]


class TraceRow(TypedDict):
    """One row of a suffix-distance trace.

    ``distance`` is the supremum of segment distances over segments
    starting at or after ``index``; ``(l, m)`` attains it.
    """

    index: int
    l: int
    m: int
    distance: Any


class ProductiveReportDict(TypedDict):
    """Serialized ProductiveReport."""

    verdict: VerdictDict
    worst_segment: NotRequired[List[Any]]
    limit: NotRequired[Any]
    z_used: NotRequired[List[int]]
    permutation_used: NotRequired[List[int]]
    details: NotRequired[Dict[str, Any]]


# ============================================================================
# Suite Report Types
# ============================================================================

# "pass" is a keyword, hence the functional form.
ReportItem = TypedDict(
    "ReportItem",
    {
        "name": str,
        "verdict": VerdictStatus,
        "witness": Any,
        "expected": VerdictStatus,
        "pass": bool,
    },
)


class SuiteReport(TypedDict):
    """Report written by ``prodlab verify``."""

    suite: str
    seed: int
    horizon: int
    items: List[ReportItem]


# ============================================================================
# Experiment Types
# ============================================================================


class ExperimentReport(TypedDict):
    """Report written by ``prodlab analyze``."""

    analysis: str
    group: Dict[str, Any]
    sequence: Dict[str, Any]
    seed: int
    horizon: int
    tolerance: str
    verdict: VerdictDict
    report: NotRequired[ProductiveReportDict]


__all__ = [
    "VerdictStatus",
    "VerdictDict",
    "TraceRow",
    "ProductiveReportDict",
    "ReportItem",
    "SuiteReport",
    "ExperimentReport",
]
