"""
Three-valued verdicts, analysis configuration and productive reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Any

from .exceptions import ArgumentError
from .groups import format_fraction
from .types import ProductiveReportDict, VerdictDict


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check at a finite horizon.

    A FAILS verdict always carries a witness; HOLDS verdicts usually do.
    The tolerance is recorded so every claim can be re-checked exactly.
    """

    status: Status
    horizon: int
    tolerance: Fraction
    witness: dict[str, Any] | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.status is Status.FAILS and self.witness is None:
            raise ArgumentError("a failing verdict needs a witness")

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def to_dict(self) -> VerdictDict:
        out: VerdictDict = {
            "status": self.status.value,
            "horizon": self.horizon,
            "tolerance": format_fraction(self.tolerance),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class AnalysisConfig:
    """Horizon, tolerance and search budget shared by every analysis.

    Args:
        tolerance: Exact radius of the identity ball standing in for "every
            neighborhood".
        horizon: Last index examined.
        trials: Randomized trials for the quantifiers over weights and
            reorderings.
        seed: Base seed; trial ``t`` uses its own derived generator.
        exhaustive_threshold: Maximum number of weight choices enumerated
            exhaustively on a prefix.
        omega_cap: Range ``[-cap, cap]`` standing in for ω. Circle terms
            also get the multiplier that sends them nearest ``1/2``, however
            large.
    """

    tolerance: Fraction
    horizon: int
    trials: int = 1
    seed: int = 0
    exhaustive_threshold: int = 256
    omega_cap: int = 1000

    def __post_init__(self) -> None:
        if self.horizon < 2:
            raise ArgumentError(f"horizon must be >= 2, got {self.horizon}")
        if not self.tolerance > 0:
            raise ArgumentError(f"tolerance must be positive, got {self.tolerance}")
        if self.trials < 1:
            raise ArgumentError(f"trials must be >= 1, got {self.trials}")
        if self.exhaustive_threshold < 1 or self.omega_cap < 1:
            raise ArgumentError("exhaustive threshold and omega cap must be positive")
        object.__setattr__(self, "tolerance", Fraction(self.tolerance))

    def with_(self, **changes: Any) -> AnalysisConfig:
        return replace(self, **changes)


@dataclass(frozen=True)
class ProductiveReport:
    verdict: Verdict
    distance_trace: list[dict[str, Any]] = field(default_factory=list)
    worst_segment: tuple[int, int, Fraction] | None = None
    limit: Any = None
    z_used: list[int] | None = None
    permutation_used: list[int] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> Status:
        return self.verdict.status

    def to_dict(self) -> ProductiveReportDict:
        out: ProductiveReportDict = {"verdict": self.verdict.to_dict()}
        if self.worst_segment is not None:
            l, m, d = self.worst_segment
            out["worst_segment"] = [l, m, format_fraction(d)]
        if self.limit is not None:
            out["limit"] = self.limit.to_json() if hasattr(self.limit, "to_json") else self.limit
        if self.z_used is not None:
            out["z_used"] = list(self.z_used)
        if self.permutation_used is not None:
            out["permutation_used"] = list(self.permutation_used)
        if self.details:
            out["details"] = self.details
        return out
