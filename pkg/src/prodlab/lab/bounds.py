"""
Bound functions ``f: ℕ → ω+1`` and integer weight sequences ``z: ℕ → ℤ``.

Both are finitely described by an explicit prefix followed by a tail rule,
so they can be evaluated at any index. ω is a distinct sentinel and never a
large integer; analyses replace it by an explicit cap only at the point of
sampling, and record the cap they used.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .exceptions import ArgumentError
from .verdict import Status, Verdict

logger = logging.getLogger(__name__)


class Omega(Enum):
    OMEGA = "omega"

    def __repr__(self) -> str:
        return "ω"


OMEGA = Omega.OMEGA

ExtNat = Union[int, Omega]


def ext_le(a: ExtNat, b: ExtNat) -> bool:
    """``a ≤ b`` on ℕ ∪ {ω}."""
    if b is OMEGA:
        return True
    if a is OMEGA:
        return False
    return a <= b


def ext_json(a: ExtNat) -> int | str:
    return "omega" if a is OMEGA else a


def _check_ext(a: ExtNat, what: str) -> None:
    if a is not OMEGA and (not isinstance(a, int) or a < 0):
        raise ArgumentError(f"{what} must be a natural number or ω, got {a!r}")


# ============================================================================
# Bound functions
# ============================================================================


class TailKind(str, Enum):
    CONSTANT = "constant"
    OMEGA = "omega"
    IDENTITY_PLUS = "identity-plus"
    TABLE = "table"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class BoundFunction:
    """A function ``f: ℕ → ω+1`` given by a prefix and a tail rule.

    Tail rules:
        constant: ``f(n) = value``
        omega: ``f(n) = ω``
        identity-plus: ``f(n) = max(0, n + value)``
        table: ``f(n) = table[n]`` if listed, else ``default``
        periodic: ``f(n) = period[n mod len(period)]`` (absolute index)

    Prefix entries override the tail.
    """

    prefix: tuple[ExtNat, ...] = ()
    tail: TailKind = TailKind.CONSTANT
    value: int = 0
    table: tuple[tuple[int, ExtNat], ...] = ()
    default: ExtNat = 0
    period: tuple[ExtNat, ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        for i, a in enumerate(self.prefix):
            _check_ext(a, f"prefix[{i}]")
        for n, a in self.table:
            _check_ext(a, f"table[{n}]")
        _check_ext(self.default, "default")
        if self.tail is TailKind.CONSTANT and self.value < 0:
            raise ArgumentError(f"constant bound must be >= 0, got {self.value}")
        if self.tail is TailKind.PERIODIC:
            if not self.period:
                raise ArgumentError("periodic tail needs a non-empty period")
            for i, a in enumerate(self.period):
                _check_ext(a, f"period[{i}]")

    def __call__(self, n: int) -> ExtNat:
        if n < 0:
            raise ArgumentError(f"bound functions are defined on ℕ, got {n}")
        if n < len(self.prefix):
            return self.prefix[n]
        tail = self.tail
        if tail is TailKind.CONSTANT:
            return self.value
        if tail is TailKind.OMEGA:
            return OMEGA
        if tail is TailKind.IDENTITY_PLUS:
            return max(0, n + self.value)
        if tail is TailKind.TABLE:
            return dict(self.table).get(n, self.default)
        return self.period[n % len(self.period)]

    def capped(self, n: int, cap: int) -> int:
        """``f(n)`` with ω replaced by ``cap``."""
        a = self(n)
        return cap if a is OMEGA else a

    @property
    def is_bounded(self) -> bool:
        """True when ``f`` takes finitely many finite values."""
        if self.tail in (TailKind.OMEGA, TailKind.IDENTITY_PLUS):
            return False
        values: list[ExtNat] = list(self.prefix)
        if self.tail is TailKind.TABLE:
            # Finite table plus default; the table itself is finite.
            values += [a for _, a in self.table] + [self.default]
        elif self.tail is TailKind.PERIODIC:
            values += list(self.period)
        return OMEGA not in values

    def max_on(self, horizon: int) -> ExtNat:
        best: ExtNat = 0
        for n in range(horizon + 1):
            a = self(n)
            if a is OMEGA:
                return OMEGA
            best = max(best, a)  # type: ignore[type-var]
        return best

    def label(self) -> str:
        if self.name:
            return self.name
        return f"{self.tail.value}({self.value})" if self.tail is not TailKind.OMEGA else "f_ω"

    def to_json(self) -> dict:
        out: dict = {"tail-rule": self.tail.value}
        if self.prefix:
            out["prefix"] = [ext_json(a) for a in self.prefix]
        if self.tail in (TailKind.CONSTANT, TailKind.IDENTITY_PLUS):
            out["value"] = self.value
        if self.tail is TailKind.TABLE:
            out["table"] = {str(n): ext_json(a) for n, a in self.table}
            out["default"] = ext_json(self.default)
        if self.tail is TailKind.PERIODIC:
            out["period"] = [ext_json(a) for a in self.period]
        return out

    # Factories

    @classmethod
    def constant(cls, c: int) -> BoundFunction:
        return cls(tail=TailKind.CONSTANT, value=c, name=f"const({c})")

    @classmethod
    def identity_plus(cls, c: int) -> BoundFunction:
        return cls(tail=TailKind.IDENTITY_PLUS, value=c, name=f"n+{c}" if c >= 0 else f"n{c}")

    @classmethod
    def periodic(cls, *period: ExtNat) -> BoundFunction:
        return cls(tail=TailKind.PERIODIC, period=tuple(period), name="periodic")

    @classmethod
    def from_table(cls, table: Mapping[int, ExtNat], default: ExtNat = 0) -> BoundFunction:
        return cls(tail=TailKind.TABLE, table=tuple(sorted(table.items())), default=default)


def f_omega() -> BoundFunction:
    return BoundFunction(tail=TailKind.OMEGA, name="f_ω")


def f_one() -> BoundFunction:
    return BoundFunction(tail=TailKind.CONSTANT, value=1, name="f_1")


def bound_le(f: BoundFunction, g: BoundFunction, horizon: int, eventual: bool = False) -> Verdict:
    """Compare ``f ≤ g`` (or ``f ≤* g`` with ``eventual=True``) on ``[0, horizon]``.

    The pointwise test is exact on the horizon and fails at the first
    violation. The eventual test holds from one past the last violation when
    that violation lies in the first three quarters of the horizon; a late
    violation leaves it inconclusive.

    Example:
        >>> bound_le(BoundFunction.identity_plus(0), BoundFunction.constant(5), 20).witness
        {'n': 6, 'f': 6, 'g': 5}
    """
    exact = Fraction(0)
    violations = [n for n in range(horizon + 1) if not ext_le(f(n), g(n))]
    if not eventual:
        if violations:
            n = violations[0]
            return Verdict(
                Status.FAILS, horizon, exact, {"n": n, "f": ext_json(f(n)), "g": ext_json(g(n))}
            )
        return Verdict(Status.HOLDS, horizon, exact, {"from": 0})
    if not violations:
        return Verdict(Status.HOLDS, horizon, exact, {"from": 0})
    last = violations[-1]
    if last < (3 * horizon) // 4:
        return Verdict(Status.HOLDS, horizon, exact, {"from": last + 1, "last_violation": last})
    logger.debug("≤* undecided: violation at %d near horizon %d", last, horizon)
    return Verdict(
        Status.INCONCLUSIVE,
        horizon,
        exact,
        {"last_violation": last},
        note="violations persist into the last quarter of the horizon",
    )


# ============================================================================
# Integer weight sequences
# ============================================================================


class WeightTail(str, Enum):
    ZERO = "zero"
    CONSTANT = "constant"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class IntWeightSeq:
    """A weight ``z: ℕ → ℤ`` given by a prefix and a tail rule.

    The periodic tail is indexed by absolute position, like the periodic
    bound functions.
    """

    prefix: tuple[int, ...] = ()
    tail: WeightTail = WeightTail.ZERO
    value: int = 0
    period: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.tail is WeightTail.PERIODIC and not self.period:
            raise ArgumentError("periodic tail needs a non-empty period")

    def __call__(self, n: int) -> int:
        if n < len(self.prefix):
            return self.prefix[n]
        if self.tail is WeightTail.ZERO:
            return 0
        if self.tail is WeightTail.CONSTANT:
            return self.value
        return self.period[n % len(self.period)]

    def _map(self, fn) -> IntWeightSeq:  # type: ignore[no-untyped-def]
        return IntWeightSeq(
            tuple(fn(a) for a in self.prefix),
            self.tail,
            fn(self.value),
            tuple(fn(a) for a in self.period),
        )

    def __abs__(self) -> IntWeightSeq:
        return self._map(abs)

    def positive_part(self) -> IntWeightSeq:
        return self._map(lambda a: max(0, a))

    def negative_part(self) -> IntWeightSeq:
        return self._map(lambda a: min(0, a))

    @property
    def finitely_supported(self) -> bool:
        return self.tail is WeightTail.ZERO or (
            self.tail is WeightTail.CONSTANT and self.value == 0
        )

    def support(self, limit: int | None = None) -> list[int]:
        """Nonzero positions below ``limit`` (the whole support when finite)."""
        if limit is None:
            if not self.finitely_supported:
                raise ArgumentError("an infinite support needs a limit")
            limit = len(self.prefix)
        return [n for n in range(limit) if self(n)]

    def values(self, count: int) -> list[int]:
        return [self(n) for n in range(count)]

    def to_json(self) -> dict:
        out: dict = {"prefix": list(self.prefix), "tail": self.tail.value}
        if self.tail is WeightTail.CONSTANT:
            out["value"] = self.value
        if self.tail is WeightTail.PERIODIC:
            out["period"] = list(self.period)
        return out

    @classmethod
    def from_list(cls, values: Sequence[int]) -> IntWeightSeq:
        return cls(tuple(int(a) for a in values))

    @classmethod
    def from_mapping(cls, values: Mapping[int, int]) -> IntWeightSeq:
        if not values:
            return cls()
        if min(values) < 0:
            raise ArgumentError("weight positions must be natural numbers")
        prefix = [0] * (max(values) + 1)
        for n, a in values.items():
            prefix[n] = int(a)
        return cls(tuple(prefix))


def decompose_weights(z: IntWeightSeq) -> tuple[IntWeightSeq, IntWeightSeq]:
    """Split ``z`` into ``(z₊, z₋)`` with ``z = z₊ + z₋`` and ``z₊ ≥ 0 ≥ z₋``."""
    return z.positive_part(), z.negative_part()


def weights_within(z: IntWeightSeq, f: BoundFunction, horizon: int) -> bool:
    """``|z| ≤ f`` on ``[0, horizon]``."""
    return all(ext_le(abs(z(n)), f(n)) for n in range(horizon + 1))


def split_weights(z: IntWeightSeq, f: BoundFunction, k: int, horizon: int) -> list[IntWeightSeq]:
    """Write ``z`` as a sum of ``k`` weights each bounded by ``f`` on ``[0, horizon]``.

    Piece ``i`` takes ``min(f, max(0, |z| - i·f))`` with the sign of ``z``;
    where ``f`` is ω the first piece takes everything.

    Raises:
        ArgumentError: If ``|z(n)| > k·f(n)`` somewhere on the horizon.
    """
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    pieces: list[list[int]] = [[] for _ in range(k)]
    for n in range(horizon + 1):
        a, bound = z(n), f(n)
        sign = 1 if a >= 0 else -1
        if bound is OMEGA:
            for i in range(k):
                pieces[i].append(a if i == 0 else 0)
            continue
        if abs(a) > k * bound:
            raise ArgumentError(f"|z({n})| = {abs(a)} exceeds {k}·f({n}) = {k * bound}")
        for i in range(k):
            pieces[i].append(sign * min(bound, max(0, abs(a) - i * bound)))
    return [IntWeightSeq.from_list(p) for p in pieces]
