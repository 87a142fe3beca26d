"""
Group descriptors, the generic group law and partial-product machinery.

Every concrete group is named by a frozen :class:`GroupDescriptor`; element
types in :mod:`prodlab.lab.concrete` carry their owner descriptor and
implement a small private protocol (``_op``, ``_inverse``, ``_distance``,
``_norm``, ``_power``). The public functions here check ownership and
dispatch, so analyses are written once for all groups.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Protocol, Sequence, runtime_checkable

from sympy import isprime

from .exceptions import ArgumentError, DescriptorMismatchError, UnsupportedError

logger = logging.getLogger(__name__)


class GroupKind(str, Enum):
    PADIC = "padic"
    CIRCLE = "circle"
    INT_PADIC = "int-padic-topology"
    CYCLIC = "cyclic"
    SYM_FIN = "sym-fin"
    PRODUCT = "product"
    BOUNDED_INT_SEQ = "bounded-int-seq"


class MetricKind(str, Enum):
    VALUATION = "valuation"
    ARC_LENGTH = "arc-length"
    PERMUTATION_POINTWISE = "permutation-pointwise"
    PRODUCT_SUP_WEIGHTED = "product-sup-weighted"
    SUBGROUP_CHAIN = "subgroup-chain"


_METRICS = {
    GroupKind.PADIC: MetricKind.VALUATION,
    GroupKind.INT_PADIC: MetricKind.VALUATION,
    GroupKind.CIRCLE: MetricKind.ARC_LENGTH,
    GroupKind.CYCLIC: MetricKind.SUBGROUP_CHAIN,
    GroupKind.SYM_FIN: MetricKind.PERMUTATION_POINTWISE,
    GroupKind.PRODUCT: MetricKind.PRODUCT_SUP_WEIGHTED,
    GroupKind.BOUNDED_INT_SEQ: MetricKind.PRODUCT_SUP_WEIGHTED,
}

# Kinds allowed as coordinates of a truncated product.
FACTOR_KINDS = frozenset({GroupKind.CYCLIC, GroupKind.PADIC, GroupKind.CIRCLE})


@dataclass(frozen=True)
class GroupDescriptor:
    """A computable topological group with an explicit left-invariant metric.

    Args:
        kind: Which concrete group this is.
        p: Prime for ``padic`` and ``int-padic-topology``.
        n: Modulus for ``cyclic``.
        depth: Stored digits (``padic``) or coordinates (``product``,
            ``bounded-int-seq``).
        factors: Coordinate groups of a ``product``.

    Raises:
        ArgumentError: If the parameters do not fit the kind.

    Example:
        >>> G = padic_group(3, 10)
        >>> G.abelian, G.metric_kind.value
        (True, 'valuation')
    """

    kind: GroupKind
    p: int | None = None
    n: int | None = None
    depth: int | None = None
    factors: tuple[GroupDescriptor, ...] = ()

    def __post_init__(self) -> None:
        kind = self.kind
        if kind in (GroupKind.PADIC, GroupKind.INT_PADIC):
            if self.p is None or not isprime(self.p):
                raise ArgumentError(f"{kind.value} needs a prime p, got {self.p!r}")
        if kind is GroupKind.PADIC and (self.depth is None or self.depth < 1):
            raise ArgumentError(f"padic depth must be >= 1, got {self.depth!r}")
        if kind is GroupKind.CYCLIC and (self.n is None or self.n < 1):
            raise ArgumentError(f"cyclic modulus must be >= 1, got {self.n!r}")
        if kind is GroupKind.BOUNDED_INT_SEQ and (self.depth is None or self.depth < 1):
            raise ArgumentError(f"bounded-int-seq depth must be >= 1, got {self.depth!r}")
        if kind is GroupKind.PRODUCT:
            if not self.factors:
                raise ArgumentError("a product needs at least one factor")
            for factor in self.factors:
                if factor.kind not in FACTOR_KINDS:
                    raise UnsupportedError(
                        f"product factors must be cyclic, padic or circle, got {factor.kind.value}"
                    )
            if self.depth is None:
                object.__setattr__(self, "depth", len(self.factors))
            elif self.depth != len(self.factors):
                raise ArgumentError("product depth must equal the number of factors")

    @property
    def abelian(self) -> bool:
        return self.kind is not GroupKind.SYM_FIN

    @property
    def metric_kind(self) -> MetricKind:
        return _METRICS[self.kind]

    @property
    def ultrametric(self) -> bool:
        """True when d(x, z) <= max(d(x, y), d(y, z)) holds exactly."""
        if self.kind is GroupKind.CIRCLE:
            return False
        if self.kind is GroupKind.PRODUCT:
            return all(f.kind is not GroupKind.CIRCLE for f in self.factors)
        return True

    @property
    def linear(self) -> bool:
        """True when the identity has a neighbourhood basis of open subgroups."""
        return self.ultrametric

    @property
    def complete(self) -> bool:
        """Whether limits of Cauchy partial products stay inside the group.

        The circle is modelled as 𝕋, so it counts as complete even though only
        rational points are represented.
        """
        if self.kind in (GroupKind.INT_PADIC, GroupKind.SYM_FIN, GroupKind.BOUNDED_INT_SEQ):
            return False
        return True

    def label(self) -> str:
        kind = self.kind
        if kind is GroupKind.PADIC:
            return f"Z_{self.p}[D={self.depth}]"
        if kind is GroupKind.INT_PADIC:
            return f"(Z,tau_{self.p})"
        if kind is GroupKind.CYCLIC:
            return f"Z({self.n})"
        if kind is GroupKind.PRODUCT:
            return f"product[{len(self.factors)}]"
        if kind is GroupKind.BOUNDED_INT_SEQ:
            return f"bounded-Z^N[D={self.depth}]"
        return kind.value

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind.value}
        for name in ("p", "n", "depth"):
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        if self.factors:
            data["factors"] = [f.to_json() for f in self.factors]
        return data


@lru_cache(maxsize=None)
def padic_group(p: int, depth: int) -> GroupDescriptor:
    return GroupDescriptor(GroupKind.PADIC, p=p, depth=depth)


@lru_cache(maxsize=None)
def int_padic_group(p: int) -> GroupDescriptor:
    return GroupDescriptor(GroupKind.INT_PADIC, p=p)


@lru_cache(maxsize=None)
def circle_group() -> GroupDescriptor:
    return GroupDescriptor(GroupKind.CIRCLE)


@lru_cache(maxsize=None)
def cyclic_group(n: int) -> GroupDescriptor:
    return GroupDescriptor(GroupKind.CYCLIC, n=n)


@lru_cache(maxsize=None)
def sym_fin_group() -> GroupDescriptor:
    return GroupDescriptor(GroupKind.SYM_FIN)


@lru_cache(maxsize=256)
def product_group(factors: tuple[GroupDescriptor, ...]) -> GroupDescriptor:
    return GroupDescriptor(GroupKind.PRODUCT, factors=tuple(factors))


@lru_cache(maxsize=None)
def bounded_int_seq_group(depth: int) -> GroupDescriptor:
    return GroupDescriptor(GroupKind.BOUNDED_INT_SEQ, depth=depth)


@runtime_checkable
class GroupValue(Protocol):
    """An element of a concrete group; see :mod:`prodlab.lab.concrete`."""

    @property
    def owner(self) -> GroupDescriptor: ...

    def _op(self, other: Any) -> Any: ...

    def _inverse(self) -> Any: ...

    def _distance(self, other: Any) -> Fraction: ...

    def _norm(self) -> Fraction: ...

    def _power(self, z: int) -> Any: ...

    def to_json(self) -> Any: ...


def format_fraction(value: Fraction | int) -> str:
    """Render an exact rational as ``"num/den"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _check_owner(g: GroupValue, h: GroupValue) -> None:
    if g.owner is not h.owner and g.owner != h.owner:
        raise DescriptorMismatchError(
            f"operands belong to different groups: {g.owner.label()} vs {h.owner.label()}",
            details={"left": g.owner.to_json(), "right": h.owner.to_json()},
        )


def op(g: GroupValue, h: GroupValue) -> GroupValue:
    """Group law ``g·h``; for permutations this is ``g∘h`` (h acts first)."""
    _check_owner(g, h)
    return g._op(h)


def inverse(g: GroupValue) -> GroupValue:
    return g._inverse()


def identity(G: GroupDescriptor) -> GroupValue:
    from .concrete import identity_of

    return identity_of(G)


def distance(g: GroupValue, h: GroupValue) -> Fraction:
    """Left-invariant distance, exact at the representation depth."""
    _check_owner(g, h)
    return g._distance(h)


def two_sided_distance(g: GroupValue, h: GroupValue) -> Fraction:
    """max(d(g, h), d(g⁻¹, h⁻¹)); differs from :func:`distance` only for sym-fin."""
    _check_owner(g, h)
    if g.owner.abelian:
        return g._distance(h)
    return max(g._distance(h), g._inverse()._distance(h._inverse()))


def norm(g: GroupValue) -> Fraction:
    """Distance from ``g`` to the identity."""
    return g._norm()


def power(g: GroupValue, z: int) -> GroupValue:
    """``g^z`` (``z·g`` in additive notation) for any integer ``z``."""
    return g._power(z)


def product_of(values: Iterable[GroupValue], owner: GroupDescriptor) -> GroupValue:
    """Left-to-right product; the empty product is the identity of ``owner``."""
    acc: GroupValue | None = None
    for value in values:
        acc = value if acc is None else op(acc, value)
    return identity(owner) if acc is None else acc


def partial_products(seq: Sequence[GroupValue] | GroupSequence, n: int) -> list[GroupValue]:
    """Return ``[Π_{i=0}^{k} b_i for k in 0..n]`` in left-to-right order."""
    if n < 0:
        raise ArgumentError(f"n must be >= 0, got {n}")
    acc = seq[0]
    out = [acc]
    for i in range(1, n + 1):
        acc = op(acc, seq[i])
        out.append(acc)
    return out


def segment_product(seq: Sequence[GroupValue] | GroupSequence, l: int, m: int) -> GroupValue:
    """Return ``Π_{i=l+1}^{m} b_i``.

    Raises:
        ArgumentError: If ``l >= m`` or ``l < -1``.
    """
    if l >= m:
        raise ArgumentError(f"segment needs l < m, got l={l}, m={m}")
    if l < -1:
        raise ArgumentError(f"segment start must be >= -1, got {l}")
    acc = seq[l + 1]
    for i in range(l + 2, m + 1):
        acc = op(acc, seq[i])
    return acc


class GroupSequence:
    """A sequence ``n ↦ a_n`` given by a closed-form rule, memoised on demand.

    Args:
        owner: Group every term belongs to.
        rule: Function returning the n-th term.
        name: Label used in reports.

    Example:
        >>> seq = GroupSequence(sym_fin_group(), lambda n: transposition(n, n + 1))
        >>> seq[3].to_json()
        [[3, 4], [4, 3]]
    """

    def __init__(
        self,
        owner: GroupDescriptor,
        rule: Callable[[int], GroupValue],
        name: str = "sequence",
    ):
        self.owner = owner
        self.rule = rule
        self.name = name
        self._memo: dict[int, GroupValue] = {}

    @classmethod
    def from_values(
        cls, owner: GroupDescriptor, values: Sequence[GroupValue], name: str = "finite"
    ) -> GroupSequence:
        """Wrap a finite list; terms past its end are the identity."""
        values = list(values)
        e = identity(owner)
        return cls(owner, lambda n: values[n] if n < len(values) else e, name)

    def __getitem__(self, n: int) -> GroupValue:
        if n < 0:
            raise ArgumentError(f"sequence index must be >= 0, got {n}")
        value = self._memo.get(n)
        if value is None:
            value = self.rule(n)
            if value.owner is not self.owner and value.owner != self.owner:
                raise DescriptorMismatchError(
                    f"term {n} of {self.name} lies in {value.owner.label()}, "
                    f"expected {self.owner.label()}"
                )
            self._memo[n] = value
        return value

    def take(self, count: int) -> list[GroupValue]:
        return [self[i] for i in range(count)]

    def reordered(self, phi: Sequence[int]) -> GroupSequence:
        """``n ↦ a_{φ(n)}``; ``φ`` is the identity past its given prefix."""
        phi = list(phi)
        return GroupSequence(
            self.owner,
            lambda n: self[phi[n]] if n < len(phi) else self[n],
            f"{self.name}∘φ",
        )

    def weighted(self, z: Sequence[int] | Callable[[int], int]) -> GroupSequence:
        """``n ↦ a_n^{z(n)}``; a finite ``z`` is extended by zeros."""
        if callable(z):
            weight = z
        else:
            values = list(z)

            def weight(n: int) -> int:
                return values[n] if n < len(values) else 0

        return GroupSequence(self.owner, lambda n: power(self[n], weight(n)), f"{self.name}^z")

    def __repr__(self) -> str:
        return f"GroupSequence({self.name!r}, owner={self.owner.label()})"
