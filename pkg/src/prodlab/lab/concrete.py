"""
Concrete computable groups and their exact element types.

Values are immutable. p-adic integers are stored as residues mod p^depth,
circle points as reduced rationals in [0, 1), permutations as the sorted
list of moved points, and product coordinates as raw scalars (residues or
rationals) interpreted by their factor descriptor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Iterable, Mapping, Sequence

from sympy import isprime, multiplicity

from .exceptions import ArgumentError, DomainError, UnsupportedError
from .groups import (
    GroupDescriptor,
    GroupKind,
    GroupValue,
    bounded_int_seq_group,
    circle_group,
    cyclic_group,
    format_fraction,
    int_padic_group,
    padic_group,
    sym_fin_group,
)


@lru_cache(maxsize=4096)
def _modulus(p: int, depth: int) -> int:
    return p**depth


def int_valuation(n: int, p: int) -> int | None:
    """v_p(n) for an integer; ``None`` stands for v_p(0) = ∞."""
    if n == 0:
        return None
    return int(multiplicity(p, abs(n)))


def _pow_distance(v: int | None, p: int) -> Fraction:
    return Fraction(0) if v is None else Fraction(1, p**v)


def _arc(a: Fraction, b: Fraction) -> Fraction:
    t = (a - b) % 1
    return min(t, 1 - t)


# ============================================================================
# ℤ_p
# ============================================================================


@dataclass(frozen=True)
class PadicInt:
    """A p-adic integer known modulo p^depth.

    The residue determines the digit list and vice versa; ``digits`` is
    least significant first.
    """

    p: int
    depth: int
    residue: int

    def __post_init__(self) -> None:
        if not 0 <= self.residue < _modulus(self.p, self.depth):
            raise ArgumentError(
                f"residue {self.residue} out of range for p={self.p}, depth={self.depth}"
            )

    @classmethod
    def from_int(cls, n: int, p: int, depth: int) -> PadicInt:
        return cls(p, depth, n % _modulus(p, depth))

    @classmethod
    def from_digits(cls, digits: Sequence[int], p: int) -> PadicInt:
        if not digits:
            raise ArgumentError("a p-adic value needs at least one digit")
        residue = 0
        for i, d in enumerate(digits):
            if not 0 <= d < p:
                raise ArgumentError(f"digit {d} at position {i} not in [0, {p})")
            residue += d * p**i
        return cls(p, len(digits), residue)

    @cached_property
    def digits(self) -> tuple[int, ...]:
        out = []
        r = self.residue
        for _ in range(self.depth):
            r, d = divmod(r, self.p)
            out.append(d)
        return tuple(out)

    @property
    def modulus(self) -> int:
        return _modulus(self.p, self.depth)

    @property
    def owner(self) -> GroupDescriptor:
        return padic_group(self.p, self.depth)

    def _coerce(self, other: PadicInt | int) -> int:
        if isinstance(other, int):
            return other
        if other.p != self.p or other.depth != self.depth:
            raise DomainError("p-adic operands must share p and depth")
        return other.residue

    def __add__(self, other: PadicInt | int) -> PadicInt:
        return PadicInt(self.p, self.depth, (self.residue + self._coerce(other)) % self.modulus)

    def __sub__(self, other: PadicInt | int) -> PadicInt:
        return PadicInt(self.p, self.depth, (self.residue - self._coerce(other)) % self.modulus)

    def __mul__(self, other: PadicInt | int) -> PadicInt:
        return PadicInt(self.p, self.depth, (self.residue * self._coerce(other)) % self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> PadicInt:
        return PadicInt(self.p, self.depth, (-self.residue) % self.modulus)

    def _op(self, other: PadicInt) -> PadicInt:
        return self + other

    def _inverse(self) -> PadicInt:
        return -self

    def _distance(self, other: PadicInt) -> Fraction:
        return _pow_distance(int_valuation((self.residue - other.residue) % self.modulus, self.p), self.p)

    def _norm(self) -> Fraction:
        return _pow_distance(int_valuation(self.residue, self.p), self.p)

    def _power(self, z: int) -> PadicInt:
        return self * z

    def to_json(self) -> list[int]:
        return list(self.digits)


def int_to_padic(n: int, p: int, depth: int) -> PadicInt:
    """Embed an integer into ℤ_p at the given depth.

    Raises:
        ArgumentError: If ``p`` is not prime or ``depth < 1``.

    Example:
        >>> int_to_padic(-1, 2, 4).digits
        (1, 1, 1, 1)
    """
    if not isprime(p):
        raise ArgumentError(f"p must be prime, got {p}")
    if depth < 1:
        raise ArgumentError(f"depth must be >= 1, got {depth}")
    return PadicInt.from_int(n, p, depth)


def padic_to_residue(x: PadicInt) -> int:
    return x.residue


# ============================================================================
# 𝕋 (rational points), (ℤ, τ_p), ℤ(n)
# ============================================================================


@dataclass(frozen=True)
class CirclePoint:
    """A rational point of 𝕋 = ℝ/ℤ, stored in [0, 1)."""

    value: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.value, Fraction) or not 0 <= self.value < 1:
            raise ArgumentError(f"circle value must be a Fraction in [0, 1), got {self.value!r}")

    @property
    def owner(self) -> GroupDescriptor:
        return circle_group()

    def _op(self, other: CirclePoint) -> CirclePoint:
        return CirclePoint((self.value + other.value) % 1)

    def _inverse(self) -> CirclePoint:
        return CirclePoint((-self.value) % 1)

    def _distance(self, other: CirclePoint) -> Fraction:
        return _arc(self.value, other.value)

    def _norm(self) -> Fraction:
        return min(self.value, 1 - self.value)

    def _power(self, z: int) -> CirclePoint:
        return CirclePoint((self.value * z) % 1)

    def to_json(self) -> str:
        return format_fraction(self.value)


def circle_point(x: Fraction | int | str) -> CirclePoint:
    """Reduce a rational modulo 1."""
    return CirclePoint(Fraction(x) % 1)


@dataclass(frozen=True)
class IntTauP:
    """An integer in ℤ carrying the p-adic topology τ_p."""

    p: int
    value: int

    @property
    def owner(self) -> GroupDescriptor:
        return int_padic_group(self.p)

    def _op(self, other: IntTauP) -> IntTauP:
        return IntTauP(self.p, self.value + other.value)

    def _inverse(self) -> IntTauP:
        return IntTauP(self.p, -self.value)

    def _distance(self, other: IntTauP) -> Fraction:
        return _pow_distance(int_valuation(self.value - other.value, self.p), self.p)

    def _norm(self) -> Fraction:
        return _pow_distance(int_valuation(self.value, self.p), self.p)

    def _power(self, z: int) -> IntTauP:
        return IntTauP(self.p, self.value * z)

    def to_json(self) -> int:
        return self.value


def embed_int_tau_p(n: int, p: int) -> IntTauP:
    """The integer ``n`` as an element of (ℤ, τ_p)."""
    int_padic_group(p)  # validates p
    return IntTauP(p, n)


@dataclass(frozen=True)
class CyclicValue:
    n: int
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.n:
            raise ArgumentError(f"{self.value} is not a residue mod {self.n}")

    @property
    def owner(self) -> GroupDescriptor:
        return cyclic_group(self.n)

    def _op(self, other: CyclicValue) -> CyclicValue:
        return CyclicValue(self.n, (self.value + other.value) % self.n)

    def _inverse(self) -> CyclicValue:
        return CyclicValue(self.n, (-self.value) % self.n)

    def _distance(self, other: CyclicValue) -> Fraction:
        return Fraction(0 if self.value == other.value else 1)

    def _norm(self) -> Fraction:
        return Fraction(0 if self.value == 0 else 1)

    def _power(self, z: int) -> CyclicValue:
        return CyclicValue(self.n, (self.value * z) % self.n)

    def to_json(self) -> int:
        return self.value


# ============================================================================
# Finitely supported permutations of ℕ
# ============================================================================


@dataclass(frozen=True)
class FinSupPermutation:
    """A permutation of ℕ moving finitely many points.

    ``moves`` lists the moved points as sorted ``(x, σ(x))`` pairs; every
    other point is fixed. The group law is composition with the right
    factor acting first, which makes the pointwise metric left-invariant.
    """

    moves: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> FinSupPermutation:
        pairs = {int(x): int(y) for x, y in mapping.items() if x != y}
        if any(x < 0 or y < 0 for x, y in pairs.items()):
            raise ArgumentError("permutation points must be natural numbers")
        if set(pairs) != set(pairs.values()) or len(set(pairs.values())) != len(pairs):
            raise ArgumentError("mapping is not a bijection on its support")
        return cls(tuple(sorted(pairs.items())))

    @cached_property
    def _map(self) -> dict[int, int]:
        return dict(self.moves)

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def owner(self) -> GroupDescriptor:
        return sym_fin_group()

    def _op(self, other: FinSupPermutation) -> FinSupPermutation:
        points = self._map.keys() | other._map.keys()
        composed = ((x, self(other(x))) for x in points)
        return FinSupPermutation(tuple(sorted((x, y) for x, y in composed if x != y)))

    def _inverse(self) -> FinSupPermutation:
        return FinSupPermutation(tuple(sorted((y, x) for x, y in self.moves)))

    def _distance(self, other: FinSupPermutation) -> Fraction:
        points = self._map.keys() | other._map.keys()
        differing = [x for x in points if self(x) != other(x)]
        if not differing:
            return Fraction(0)
        return Fraction(1, 2 ** min(differing))

    def _norm(self) -> Fraction:
        if not self.moves:
            return Fraction(0)
        return Fraction(1, 2 ** self.moves[0][0])

    def _power(self, z: int) -> FinSupPermutation:
        base = self if z >= 0 else self._inverse()
        z = abs(z)
        result = FinSupPermutation()
        while z:
            if z & 1:
                result = result._op(base)
            base = base._op(base)
            z >>= 1
        return result

    def to_json(self) -> list[list[int]]:
        return [[x, y] for x, y in self.moves]


def transposition(a: int, b: int) -> FinSupPermutation:
    if a == b:
        raise ArgumentError("a transposition needs two distinct points")
    return FinSupPermutation.from_mapping({a: b, b: a})


def cycle(*points: int) -> FinSupPermutation:
    """The cycle ``points[0] → points[1] → … → points[0]``."""
    if len(set(points)) != len(points):
        raise ArgumentError("cycle points must be distinct")
    if len(points) < 2:
        return FinSupPermutation()
    return FinSupPermutation.from_mapping(
        {x: points[(i + 1) % len(points)] for i, x in enumerate(points)}
    )


# ============================================================================
# Truncated products
# ============================================================================


def _factor_modulus(factor: GroupDescriptor) -> int:
    if factor.kind is GroupKind.CYCLIC:
        return factor.n  # type: ignore[return-value]
    return _modulus(factor.p, factor.depth)  # type: ignore[arg-type]


def _scalar_zero(factor: GroupDescriptor) -> Any:
    return Fraction(0) if factor.kind is GroupKind.CIRCLE else 0


def _scalar_canonical(factor: GroupDescriptor, x: Any) -> Any:
    if factor.kind is GroupKind.CIRCLE:
        return Fraction(x) % 1
    return int(x) % _factor_modulus(factor)


def _scalar_add(factor: GroupDescriptor, a: Any, b: Any) -> Any:
    if factor.kind is GroupKind.CIRCLE:
        return (a + b) % 1
    return (a + b) % _factor_modulus(factor)


def _scalar_mul(factor: GroupDescriptor, a: Any, z: int) -> Any:
    if factor.kind is GroupKind.CIRCLE:
        return (a * z) % 1
    return (a * z) % _factor_modulus(factor)


def _scalar_distance(factor: GroupDescriptor, a: Any, b: Any) -> Fraction:
    if a == b:
        return Fraction(0)
    if factor.kind is GroupKind.CYCLIC:
        return Fraction(1)
    if factor.kind is GroupKind.CIRCLE:
        return _arc(a, b)
    return _pow_distance(int_valuation(a - b, factor.p), factor.p)  # type: ignore[arg-type]


def _weighted_sup(factors: Sequence[GroupDescriptor], xs: Sequence[Any], ys: Sequence[Any]) -> Fraction:
    # Coordinate c contributes at most 2^-c, which bounds the scan.
    best = Fraction(0)
    for c, (factor, a, b) in enumerate(zip(factors, xs, ys)):
        weight = Fraction(1, 2**c)
        if weight <= best:
            break
        if a != b:
            best = max(best, weight * _scalar_distance(factor, a, b))
    return best


@dataclass(frozen=True)
class TruncatedProductValue:
    """An element of a countable product, truncated to its first ``depth`` coordinates.

    Coordinate ``c`` is a raw scalar in ``owner.factors[c]``: a residue for
    cyclic and p-adic factors, a Fraction in [0, 1) for circle factors.
    """

    owner: GroupDescriptor
    coords: tuple[Any, ...]

    def __post_init__(self) -> None:
        if self.owner.kind is not GroupKind.PRODUCT:
            raise ArgumentError("TruncatedProductValue needs a product descriptor")
        if len(self.coords) != len(self.owner.factors):
            raise ArgumentError(
                f"expected {len(self.owner.factors)} coordinates, got {len(self.coords)}"
            )

    @property
    def factors(self) -> tuple[GroupDescriptor, ...]:
        return self.owner.factors

    @property
    def depth(self) -> int:
        return len(self.coords)

    def _op(self, other: TruncatedProductValue) -> TruncatedProductValue:
        return TruncatedProductValue(
            self.owner,
            tuple(_scalar_add(f, a, b) for f, a, b in zip(self.factors, self.coords, other.coords)),
        )

    def _inverse(self) -> TruncatedProductValue:
        return self._power(-1)

    def _distance(self, other: TruncatedProductValue) -> Fraction:
        return _weighted_sup(self.factors, self.coords, other.coords)

    def _norm(self) -> Fraction:
        return _weighted_sup(self.factors, self.coords, [_scalar_zero(f) for f in self.factors])

    def _power(self, z: int) -> TruncatedProductValue:
        return TruncatedProductValue(
            self.owner, tuple(_scalar_mul(f, a, z) for f, a in zip(self.factors, self.coords))
        )

    def to_json(self) -> list[Any]:
        return [format_fraction(x) if isinstance(x, Fraction) else x for x in self.coords]


def product_value(owner: GroupDescriptor, coords: Iterable[Any]) -> TruncatedProductValue:
    """Build a product value, reducing each coordinate into its factor."""
    coords = tuple(coords)
    if len(coords) != len(owner.factors):
        raise ArgumentError(f"expected {len(owner.factors)} coordinates, got {len(coords)}")
    return TruncatedProductValue(
        owner, tuple(_scalar_canonical(f, x) for f, x in zip(owner.factors, coords))
    )


# ============================================================================
# Bounded subgroup of ℤ^ℕ
# ============================================================================


@dataclass(frozen=True)
class BoundedIntSeqValue:
    """An element of {g ∈ ℤ^ℕ : ∃k |g| ≤ k}, truncated to ``owner.depth`` entries.

    ``bound_witness`` certifies membership; it defaults to the sup-norm and is
    excluded from equality.
    """

    owner: GroupDescriptor
    entries: tuple[int, ...]
    bound_witness: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if self.owner.kind is not GroupKind.BOUNDED_INT_SEQ:
            raise ArgumentError("BoundedIntSeqValue needs a bounded-int-seq descriptor")
        if len(self.entries) != self.owner.depth:
            raise ArgumentError(f"expected {self.owner.depth} entries, got {len(self.entries)}")
        sup = self.sup_norm
        if self.bound_witness < 0:
            object.__setattr__(self, "bound_witness", sup)
        elif self.bound_witness < sup:
            raise DomainError(f"bound witness {self.bound_witness} below sup-norm {sup}")

    @property
    def sup_norm(self) -> int:
        return max((abs(x) for x in self.entries), default=0)

    def _op(self, other: BoundedIntSeqValue) -> BoundedIntSeqValue:
        return BoundedIntSeqValue(
            self.owner,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
            self.bound_witness + other.bound_witness,
        )

    def _inverse(self) -> BoundedIntSeqValue:
        return BoundedIntSeqValue(self.owner, tuple(-a for a in self.entries), self.bound_witness)

    def _distance(self, other: BoundedIntSeqValue) -> Fraction:
        for c, (a, b) in enumerate(zip(self.entries, other.entries)):
            if a != b:
                return Fraction(1, 2**c)
        return Fraction(0)

    def _norm(self) -> Fraction:
        for c, a in enumerate(self.entries):
            if a:
                return Fraction(1, 2**c)
        return Fraction(0)

    def _power(self, z: int) -> BoundedIntSeqValue:
        return BoundedIntSeqValue(
            self.owner, tuple(a * z for a in self.entries), self.bound_witness * abs(z)
        )

    def to_json(self) -> dict[str, Any]:
        return {"entries": list(self.entries), "bound": self.bound_witness}


# ============================================================================
# Generic helpers
# ============================================================================


def support(g: TruncatedProductValue | BoundedIntSeqValue) -> frozenset[int]:
    """Indices of the nonzero coordinates within the stored depth."""
    if isinstance(g, BoundedIntSeqValue):
        return frozenset(c for c, a in enumerate(g.entries) if a)
    return frozenset(c for c, x in enumerate(g.coords) if x != 0)


def identity_of(G: GroupDescriptor) -> GroupValue:
    kind = G.kind
    if kind is GroupKind.PADIC:
        return PadicInt(G.p, G.depth, 0)  # type: ignore[arg-type]
    if kind is GroupKind.CIRCLE:
        return CirclePoint(Fraction(0))
    if kind is GroupKind.INT_PADIC:
        return IntTauP(G.p, 0)  # type: ignore[arg-type]
    if kind is GroupKind.CYCLIC:
        return CyclicValue(G.n, 0)  # type: ignore[arg-type]
    if kind is GroupKind.SYM_FIN:
        return FinSupPermutation()
    if kind is GroupKind.PRODUCT:
        return TruncatedProductValue(G, tuple(_scalar_zero(f) for f in G.factors))
    return BoundedIntSeqValue(G, (0,) * G.depth)  # type: ignore[operator]


def basis_vector(G: GroupDescriptor, c: int, value: Any = 1) -> GroupValue:
    """The element equal to ``value`` at coordinate ``c`` and zero elsewhere.

    Past the stored depth the vector is truncated to the identity.
    """
    if G.kind is GroupKind.BOUNDED_INT_SEQ:
        entries = [0] * G.depth  # type: ignore[operator]
        if c < G.depth:  # type: ignore[operator]
            entries[c] = int(value)
        return BoundedIntSeqValue(G, tuple(entries))
    if G.kind is GroupKind.PRODUCT:
        coords = [_scalar_zero(f) for f in G.factors]
        if c < len(coords):
            coords[c] = _scalar_canonical(G.factors[c], value)
        return TruncatedProductValue(G, tuple(coords))
    raise UnsupportedError(f"basis vectors need a product-like group, got {G.kind.value}")


def _random_scalar(factor: GroupDescriptor, rng: random.Random) -> Any:
    if factor.kind is GroupKind.CIRCLE:
        den = rng.randint(1, 720)
        return Fraction(rng.randrange(den), den)
    return rng.randrange(_factor_modulus(factor))


def random_element(G: GroupDescriptor, rng: random.Random) -> GroupValue:
    """A seeded random element, used by property checks and samplers."""
    kind = G.kind
    if kind is GroupKind.PADIC:
        return PadicInt(G.p, G.depth, rng.randrange(_modulus(G.p, G.depth)))  # type: ignore[arg-type]
    if kind is GroupKind.CIRCLE:
        return CirclePoint(_random_scalar(G, rng))
    if kind is GroupKind.INT_PADIC:
        return IntTauP(G.p, rng.randint(-(10**6), 10**6))  # type: ignore[arg-type]
    if kind is GroupKind.CYCLIC:
        return CyclicValue(G.n, rng.randrange(G.n))  # type: ignore[arg-type]
    if kind is GroupKind.SYM_FIN:
        points = rng.sample(range(12), rng.randint(0, 6))
        images = points[:]
        rng.shuffle(images)
        return FinSupPermutation.from_mapping(dict(zip(points, images)))
    if kind is GroupKind.PRODUCT:
        return TruncatedProductValue(G, tuple(_random_scalar(f, rng) for f in G.factors))
    return BoundedIntSeqValue(G, tuple(rng.randint(-5, 5) for _ in range(G.depth)))  # type: ignore[arg-type]


def value_from_json(G: GroupDescriptor, data: Any) -> GroupValue:
    """Parse an element in the JSON form produced by ``to_json``.

    Raises:
        ArgumentError: If ``data`` does not describe an element of ``G``.
    """
    kind = G.kind
    try:
        if kind is GroupKind.PADIC:
            if isinstance(data, list):
                if len(data) != G.depth:
                    raise ArgumentError(f"expected {G.depth} digits")
                return PadicInt.from_digits(data, G.p)  # type: ignore[arg-type]
            return PadicInt.from_int(int(data), G.p, G.depth)  # type: ignore[arg-type]
        if kind is GroupKind.CIRCLE:
            return circle_point(Fraction(data))
        if kind is GroupKind.INT_PADIC:
            return IntTauP(G.p, int(data))  # type: ignore[arg-type]
        if kind is GroupKind.CYCLIC:
            return CyclicValue(G.n, int(data) % G.n)  # type: ignore[arg-type,operator]
        if kind is GroupKind.SYM_FIN:
            return FinSupPermutation.from_mapping({int(x): int(y) for x, y in data})
        if kind is GroupKind.PRODUCT:
            coords = [Fraction(x) if isinstance(x, str) else x for x in data]
            return product_value(G, coords)
        if isinstance(data, dict):
            data = data["entries"]
        return BoundedIntSeqValue(G, tuple(int(x) for x in data))
    except (TypeError, ValueError, KeyError, ZeroDivisionError) as exc:
        if isinstance(exc, ArgumentError):
            raise
        raise ArgumentError(f"cannot read {data!r} as an element of {G.label()}: {exc}") from exc
