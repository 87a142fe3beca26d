"""
Nested identity bases, reshuffling bounds, the f-Cauchy productive set
builder and the Cantor scheme.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

from .analysis import check_f_productive
from .bounds import OMEGA, BoundFunction, f_one
from .concrete import (
    BoundedIntSeqValue,
    CirclePoint,
    FinSupPermutation,
    IntTauP,
    PadicInt,
    TruncatedProductValue,
    basis_vector,
    transposition,
)
from .exceptions import ArgumentError, DepthExhaustedError, DomainError, UnsupportedError
from .groups import (
    GroupDescriptor,
    GroupKind,
    GroupSequence,
    GroupValue,
    distance,
    format_fraction,
    identity,
    norm,
    op,
    power,
    product_of,
)
from .verdict import AnalysisConfig, Status, Verdict

logger = logging.getLogger(__name__)


class BasisKind(str, Enum):
    SUBGROUP_CHAIN = "subgroup-chain"
    METRIC_BALL = "metric-ball"


@dataclass(frozen=True)
class NestedBasis:
    """Identity neighbourhoods ``U_0 ⊇ U_1 ⊇ …`` with ``U_{j+1}^3 ⊆ U_j``.

    Subgroup chains are closed balls of an ultrametric (hence subgroups);
    metric balls are open and shrink by a factor ``ratio ≤ 1/3``.
    """

    group: GroupDescriptor
    kind: BasisKind
    base_radius: Fraction
    ratio: Fraction
    count: int

    def radius(self, j: int) -> Fraction:
        return self.base_radius * self.ratio**j

    @property
    def levels(self) -> list[dict[str, Any]]:
        return [
            {"level": j, "radius": format_fraction(self.radius(j)), "kind": self.kind.value}
            for j in range(self.count)
        ]

    def contains(self, j: int, x: GroupValue) -> bool:
        if self.kind is BasisKind.SUBGROUP_CHAIN:
            return norm(x) <= self.radius(j)
        return norm(x) < self.radius(j)

    def cube_condition(self, j: int) -> bool:
        if self.kind is BasisKind.SUBGROUP_CHAIN:
            return self.radius(j + 1) <= self.radius(j)
        return 3 * self.radius(j + 1) <= self.radius(j)

    def sample(self, j: int, rng: random.Random) -> GroupValue:
        """A seeded random element of ``U_j``."""
        return _sample_level(self.group, self.radius(j), j, self.kind, rng)


def _ball_fraction(r: Fraction, rng: random.Random, grain: int = 1000) -> Fraction:
    # uniform on a grid inside the open interval (-r, r)
    return r * Fraction(rng.randrange(-grain + 1, grain), grain)


def _sample_level(
    G: GroupDescriptor, r: Fraction, j: int, kind: BasisKind, rng: random.Random
) -> GroupValue:
    k = G.kind
    if k is GroupKind.PADIC:
        return PadicInt.from_int(rng.randrange(G.p**G.depth) * G.p**j, G.p, G.depth)  # type: ignore[operator]
    if k is GroupKind.INT_PADIC:
        return IntTauP(G.p, rng.randint(-(10**6), 10**6) * G.p**j)  # type: ignore[arg-type,operator]
    if k is GroupKind.SYM_FIN:
        points = list(range(j, j + 8))
        images = points[:]
        rng.shuffle(images)
        return FinSupPermutation.from_mapping(dict(zip(points, images)))
    if k is GroupKind.CIRCLE:
        return CirclePoint(_ball_fraction(r, rng) % 1)
    if k is GroupKind.BOUNDED_INT_SEQ:
        return BoundedIntSeqValue(
            G, tuple(0 if c < j else rng.randint(-5, 5) for c in range(G.depth))  # type: ignore[arg-type]
        )
    coords: list[Any] = []
    for c, factor in enumerate(G.factors):
        weight = Fraction(1, 2**c)
        if factor.kind is GroupKind.CIRCLE:
            coords.append(_ball_fraction(min(Fraction(1, 2), r / weight), rng) % 1)
        elif (kind is BasisKind.SUBGROUP_CHAIN and weight <= r) or weight < r:
            modulus = factor.n if factor.kind is GroupKind.CYCLIC else factor.p**factor.depth  # type: ignore[operator]
            coords.append(rng.randrange(modulus))  # type: ignore[arg-type]
        else:
            coords.append(0)
    return TruncatedProductValue(G, tuple(coords))


def make_nested_basis(G: GroupDescriptor, count: int) -> NestedBasis:
    """The canonical nested basis of ``G`` with ``count`` levels.

    Raises:
        ArgumentError: If ``count < 1``.
        UnsupportedError: For discrete groups.
    """
    if count < 1:
        raise ArgumentError(f"count must be >= 1, got {count}")
    k = G.kind
    if k in (GroupKind.PADIC, GroupKind.INT_PADIC):
        return NestedBasis(G, BasisKind.SUBGROUP_CHAIN, Fraction(1), Fraction(1, G.p), count)  # type: ignore[arg-type]
    if k in (GroupKind.SYM_FIN, GroupKind.BOUNDED_INT_SEQ) or (k is GroupKind.PRODUCT and G.ultrametric):
        return NestedBasis(G, BasisKind.SUBGROUP_CHAIN, Fraction(1), Fraction(1, 2), count)
    if k in (GroupKind.CIRCLE, GroupKind.PRODUCT):
        return NestedBasis(G, BasisKind.METRIC_BALL, Fraction(1, 4), Fraction(1, 3), count)
    raise UnsupportedError(f"{G.label()} is discrete; it has no nested basis of this kind")


def reshuffle_bound_check(
    basis: NestedBasis, phi: Sequence[int], samples: int, seed: int
) -> Verdict:
    """Sample ``x_j ∈ U_{φ(j)}`` and check ``Π x_j ∈ U_{k-1}`` with ``k = min φ``.

    Raises:
        ArgumentError: If ``φ`` is empty, repeats a value, uses level 0 or
            exceeds the basis.
    """
    phi = list(phi)
    if not phi:
        raise ArgumentError("φ must be non-empty")
    if len(set(phi)) != len(phi):
        raise ArgumentError(f"φ is not injective: {phi}")
    if min(phi) < 1 or max(phi) >= basis.count:
        raise ArgumentError(f"φ must take values in [1, {basis.count})")
    k = min(phi)
    target = basis.radius(k - 1)
    for s in range(samples):
        rng = random.Random(f"{seed}:{s}")
        xs = [basis.sample(j, rng) for j in phi]
        total = product_of(xs, basis.group)
        if not basis.contains(k - 1, total):
            return Verdict(
                Status.FAILS,
                len(phi),
                target,
                {"sample": s, "k": k, "norm": format_fraction(norm(total))},
            )
    return Verdict(Status.HOLDS, len(phi), target, {"samples": samples, "k": k})


# ============================================================================
# f-Cauchy productive sets
# ============================================================================


def _chain_candidate(G: GroupDescriptor, m: int) -> GroupValue:
    k = G.kind
    if k is GroupKind.PADIC:
        if m >= G.depth:  # type: ignore[operator]
            raise DepthExhaustedError(f"p^{m} vanishes at depth {G.depth}")
        return PadicInt.from_int(G.p**m, G.p, G.depth)  # type: ignore[arg-type,operator]
    if k is GroupKind.INT_PADIC:
        return IntTauP(G.p, G.p**m)  # type: ignore[arg-type,operator]
    if k is GroupKind.SYM_FIN:
        return transposition(m, m + 1)
    if m >= G.depth:  # type: ignore[operator]
        raise DepthExhaustedError(f"coordinate {m} is beyond depth {G.depth}")
    return basis_vector(G, m)


def _verification_weights(c: int, span: int) -> list[int]:
    small = range(-min(c, span), min(c, span) + 1)
    return sorted(set(small) | {c, -c})


def build_f_cauchy_set(
    G: GroupDescriptor,
    basis: NestedBasis,
    f: BoundFunction,
    n: int,
    omega_cap: int = 1000,
    verify_span: int = 64,
) -> list[GroupValue]:
    """Choose ``a_m ∈ V_m ∖ {a_0, …, a_{m-1}}`` for ``m ≤ n``.

    ``V_m = {x : x^z ∈ U_m for |z| ≤ f(m)}``. In a subgroup chain
    ``V_m = U_m`` and the canonical choice is the generator of level ``m``;
    on the circle it is ``r_m / (2·f(m))``, halved until new.

    Raises:
        DepthExhaustedError: If ``V_m`` has no new representable element, for
            instance when ``f(m) = ω`` on the circle.
    """
    if basis.group != G:
        raise ArgumentError("basis belongs to another group")
    if n >= basis.count:
        raise ArgumentError(f"basis has {basis.count} levels, need {n + 1}")
    chosen: list[GroupValue] = []
    seen: set[GroupValue] = set()
    for m in range(n + 1):
        bound = f(m)
        if basis.kind is BasisKind.SUBGROUP_CHAIN:
            a = _chain_candidate(G, m)
        elif G.kind is GroupKind.CIRCLE:
            if bound is OMEGA:
                raise DepthExhaustedError(f"no circle element has all its powers in U_{m}")
            x = basis.radius(m) / (2 * max(bound, 1))
            a = CirclePoint(x % 1)
            while a in seen:
                x /= 2
                a = CirclePoint(x % 1)
        else:
            raise UnsupportedError(f"no canonical V_n choice for {G.label()}")
        if a in seen:
            raise DepthExhaustedError(f"V_{m} has no new element at this depth")
        c = omega_cap if bound is OMEGA else bound
        for z in _verification_weights(c, verify_span):  # type: ignore[arg-type]
            if not basis.contains(m, power(a, z)):
                raise DepthExhaustedError(
                    f"power {z} of the level-{m} element leaves U_{m}",
                    details={"level": m, "z": z},
                )
        chosen.append(a)
        seen.add(a)
    logger.debug("built %d-element f-Cauchy productive set in %s", n + 1, G.label())
    return chosen


# ============================================================================
# Cantor scheme
# ============================================================================


@dataclass
class CantorNode:
    path: str
    center: GroupValue
    radius: Fraction
    injection: tuple[int, ...]
    children: list[CantorNode] = field(default_factory=list)

    @property
    def level(self) -> int:
        return len(self.path)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "path": self.path,
            "center": self.center.to_json(),
            "radius": format_fraction(self.radius),
            "injection": list(self.injection),
        }
        if self.children:
            out["children"] = [child.to_dict() for child in self.children]
        return out


@dataclass
class CantorTree:
    root: CantorNode
    depth: int
    leaves: list[CantorNode]
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "depth": self.depth,
            "checks": self.checks,
            "leaves": [leaf.center.to_json() for leaf in self.leaves],
            "tree": self.root.to_dict(),
        }


def _next_small(
    seq: GroupSequence, start: int, radius: Fraction, search_limit: int
) -> int:
    for m in range(start, start + search_limit):
        if norm(seq[m]) < radius:
            return m
    raise DepthExhaustedError(f"no term below {radius} among {search_limit} indices from {start}")


def cantor_scheme(
    seq: GroupSequence,
    depth: int,
    probe_cfg: AnalysisConfig | None = None,
    search_limit: int = 10000,
) -> CantorTree:
    """Build the binary tree of balls whose leaves approximate a Cantor set.

    Each node ``f`` carries an increasing injection ``μ_f`` and the center
    ``b_f = Π a_{μ_f(i)}``. A child appends the next index ``m`` past
    ``max μ_f`` with ``|a_m| < r/2``; siblings get radius
    ``min(r/4, s/4, 2^-(n+2))`` where ``s`` separates their centers.

    Raises:
        DomainError: If the sequence fails the f₁★ probe.
        DepthExhaustedError: If two children cannot be found or separated.
    """
    if depth < 0:
        raise ArgumentError(f"depth must be >= 0, got {depth}")
    G = seq.owner
    cfg = probe_cfg or AnalysisConfig(Fraction(1, 2**12), 32, exhaustive_threshold=16)
    probe = check_f_productive(seq, f_one(), cfg, star=True)
    if probe.status is not Status.HOLDS:
        raise DomainError(
            f"sequence is not f_1-star productive at horizon {cfg.horizon}",
            details=probe.verdict.to_dict(),
        )

    checks = {
        "siblings_disjoint": True,
        "children_nested": True,
        "diameters_bounded": True,
        "injections_extend": True,
        "centers_are_products": True,
        "leaves_distinct": True,
    }
    root = CantorNode("", identity(G), Fraction(2), ())
    level = [root]
    for n in range(depth):
        next_level: list[CantorNode] = []
        for node in level:
            start = node.injection[-1] + 1 if node.injection else 0
            m0 = _next_small(seq, start, node.radius / 2, search_limit)
            c0 = op(node.center, seq[m0])
            m1 = _next_small(seq, m0 + 1, node.radius / 2, search_limit)
            c1 = op(node.center, seq[m1])
            while c1 == c0:
                m1 = _next_small(seq, m1 + 1, node.radius / 2, search_limit)
                c1 = op(node.center, seq[m1])
            s = distance(c0, c1)
            rho = min(node.radius / 4, s / 4, Fraction(1, 2 ** (n + 2)))
            for bit, (m, c) in enumerate(((m0, c0), (m1, c1))):
                child = CantorNode(node.path + str(bit), c, rho, node.injection + (m,))
                node.children.append(child)
                next_level.append(child)
                if distance(c, node.center) + rho >= node.radius:
                    checks["children_nested"] = False
                if 2 * rho > Fraction(1, 2 ** (n + 1)):
                    checks["diameters_bounded"] = False
                if child.injection[: n] != node.injection or m <= max(node.injection, default=-1):
                    checks["injections_extend"] = False
                if product_of((seq[i] for i in child.injection), G) != c:
                    checks["centers_are_products"] = False
            if s < 2 * rho:
                checks["siblings_disjoint"] = False
        level = next_level
    if len(set(leaf.center for leaf in level)) != len(level):
        checks["leaves_distinct"] = False
    logger.debug("cantor scheme of depth %d: %s", depth, checks)
    return CantorTree(root, depth, level, checks)

