"""
The K_P apparatus: set families, the elements a_n and g_z, E-sets,
support tests and the density probe.

Coordinates of ``K_P`` are pairs ``(i, j)``; coordinate ``(i, j)`` is the
cyclic group of order ``p_{i,j}``, the ``(cantor_pair(i, j) + 1)``-th odd
prime. A window of size ``s`` is the product over ``i, j < s`` laid out row
major, so coordinate ``(i, j)`` sits at index ``i·s + j``.

``S_n = {k : n ∈ f(k)}`` for the surjection ``f: ℕ → [ℕ]²`` that hits every
pair infinitely often, and ``T_n = {m : bit n of m is 1}``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Any, Mapping, Sequence

from sympy import sieve

from .bounds import IntWeightSeq
from .concrete import TruncatedProductValue, support
from .exceptions import ArgumentError, DomainError
from .groups import GroupDescriptor, cyclic_group, padic_group, product_group
from .numtheory import crt_multiple
from .verdict import Status, Verdict

logger = logging.getLogger(__name__)

# Window rows used when searching witnesses along linked indices.
DEFAULT_SEARCH = 64


# ============================================================================
# Pairings and the surjection ℕ → [ℕ]²
# ============================================================================


def cantor_pair(x: int, y: int) -> int:
    return (x + y) * (x + y + 1) // 2 + y


def cantor_unpair(k: int) -> tuple[int, int]:
    w = (isqrt(8 * k + 1) - 1) // 2
    y = k - w * (w + 1) // 2
    return w - y, y


def pair_index(a: int, b: int) -> int:
    """Index of the two-element set ``{a, b}`` in colex order."""
    if a == b:
        raise ArgumentError(f"a pair needs two distinct elements, got {a} twice")
    a, b = min(a, b), max(a, b)
    return b * (b - 1) // 2 + a


def pair_from_index(k: int) -> tuple[int, int]:
    b = (1 + isqrt(1 + 8 * k)) // 2
    return k - b * (b - 1) // 2, b


def surjection(k: int) -> tuple[int, int]:
    """``f(k)`` as an ordered pair ``(a, b)`` with ``a < b``."""
    return pair_from_index(cantor_unpair(k)[0])


def linked_witnesses(n: int, m: int, count: int) -> list[int]:
    """The first ``count`` indices ``k`` with ``f(k) = {n, m}``, all in ``S_n ∩ S_m``."""
    idx = pair_index(n, m)
    return [cantor_pair(idx, rep) for rep in range(count)]


def family_S(count: int, window: int) -> list[frozenset[int]]:
    """``S_n ∩ [0, window)`` for ``n < count``."""
    members: list[set[int]] = [set() for _ in range(count)]
    for k in range(window):
        for n in surjection(k):
            if n < count:
                members[n].add(k)
    return [frozenset(s) for s in members]


def family_T(count: int, window: int) -> list[frozenset[int]]:
    """``T_n ∩ [0, window)`` for ``n < count``."""
    return [frozenset(m for m in range(window) if m >> n & 1) for n in range(count)]


def boolean_combination(
    sets: Sequence[frozenset[int]], signs: Sequence[bool], window: int
) -> frozenset[int]:
    """``⋂ (T_i if signs[i] else complement of T_i)`` within ``[0, window)``."""
    out = set(range(window))
    for s, keep in zip(sets, signs):
        out = out & s if keep else out - s
    return frozenset(out)


# ============================================================================
# K_P coordinates
# ============================================================================


@lru_cache(maxsize=None)
def kp_prime(i: int, j: int) -> int:
    # sieve is 1-indexed: sieve[1] == 2, sieve[2] == 3
    return int(sieve[cantor_pair(i, j) + 2])


def a_n_at(n: int, i: int, j: int) -> int:
    """Coordinate ``(i, j)`` of ``a_n``."""
    if n not in surjection(i):
        return 0
    return 1 if j >> n & 1 else 2


def g_z_at(z: IntWeightSeq, i: int, j: int, terms: int) -> int:
    """Coordinate ``(i, j)`` of ``Σ_{n<terms} z(n)·a_n``.

    Only the two indices of ``f(i)`` contribute, so this is exact for any
    ``terms``.
    """
    p = kp_prime(i, j)
    return sum(z(n) * a_n_at(n, i, j) for n in surjection(i) if n < terms) % p


@lru_cache(maxsize=8)
def kp_window(size: int) -> GroupDescriptor:
    """The product of the ``size × size`` coordinate window of ``K_P``."""
    if size < 1:
        raise ArgumentError(f"window size must be >= 1, got {size}")
    return product_group(
        tuple(cyclic_group(kp_prime(i, j)) for i in range(size) for j in range(size))
    )


def build_a_n(n: int, depth: int) -> TruncatedProductValue:
    """``a_n`` on the ``depth × depth`` window."""
    G = kp_window(depth)
    coords = tuple(a_n_at(n, i, j) for i in range(depth) for j in range(depth))
    return TruncatedProductValue(G, coords)


def g_z(z: IntWeightSeq, depth: int, terms: int) -> TruncatedProductValue:
    """``Σ_{n<terms} z(n)·a_n`` on the ``depth × depth`` window."""
    G = kp_window(depth)
    coords = tuple(g_z_at(z, i, j, terms) for i in range(depth) for j in range(depth))
    return TruncatedProductValue(G, coords)


# ============================================================================
# E-sets and support tests
# ============================================================================


_SIGN_ORDER = ((1, 1), (1, 2), (2, 1), (2, 2))


def choose_signs(k: int, l: int, m: int, n: int) -> tuple[int, int]:
    """Least ``(x, y) ∈ {1, 2}²`` with ``kx + ly ≠ 0`` and ``mx + ny ≠ 0``.

    Raises:
        DomainError: If ``k = 0`` or ``n = 0``.
    """
    if k == 0 or n == 0:
        raise DomainError(f"need k != 0 and n != 0, got k={k}, n={n}")
    for x, y in _SIGN_ORDER:
        if k * x + l * y != 0 and m * x + n * y != 0:
            return x, y
    raise AssertionError("unreachable: two linear conditions exclude at most two ratios")


def _e_preconditions(k: int, n: int, q: int, r: int) -> None:
    if q == r:
        raise DomainError(f"q and r must differ, got {q}")
    if k == 0 or n == 0:
        raise DomainError(f"need k != 0 and n != 0, got k={k}, n={n}")


def _in_e(k: int, l: int, m: int, n: int, q: int, r: int, i: int, j: int) -> bool:
    p = kp_prime(i, j)
    x, y = a_n_at(q, i, j), a_n_at(r, i, j)
    return x != 0 and y != 0 and (k * x + l * y) % p != 0 and (m * x + n * y) % p != 0


@dataclass(frozen=True)
class ESet:
    coordinates: list[tuple[int, int]]
    rows: list[int]
    rows_outside: int

    @property
    def status(self) -> Status:
        """HOLDS when the window meets the set, INCONCLUSIVE otherwise."""
        return Status.HOLDS if self.coordinates else Status.INCONCLUSIVE

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "coordinates": [list(c) for c in self.coordinates],
            "rows": self.rows,
            "rows_outside": self.rows_outside,
        }


def e_set(k: int, l: int, m: int, n: int, q: int, r: int, depth: int, rows: int = 4) -> ESet:
    """Coordinates of ``s(k a_q + l a_r) ∩ s(m a_q + n a_r) ∩ s(a_q) ∩ s(a_r)``.

    Rows are the first ``rows`` indices ``i`` with ``f(i) = {q, r}`` (the
    only rows where both ``a_q`` and ``a_r`` are nonzero) that fall in the
    ``depth × depth`` window; the others are counted in ``rows_outside``.
    An empty result is tagged INCONCLUSIVE.

    Raises:
        DomainError: If ``q = r``, ``k = 0`` or ``n = 0``.
    """
    _e_preconditions(k, n, q, r)
    linked = linked_witnesses(q, r, rows)
    inside = [i for i in linked if i < depth]
    coordinates = [
        (i, j) for i in inside for j in range(depth) if _in_e(k, l, m, n, q, r, i, j)
    ]
    if not coordinates:
        logger.debug("E-set of %s empty in the %d-window", (k, l, m, n, q, r), depth)
    return ESet(coordinates, inside, len(linked) - len(inside))


def e_set_witness(
    k: int, l: int, m: int, n: int, q: int, r: int, search: int = DEFAULT_SEARCH
) -> tuple[int, int] | None:
    """A coordinate of the E-set found from the sign choice, or ``None``.

    The column ``j`` realises ``(a_q(i, j), a_r(i, j)) = choose_signs(...)``
    through its bits ``q`` and ``r``.
    """
    _e_preconditions(k, n, q, r)
    x, y = choose_signs(k, l, m, n)
    base = (1 << q if x == 1 else 0) | (1 << r if y == 1 else 0)
    stride = 1 << (max(q, r) + 1)
    for t in range(search):
        j = base + t * stride
        for i in linked_witnesses(q, r, search):
            if _in_e(k, l, m, n, q, r, i, j):
                return i, j
    return None


def _finite_support(z: IntWeightSeq, terms: int) -> list[int]:
    if not z.finitely_supported:
        raise DomainError("weights must be finitely supported")
    return [n for n in z.support() if n < terms]


def support_overlap_check(z: IntWeightSeq, zp: IntWeightSeq, depth: int, terms: int) -> Verdict:
    """Find a coordinate where both ``g_z`` and ``g_{z'}`` are nonzero.

    A shared index ``q`` of the supports is paired with an unused ``r``;
    disjoint supports use ``q`` from one and ``r`` from the other through
    the E-set witness. A located coordinate that fails verification is a
    FAILS verdict.

    Raises:
        DomainError: If either weight vanishes on ``[0, terms)``.
    """
    sz, szp = _finite_support(z, terms), _finite_support(zp, terms)
    if not sz or not szp:
        raise DomainError("g_z and g_z' must both be nonzero")
    exact = Fraction(0)
    shared = sorted(set(sz) & set(szp))
    coordinate: tuple[int, int] | None = None
    if shared:
        case = "shared-index"
        q = shared[0]
        r = max(sz + szp) + 1
        for i in linked_witnesses(q, r, DEFAULT_SEARCH):
            for j in range(max(depth, 1)):
                if g_z_at(z, i, j, terms) and g_z_at(zp, i, j, terms):
                    coordinate = (i, j)
                    break
            if coordinate:
                break
    else:
        case = "disjoint-supports"
        q, r = sz[0], szp[0]
        coordinate = e_set_witness(z(q), 0, 0, zp(r), q, r)

    if coordinate is None:
        return Verdict(
            Status.INCONCLUSIVE, terms, exact, {"case": case}, note="no coordinate within the search"
        )
    i, j = coordinate
    values = (g_z_at(z, i, j, terms), g_z_at(zp, i, j, terms))
    witness: dict[str, Any] = {
        "case": case,
        "coordinate": [i, j],
        "prime": kp_prime(i, j),
        "values": list(values),
    }
    if not all(values):
        logger.error("overlap witness (%d, %d) failed verification", i, j)
        return Verdict(Status.FAILS, terms, exact, witness, note="witness failed verification")
    return Verdict(Status.HOLDS, terms, exact, witness)


def split_test(g: TruncatedProductValue, gp: TruncatedProductValue, depth: int) -> Verdict:
    """HOLDS when the supports are disjoint on the first ``depth`` coordinates.

    Disjoint supports make ``⟨g⟩ × ⟨g'⟩`` a product inside the group; an
    overlap rules that out and is reported as FAILS with the coordinate.

    Raises:
        DomainError: If ``g`` or ``g'`` is zero.
    """
    s, sp = support(g), support(gp)
    if not s or not sp:
        raise DomainError("split test needs nonzero elements")
    overlap = sorted(c for c in s & sp if c < depth)
    if overlap:
        return Verdict(
            Status.FAILS,
            depth,
            Fraction(0),
            {"coordinate": overlap[0], "overlap_size": len(overlap), "product_embeds": False},
        )
    return Verdict(Status.HOLDS, depth, Fraction(0), {"product_embeds": True})


# ============================================================================
# Density of H_P
# ============================================================================


@dataclass(frozen=True)
class DensityResult:
    weights: dict[int, int]
    targets: dict[tuple[int, int], int]
    matched: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "weights": {str(n): z for n, z in sorted(self.weights.items())},
            "targets": [[i, j, t] for (i, j), t in sorted(self.targets.items())],
            "matched": self.matched,
        }


def density_probe(targets: Mapping[tuple[int, int], int]) -> DensityResult:
    """Integer weights ``z_n`` with ``Σ z_n a_n`` equal to ``targets`` on its coordinates.

    Each coordinate ``(i, j)`` is owned by ``min f(i)``, which carries the
    target there; the other index of ``f(i)`` must vanish modulo
    ``p_{i,j}``. The congruences for one ``a_n`` are solved together with
    :func:`crt_multiple` on the sub-window of its coordinates, which works
    because the primes of distinct coordinates are distinct.
    """
    targets = {c: t % kp_prime(*c) for c, t in targets.items()}
    involved: dict[int, list[tuple[int, int]]] = {}
    for i, j in targets:
        for n in surjection(i):
            involved.setdefault(n, []).append((i, j))

    weights: dict[int, int] = {}
    for n, coords in sorted(involved.items()):
        coords = sorted(coords)
        G = product_group(tuple(cyclic_group(kp_prime(i, j)) for i, j in coords))
        g = TruncatedProductValue(G, tuple(a_n_at(n, i, j) for i, j in coords))
        wanted = {
            c: (targets[(i, j)] if n == min(surjection(i)) else 0)
            for c, (i, j) in enumerate(coords)
        }
        weights[n] = crt_multiple(g, range(len(coords)), wanted)  # type: ignore[arg-type]

    matched = all(
        sum(weights.get(n, 0) * a_n_at(n, i, j) for n in surjection(i)) % kp_prime(i, j) == t
        for (i, j), t in targets.items()
    )
    return DensityResult(weights, dict(targets), matched)


# ============================================================================
# Monothetic products
# ============================================================================


def monothetic_generators(count: int, p: int, digits: int = 8) -> list[TruncatedProductValue]:
    """``e_n`` (``1`` at coordinate ``n``) in the product of ``count`` copies of ℤ_p."""
    G = product_group(tuple(padic_group(p, digits) for _ in range(count)))
    out = []
    for n in range(count):
        coords = tuple(1 if c == n else 0 for c in range(count))
        out.append(TruncatedProductValue(G, coords))
    return out

