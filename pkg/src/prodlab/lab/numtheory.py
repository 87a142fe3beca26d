"""
p-adic valuations, the approximation solver and CRT multiples in products.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from sympy import isprime, mod_inverse
from sympy.ntheory.modular import crt

from .concrete import PadicInt, TruncatedProductValue, int_valuation, support
from .exceptions import DegenerateInputError, DomainError, UnsupportedError
from .groups import GroupKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValuationResult:
    """``v_p(x)``; ``value is None`` stands for ∞ (zero at depth)."""

    value: int | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def at_least(self, k: int) -> bool:
        return self.value is None or self.value >= k

    def to_json(self) -> int | str:
        return "inf" if self.value is None else self.value


def valuation(x: PadicInt) -> ValuationResult:
    """Index of the first nonzero digit of ``x``.

    Example:
        >>> valuation(PadicInt.from_digits([0, 0, 2, 1], 3)).value
        2
    """
    return ValuationResult(int_valuation(x.residue, x.p))


def padic_approx_solve(eta: PadicInt, alpha: PadicInt, k: int) -> int:
    """Least ``z ≥ 0`` with ``v_p(η - zα) ≥ k``.

    With ``t = v_p(α)`` the solution is unique modulo ``p^(k-t)`` and equals
    ``(η/p^t)·(α/p^t)^(-1) mod p^(k-t)``.

    Raises:
        DegenerateInputError: If ``α = 0`` at depth.
        DomainError: If ``v_p(η) < v_p(α)``, ``k ≤ v_p(α)`` or ``k > depth``,
            or if ``η`` and ``α`` differ in ``p`` or depth.
    """
    if eta.p != alpha.p or eta.depth != alpha.depth:
        raise DomainError("η and α must share p and depth")
    p = eta.p
    t = valuation(alpha).value
    if t is None:
        raise DegenerateInputError("α is zero at depth")
    if not valuation(eta).at_least(t):
        raise DomainError(f"v_p(η) = {valuation(eta).value} is below v_p(α) = {t}")
    if not t < k <= eta.depth:
        raise DomainError(f"need v_p(α) < k <= depth, got k={k}, v_p(α)={t}, depth={eta.depth}")
    modulus = p ** (k - t)
    unit = (alpha.residue // p**t) % modulus
    z = ((eta.residue // p**t) * mod_inverse(unit, modulus)) % modulus
    return int(z)


def iterated_approx(eta: PadicInt, alphas: Sequence[PadicInt]) -> list[int]:
    """Coefficients ``z_i`` with ``v_p(η - Σ_{i≤k} z_i α_i) ≥ v_p(α_{k+1})``.

    The last step drives the remainder to zero at depth. Each ``z_i`` is the
    least admissible one.

    Raises:
        DomainError: If the valuations of ``alphas`` do not strictly increase,
            or if ``v_p(η) < v_p(α_0)``.

    Example:
        >>> eta = PadicInt.from_int(13, 2, 4)
        >>> iterated_approx(eta, [PadicInt.from_int(2**i, 2, 4) for i in range(4)])
        [1, 0, 1, 1]
    """
    if not alphas:
        return []
    vals = [valuation(a).value for a in alphas]
    if any(v is None for v in vals):
        raise DegenerateInputError("every α_i must be nonzero at depth")
    if any(b <= a for a, b in zip(vals, vals[1:])):  # type: ignore[operator]
        raise DomainError(f"valuations must strictly increase, got {vals}")
    depth = eta.depth
    targets = [*vals[1:], depth]
    remainder = eta
    out: list[int] = []
    for alpha, target in zip(alphas, targets):
        if valuation(remainder).at_least(target):
            out.append(0)
            continue
        z = padic_approx_solve(remainder, alpha, target)  # type: ignore[arg-type]
        remainder = remainder - alpha * z
        out.append(z)
    logger.debug("iterated approximation of %d: %s", eta.residue, out)
    return out


def crt_multiple(g: TruncatedProductValue, F: Sequence[int], targets: Mapping[int, int]) -> int:
    """Least ``z ≥ 0`` with ``(z·g)(c) = targets[c]`` for every ``c`` in ``F``.

    Raises:
        DomainError: If ``F`` is not inside the support of ``g`` or a target
            is missing.
        UnsupportedError: If a factor over ``F`` is not cyclic of prime order
            or two coordinates of ``F`` share a modulus.

    Example:
        >>> G = product_group((cyclic_group(3), cyclic_group(5)))
        >>> crt_multiple(product_value(G, (1, 1)), [0, 1], {0: 2, 1: 3})
        8
    """
    F = sorted(set(F))
    if not F:
        return 0
    outside = set(F) - support(g)
    if outside:
        raise DomainError(f"coordinates {sorted(outside)} are outside the support")
    moduli: list[int] = []
    residues: list[int] = []
    for c in F:
        factor = g.factors[c]
        if factor.kind is not GroupKind.CYCLIC or not isprime(factor.n):
            raise UnsupportedError(f"coordinate {c} is not a cyclic group of prime order")
        if c not in targets:
            raise DomainError(f"no target for coordinate {c}")
        q = factor.n
        if q in moduli:
            raise UnsupportedError(f"modulus {q} repeats over the index set")
        moduli.append(q)
        residues.append((targets[c] * mod_inverse(g.coords[c], q)) % q)
    solution = crt(moduli, residues)
    if solution is None:
        raise UnsupportedError(f"no common solution modulo {moduli}")
    return int(solution[0])
