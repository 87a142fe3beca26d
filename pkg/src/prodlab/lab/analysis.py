"""
Convergence analysis of sequences, weighted sequences and reorderings.

Every check reduces to a suffix-distance profile ``D(n)``: the supremum of a
distance over pairs (or segments) with indices in ``[n, horizon]``. ``D`` is
non-increasing, and a profile is read with one rule:

- HOLDS when ``D(n) < tolerance`` for some ``n`` in the first half of the
  horizon (``n`` is reported as the settle index);
- FAILS when ``D`` is still at least the tolerance at three quarters of the
  horizon (the attaining pair is the witness);
- INCONCLUSIVE otherwise.

Quantifiers over weights ``|z| ≤ f`` and bijections are approximated by an
exhaustive prefix plus seeded randomized trials, and each report records
which were used.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import replace
from fractions import Fraction
from typing import Any, Callable, Iterator, Literal, Sequence

from sympy import mod_inverse

from .bounds import (
    OMEGA,
    BoundFunction,
    ExtNat,
    IntWeightSeq,
    decompose_weights,
    f_omega,
    f_one,
    split_weights,
)
from .concrete import BoundedIntSeqValue, CirclePoint, TruncatedProductValue, basis_vector
from .exceptions import ArgumentError, DomainError
from .groups import (
    GroupKind,
    GroupSequence,
    GroupValue,
    bounded_int_seq_group,
    distance,
    format_fraction,
    identity,
    inverse,
    norm,
    op,
    partial_products,
    power,
    two_sided_distance,
)
from .verdict import AnalysisConfig, ProductiveReport, Status, Verdict

logger = logging.getLogger(__name__)

# (sup distance, l, m) for each start index n
Profile = list[tuple[Fraction, int, int]]


# ============================================================================
# Profiles and the three-valued rule
# ============================================================================


def _pair_profile(
    points: Sequence[GroupValue],
    dist: Callable[[GroupValue, GroupValue], Fraction],
    ultrametric: bool,
) -> Profile:
    """``D(n) = sup {dist(x_k, x_l) : n ≤ k < l ≤ H}`` for ``n`` in ``[0, H)``."""
    H = len(points) - 1
    profile: Profile = [(Fraction(0), 0, 0)] * H
    best = (Fraction(-1), H - 1, H)
    for n in range(H - 1, -1, -1):
        if ultrametric:
            # consecutive pairs dominate in an ultrametric
            d = dist(points[n], points[n + 1])
            if d > best[0]:
                best = (d, n, n + 1)
        else:
            for l in range(n + 1, H + 1):
                d = dist(points[n], points[l])
                if d > best[0]:
                    best = (d, n, l)
        profile[n] = best
    return profile


def _segment_profile(seq: GroupSequence, H: int, ultrametric: bool) -> Profile:
    """``D(n) = sup {|Π_{i=l+1}^m b_i| : n ≤ l < m ≤ H}``."""
    profile: Profile = [(Fraction(0), 0, 0)] * H
    best = (Fraction(-1), H - 1, H)
    for l in range(H - 1, -1, -1):
        if ultrametric:
            d = norm(seq[l + 1])
            if d > best[0]:
                best = (d, l, l + 1)
        else:
            running = seq[l + 1]
            for m in range(l + 1, H + 1):
                if m > l + 1:
                    running = op(running, seq[m])
                d = norm(running)
                if d > best[0]:
                    best = (d, l, m)
        profile[l] = best
    return profile


def _settle_index(profile: Profile, tolerance: Fraction) -> int | None:
    for n, (d, _, _) in enumerate(profile):
        if d < tolerance:
            return n
    return None


def _read_profile(profile: Profile, cfg: AnalysisConfig, what: str) -> tuple[Verdict, int | None]:
    H, tol = cfg.horizon, cfg.tolerance
    settle = _settle_index(profile, tol)
    if settle is not None and settle <= H // 2:
        d, _, _ = profile[settle]
        witness = {
            "settle_index": settle,
            "criterion_index": settle + 1,
            "sup_distance": format_fraction(d),
        }
        return Verdict(Status.HOLDS, H, tol, witness), settle
    window = (3 * H) // 4
    d, l, m = profile[window]
    if d >= tol:
        witness = {"l": l, "m": m, "distance": format_fraction(d), "window_start": window}
        logger.debug("%s fails at horizon %d: pair (%d, %d) at distance %s", what, H, l, m, d)
        return Verdict(Status.FAILS, H, tol, witness), settle
    return (
        Verdict(
            Status.INCONCLUSIVE,
            H,
            tol,
            {"settle_index": settle},
            note=f"{what} settles only in the second half of the horizon",
        ),
        settle,
    )


def _trace(profile: Profile) -> list[dict[str, Any]]:
    return [{"index": n, "l": l, "m": m, "distance": d} for n, (d, l, m) in enumerate(profile)]


def _worst(profile: Profile, settle: int | None, status: Status) -> tuple[int, int, Fraction] | None:
    n = settle if status is Status.HOLDS and settle is not None else (3 * (len(profile))) // 4
    n = min(n, len(profile) - 1)
    d, l, m = profile[n]
    if d <= 0:
        return None
    return (l, m, d)


def _ultrametric(seq: GroupSequence) -> bool:
    return seq.owner.ultrametric


# ============================================================================
# Plain checks
# ============================================================================


def check_left_cauchy(seq: GroupSequence, cfg: AnalysisConfig, two_sided: bool = False) -> Verdict:
    """Is ``(a_n)`` left Cauchy at the horizon?

    With ``two_sided=True`` the two-sided uniformity is used instead, which
    for finitary permutations also compares inverses.
    """
    points = seq.take(cfg.horizon + 1)
    dist = two_sided_distance if two_sided else distance
    profile = _pair_profile(points, dist, _ultrametric(seq))
    verdict, _ = _read_profile(profile, cfg, "two-sided Cauchy" if two_sided else "left Cauchy")
    return verdict


def check_null_sequence(seq: GroupSequence, cfg: AnalysisConfig) -> Verdict:
    """Does ``a_n → e`` at the horizon?"""
    H = cfg.horizon
    profile: Profile = [(Fraction(0), 0, 0)] * H
    best = (Fraction(-1), H, H)
    for n in range(H, -1, -1):
        d = norm(seq[n])
        if d > best[0]:
            best = (d, n, n)
        if n < H:
            profile[n] = best
    verdict, _ = _read_profile(profile, cfg, "null sequence")
    if verdict.witness and verdict.status is Status.FAILS:
        w = verdict.witness
        witness = {"index": w["l"], "distance": w["distance"], "window_start": w["window_start"]}
        verdict = replace(verdict, witness=witness)
    return verdict


def check_cauchy_productive(seq: GroupSequence, cfg: AnalysisConfig) -> ProductiveReport:
    """Evaluate the segment criterion: all ``Π_{i=l+1}^m b_i`` with ``n ≤ l`` are small."""
    profile = _segment_profile(seq, cfg.horizon, _ultrametric(seq))
    verdict, settle = _read_profile(profile, cfg, "Cauchy productive")
    return ProductiveReport(
        verdict=verdict,
        distance_trace=_trace(profile),
        worst_segment=_worst(profile, settle, verdict.status),
    )


def _circle_limit(value: CirclePoint, tol: Fraction) -> CirclePoint:
    rounded = CirclePoint(value.value.limit_denominator(math.ceil(1 / tol)) % 1)
    return rounded if distance(rounded, value) < tol else value


def _inverse_witness(P: Sequence[GroupValue], l: int, m: int) -> dict[str, Any]:
    inv_l, inv_m = inverse(P[l]), inverse(P[m])
    points = sorted(inv_l.support | inv_m.support)  # type: ignore[attr-defined]
    x = next(x for x in points if inv_l(x) != inv_m(x))  # type: ignore[operator]
    return {"l": l, "m": m, "point": x, "image": P[l](inv_m(x))}  # type: ignore[operator]


def check_productive(seq: GroupSequence, cfg: AnalysisConfig) -> ProductiveReport:
    """Do the partial products converge inside the group?

    The partial products must be left Cauchy; for permutation groups they
    must also be two-sided Cauchy. Where the group is not complete the limit
    is accepted only when certified inside the group, otherwise the verdict
    is INCONCLUSIVE.
    """
    H, tol = cfg.horizon, cfg.tolerance
    G = seq.owner
    P = partial_products(seq, H)
    profile = _pair_profile(P, distance, G.ultrametric)
    verdict, settle = _read_profile(profile, cfg, "productive")
    details: dict[str, Any] = {}

    if G.kind is GroupKind.SYM_FIN and verdict.status is not Status.FAILS:
        two = _pair_profile(P, two_sided_distance, True)
        two_verdict, two_settle = _read_profile(two, cfg, "two-sided Cauchy")
        details["two_sided"] = two_verdict.status.value
        if two_verdict.status is Status.FAILS:
            _, l, m = two[(3 * H) // 4]
            witness = {**two_verdict.witness, **_inverse_witness(P, l, m)}  # type: ignore[dict-item]
            verdict = replace(two_verdict, witness=witness, note="not two-sided Cauchy")
            profile, settle = two, two_settle
        elif two_verdict.status is Status.INCONCLUSIVE:
            verdict = two_verdict
        elif two_settle is not None and settle is not None:
            settle = max(settle, two_settle)

    limit: Any = None
    if verdict.status is Status.HOLDS:
        limit = P[H]
        if isinstance(limit, CirclePoint):
            limit = _circle_limit(limit, tol)
        if not G.complete:
            certified, why = _certify_limit(G.kind, P, profile, settle)
            details["limit_certified"] = certified
            if not certified:
                verdict = Verdict(Status.INCONCLUSIVE, H, tol, {"settle_index": settle}, note=why)
                limit = None

    return ProductiveReport(
        verdict=verdict,
        distance_trace=_trace(profile),
        worst_segment=_worst(profile, settle, verdict.status),
        limit=limit,
        details=details,
    )


def _certify_limit(
    kind: GroupKind, P: Sequence[GroupValue], profile: Profile, settle: int | None
) -> tuple[bool, str]:
    if kind in (GroupKind.INT_PADIC, GroupKind.SYM_FIN):
        if settle is not None and profile[settle][0] == 0:
            return True, ""
        return False, "partial products do not stabilise; the limit may lie outside the group"
    if kind is GroupKind.BOUNDED_INT_SEQ:
        H = len(P) - 1
        early = max(p.sup_norm for p in P[: (3 * H) // 4 + 1])  # type: ignore[attr-defined]
        late = max(p.sup_norm for p in P[(3 * H) // 4 :])  # type: ignore[attr-defined]
        if late <= early:
            return True, ""
        return False, "sup-norm of the partial products still grows"
    return False, "limit cannot be certified in an incomplete group"


# ============================================================================
# Weighted sequences
# ============================================================================


def _circle_parts(a: GroupValue) -> Iterator[tuple[int, int]]:
    if isinstance(a, CirclePoint):
        if a.value:
            yield a.value.denominator, a.value.numerator
    elif isinstance(a, TruncatedProductValue):
        seen = 0
        for factor, x in zip(a.factors, a.coords):
            if factor.kind is GroupKind.CIRCLE and x:
                yield x.denominator, x.numerator
                seen += 1
                if seen == 3:
                    return


def _candidates(a: GroupValue, bound: ExtNat, cap: int, star: bool) -> list[int]:
    """Multipliers likely to make ``a^c`` large, with ``|c| ≤ bound``.

    For ``bound = ω`` the generic candidates stop at ``cap``, but the circle
    multiplier sending a term closest to ``1/2`` is always offered.
    """
    limit = cap if bound is OMEGA else bound
    if limit == 0:
        return [0]
    cs = {1, limit}
    for base in (2, 3):
        c = base
        while c <= limit:
            cs.add(c)
            c *= base
    for q, u in _circle_parts(a):
        # c·u/q closest to 1/2
        c = ((q // 2) * int(mod_inverse(u, q))) % q if q > 1 else 0
        for c2 in (c, c - q):
            if 0 < abs(c2) and (bound is OMEGA or abs(c2) <= limit):
                cs.add(c2)
    if star:
        return sorted(c for c in cs if c >= 0)
    return sorted(cs | {-c for c in cs})


class _WeightChooser:
    """Weight choices for a sequence under a bound function.

    Adversarial choices maximise ``|a^c|`` over the candidates, ties going
    to the largest ``|c|`` and then to the positive sign. They are cached by
    ``(key, bound)`` so reorderings reuse them.
    """

    def __init__(self, cap: int, star: bool):
        self.cap = cap
        self.star = star
        self._adversarial: dict[tuple[int, ExtNat], int] = {}

    def candidates(self, a: GroupValue, bound: ExtNat) -> list[int]:
        return _candidates(a, bound, self.cap, self.star)

    def choices(self, a: GroupValue, bound: ExtNat) -> list[int]:
        if bound is not OMEGA and bound <= 3:
            return list(range(0 if self.star else -bound, bound + 1))
        return self.candidates(a, bound)

    def adversarial(self, key: int, a: GroupValue, bound: ExtNat) -> int:
        cached = self._adversarial.get((key, bound))
        if cached is None:
            cached = max(
                self.candidates(a, bound),
                key=lambda c: (norm(power(a, c)), abs(c), c > 0),
            )
            self._adversarial[(key, bound)] = cached
        return cached

    def draw(self, rng: random.Random, key: int, a: GroupValue, bound: ExtNat) -> int:
        r = rng.random()
        if r < 0.5:
            return self.adversarial(key, a, bound)
        if r < 0.75:
            return rng.choice(self.candidates(a, bound))
        limit = self.cap if bound is OMEGA else bound
        return rng.randint(0 if self.star else -limit, limit)


def _f_analysis(
    seq: GroupSequence,
    f: BoundFunction,
    cfg: AnalysisConfig,
    check: Callable[[GroupSequence, AnalysisConfig], ProductiveReport],
    star: bool,
) -> ProductiveReport:
    H = cfg.horizon
    chooser = _WeightChooser(cfg.omega_cap, star)
    terms = seq.take(H + 1)
    bounds = [f(n) for n in range(H + 1)]

    # exhaustive prefix
    prefix_choices: list[list[int]] = []
    count = 1
    for n in range(H + 1):
        options = chooser.choices(terms[n], bounds[n])
        if count * len(options) > cfg.exhaustive_threshold:
            break
        prefix_choices.append(options)
        count *= len(options)
    L = len(prefix_choices)
    tail = [chooser.adversarial(n, terms[n], bounds[n]) for n in range(L, H + 1)]

    details = {
        "exhaustive_prefix": L,
        "exhaustive_count": count,
        "trials": cfg.trials,
        "omega_cap": cfg.omega_cap,
        "star": star,
    }
    first_holds: ProductiveReport | None = None
    first_inconclusive: ProductiveReport | None = None

    def weights() -> Iterator[list[int]]:
        for head in itertools.product(*prefix_choices):
            yield [*head, *tail]
        for t in range(cfg.trials):
            rng = random.Random(f"{cfg.seed}:{t}")
            yield [chooser.draw(rng, n, terms[n], bounds[n]) for n in range(H + 1)]

    for z in weights():
        report = check(seq.weighted(z), cfg)
        report = replace(report, z_used=z, details=details)
        if report.status is Status.FAILS:
            logger.debug("weighted %s fails for z prefix %s", seq.name, z[:8])
            return report
        if report.status is Status.INCONCLUSIVE and first_inconclusive is None:
            first_inconclusive = report
        if report.status is Status.HOLDS and first_holds is None:
            first_holds = report
    return first_inconclusive or first_holds  # type: ignore[return-value]


def check_f_cauchy_productive(
    seq: GroupSequence, f: BoundFunction, cfg: AnalysisConfig, star: bool = False
) -> ProductiveReport:
    """Is ``a_n^{z(n)}`` Cauchy productive for every ``|z| ≤ f``?

    ``star=True`` restricts to weights ``0 ≤ z ≤ f``.
    """
    return _f_analysis(seq, f, cfg, check_cauchy_productive, star)


def check_f_productive(
    seq: GroupSequence, f: BoundFunction, cfg: AnalysisConfig, star: bool = False
) -> ProductiveReport:
    """Is ``a_n^{z(n)}`` productive for every ``|z| ≤ f``?"""
    return _f_analysis(seq, f, cfg, check_productive, star)


# ============================================================================
# Reorderings
# ============================================================================


def sample_bijection(rng: random.Random, size: int, trial: int) -> list[int]:
    """A bijection of ``[0, size)``, extended by the identity to ℕ.

    Trials cycle through three shapes: a uniform shuffle of the first half,
    reversal of consecutive blocks of a random length in ``[2, 8]``, and
    swapping adjacent pairs.
    """
    phi = list(range(size))
    shape = trial % 3
    if shape == 0:
        head = phi[: size // 2]
        rng.shuffle(head)
        phi[: size // 2] = head
    elif shape == 1:
        block = rng.randint(2, 8)
        for start in range(0, size - block + 1, block):
            phi[start : start + block] = reversed(phi[start : start + block])
    else:
        for start in range(0, size - 1, 2):
            phi[start], phi[start + 1] = phi[start + 1], phi[start]
    return phi


Sampler = Callable[[random.Random, int, int], list[int]]


def check_f_productive_set(
    seq: GroupSequence,
    f: BoundFunction,
    cfg: AnalysisConfig,
    sampler: Sampler = sample_bijection,
    cauchy: bool = True,
    bounds: Literal["composed", "positional"] = "composed",
) -> ProductiveReport:
    """Check f-(Cauchy) productivity across sampled reorderings.

    Each trial draws a bijection ``φ`` and a weight ``z``. With
    ``bounds="composed"`` the bound at position ``i`` is ``f(φ(i))`` and
    stays with the reordered term; with ``"positional"`` it is ``f(i)``.
    """
    if bounds not in ("composed", "positional"):
        raise ArgumentError(f"bounds must be 'composed' or 'positional', got {bounds!r}")
    H = cfg.horizon
    check = check_cauchy_productive if cauchy else check_productive
    chooser = _WeightChooser(cfg.omega_cap, star=False)
    counts = {s.value: 0 for s in Status}
    details: dict[str, Any] = {"trials": cfg.trials, "bounds": bounds, "cauchy": cauchy}
    kept: ProductiveReport | None = None

    for t in range(cfg.trials):
        rng = random.Random(f"{cfg.seed}:set:{t}")
        phi = sampler(rng, H + 1, t)
        if sorted(phi) != list(range(len(phi))):
            raise ArgumentError(f"sampler returned a non-bijection in trial {t}")
        z = []
        for i in range(H + 1):
            j = phi[i]
            bound = f(j if bounds == "composed" else i)
            z.append(chooser.draw(rng, j, seq[j], bound))
        reordered = seq.reordered(phi)
        report = check(reordered.weighted(z), cfg)
        counts[report.status.value] += 1
        if report.status is Status.FAILS:
            details["status_counts"] = counts
            details["failed_trial"] = t
            return replace(report, z_used=z, permutation_used=phi, details=details)
        if kept is None or (report.status is Status.INCONCLUSIVE and kept.status is Status.HOLDS):
            kept = replace(report, z_used=z, permutation_used=phi)

    details["status_counts"] = counts
    return replace(kept, details=details)  # type: ignore[type-var]


# ============================================================================
# Abelian groups
# ============================================================================


def abelian_fstar_equiv_test(seq: GroupSequence, f: BoundFunction, cfg: AnalysisConfig) -> Verdict:
    """Check that ``z·a`` is summable whenever ``z₊·a`` and ``z₋·a`` are.

    For circle sequences the partial sums are also compared with an exact
    rational oracle.

    Raises:
        DomainError: If the group is not abelian.
    """
    G = seq.owner
    if not G.abelian:
        raise DomainError(f"{G.label()} is not abelian")
    H = cfg.horizon
    chooser = _WeightChooser(cfg.omega_cap, star=False)
    terms = seq.take(H + 1)
    consistent = 0
    oracle_matches = 0
    both_hold = 0
    for t in range(cfg.trials):
        rng = random.Random(f"{cfg.seed}:equiv:{t}")
        z = IntWeightSeq.from_list(
            [chooser.draw(rng, n, terms[n], f(n)) for n in range(H + 1)]
        )
        zp, zm = decompose_weights(z)
        whole = check_productive(seq.weighted(z.values(H + 1)), cfg)
        plus = check_productive(seq.weighted(zp.values(H + 1)), cfg)
        minus = check_productive(seq.weighted(zm.values(H + 1)), cfg)
        conj = Status.HOLDS if plus.status is minus.status is Status.HOLDS else None
        if conj is Status.HOLDS and whole.status is not Status.HOLDS:
            return Verdict(
                Status.FAILS,
                H,
                cfg.tolerance,
                {
                    "trial": t,
                    "z": z.values(H + 1),
                    "z_status": whole.status.value,
                    "plus_status": plus.status.value,
                    "minus_status": minus.status.value,
                },
                note="decomposition inconsistency",
            )
        consistent += 1
        both_hold += conj is Status.HOLDS
        if G.kind is GroupKind.CIRCLE:
            exact = sum((z(n) * terms[n].value for n in range(H + 1)), Fraction(0)) % 1  # type: ignore[attr-defined]
            last = partial_products(seq.weighted(z.values(H + 1)), H)[H]
            if last.value != exact:  # type: ignore[attr-defined]
                return Verdict(
                    Status.FAILS,
                    H,
                    cfg.tolerance,
                    {"trial": t, "oracle": format_fraction(exact), "computed": last.to_json()},
                    note="partial sum disagrees with the rational oracle",
                )
            oracle_matches += 1
    witness = {"trials": cfg.trials, "consistent": consistent, "both_hold": both_hold}
    if G.kind is GroupKind.CIRCLE:
        witness["oracle_matches"] = oracle_matches
    return Verdict(Status.HOLDS, H, cfg.tolerance, witness)


# Members of a 2-linked 3-disjoint family meet at most pairwise.
DEFAULT_SUPPORT_CUTOFF = 2


def product_support_criterion(
    family: Sequence[TruncatedProductValue], cfg: AnalysisConfig, cutoff: int | None = None
) -> Verdict:
    """Finite per-coordinate support test for families in products of finite cyclic groups.

    The family passes when no coordinate is nonzero in more than ``cutoff``
    members (default ``DEFAULT_SUPPORT_CUTOFF``). A direct ``f_ω``-Cauchy
    check runs alongside; when it is decisive the other way the verdict is
    INCONCLUSIVE.

    Raises:
        ArgumentError: If ``cutoff`` is negative.
        DomainError: If a factor is not a finite cyclic group.
    """
    cutoff = DEFAULT_SUPPORT_CUTOFF if cutoff is None else cutoff
    if cutoff < 0:
        raise ArgumentError(f"cutoff must be >= 0, got {cutoff}")
    if not family:
        return Verdict(Status.HOLDS, cfg.horizon, cfg.tolerance, {"max_hits": 0, "cutoff": cutoff})
    G = family[0].owner
    if any(factor.kind is not GroupKind.CYCLIC for factor in G.factors):
        raise DomainError("the support criterion needs finite cyclic factors")
    hits = [0] * len(G.factors)
    for g in family:
        for c, x in enumerate(g.coords):
            if x:
                hits[c] += 1
    seq = GroupSequence.from_values(G, family, "family")
    direct = check_f_cauchy_productive(
        seq, f_omega(), cfg.with_(horizon=max(2, len(family) - 1), trials=1)
    ).status
    worst = max(range(len(hits)), key=lambda c: (hits[c], -c))
    if hits[worst] > cutoff:
        status = Status.INCONCLUSIVE if direct is Status.HOLDS else Status.FAILS
        witness: dict[str, Any] = {
            "coordinate": worst,
            "hits": hits[worst],
            "members": [n for n, g in enumerate(family) if g.coords[worst]][:16],
            "cutoff": cutoff,
            "direct": direct.value,
        }
    else:
        status = Status.INCONCLUSIVE if direct is Status.FAILS else Status.HOLDS
        witness = {"max_hits": hits[worst], "cutoff": cutoff, "direct": direct.value}
    note = "direct check disagrees with the support count" if status is Status.INCONCLUSIVE else ""
    return Verdict(status, cfg.horizon, cfg.tolerance, witness, note=note)


def bounded_subgroup_probe(f: BoundFunction, cfg: AnalysisConfig) -> Verdict:
    """f-summability of the basis sequence ``e_n`` in the bounded subgroup of ℤ^ℕ.

    For bounded ``f`` with maximum ``k`` every sampled weighted sum converges
    to an element bounded by ``k``, and the all-``k`` weight splits into ``k``
    weights bounded by ``f_1`` that are summable too. For unbounded ``f`` the
    weight ``z = f`` escapes every bound ``K``: some coordinate exceeds it.
    """
    H = cfg.horizon
    G = bounded_int_seq_group(H + 1)
    seq = GroupSequence(G, lambda n: basis_vector(G, n), "e_n")
    if f.is_bounded:
        k = f.max_on(H)
        report = check_f_productive(seq, f, cfg)
        if report.status is not Status.HOLDS:
            return report.verdict
        limit: BoundedIntSeqValue = report.limit
        if limit.sup_norm > k:  # type: ignore[operator]
            return Verdict(
                Status.FAILS, H, cfg.tolerance, {"bound": k, "limit_sup": limit.sup_norm}
            )
        z = IntWeightSeq.from_list([f(n) for n in range(H + 1)])  # type: ignore[misc]
        pieces = split_weights(z, f_one(), max(1, k), H)  # type: ignore[arg-type]
        piece_limits = []
        for piece in pieces:
            piece_report = check_productive(seq.weighted(piece.values(H + 1)), cfg)
            if piece_report.status is not Status.HOLDS:
                return piece_report.verdict
            piece_limits.append(piece_report.limit)
        total = identity(G)
        for value in piece_limits:
            total = op(total, value)
        expected = partial_products(seq.weighted(z.values(H + 1)), H)[H]
        return Verdict(
            Status.HOLDS if total == expected else Status.FAILS,
            H,
            cfg.tolerance,
            {
                "bound": k,
                "limit_sup": limit.sup_norm,
                "split_pieces": len(pieces),
                "split_sum_matches": total == expected,
            },
        )

    z = [f.capped(n, cfg.omega_cap) for n in range(H + 1)]
    sums = partial_products(seq.weighted(z), H)
    escapes = []
    for K in range(1, min(64, H - 1) + 1):
        c = next((c for c in range(H + 1) if abs(z[c]) > K), None)
        if c is None:
            return Verdict(
                Status.INCONCLUSIVE,
                H,
                cfg.tolerance,
                {"bound": K},
                note=f"no coordinate beyond bound {K} within the horizon",
            )
        escapes.append({"bound": K, "coordinate": c, "value": sums[H].entries[c]})  # type: ignore[attr-defined]
    return Verdict(Status.FAILS, H, cfg.tolerance, {"escapes": escapes})
