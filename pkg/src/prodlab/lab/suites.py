"""
Named verification suites.

Each suite returns :class:`SuiteItem` rows pairing a verdict with the
verdict it is expected to have; an expected FAILS that fails is a pass.
Every random choice is drawn from a generator seeded with the suite seed.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable

from sympy import primerange

from .analysis import (
    abelian_fstar_equiv_test,
    bounded_subgroup_probe,
    check_cauchy_productive,
    check_f_cauchy_productive,
    check_f_productive,
    check_f_productive_set,
    check_left_cauchy,
    check_null_sequence,
    check_productive,
    product_support_criterion,
)
from .bounds import OMEGA, BoundFunction, IntWeightSeq, decompose_weights, f_omega, f_one
from .concrete import (
    CirclePoint,
    IntTauP,
    PadicInt,
    TruncatedProductValue,
    basis_vector,
    cycle,
    product_value,
    transposition,
)
from .constructions import build_f_cauchy_set, cantor_scheme, make_nested_basis, reshuffle_bound_check
from .exceptions import DepthExhaustedError, UnknownSuiteError
from .families import (
    a_n_at,
    boolean_combination,
    build_a_n,
    density_probe,
    e_set,
    e_set_witness,
    family_S,
    family_T,
    g_z,
    linked_witnesses,
    monothetic_generators,
    support_overlap_check,
    split_test,
    surjection,
)
from .groups import (
    GroupSequence,
    circle_group,
    cyclic_group,
    identity,
    int_padic_group,
    padic_group,
    partial_products,
    product_group,
    segment_product,
    sym_fin_group,
)
from .numtheory import crt_multiple, iterated_approx, padic_approx_solve, valuation
from .types import ReportItem, SuiteReport
from .verdict import AnalysisConfig, Status, Verdict

logger = logging.getLogger(__name__)

EXACT = Fraction(0)


@dataclass(frozen=True)
class SuiteItem:
    name: str
    verdict: Verdict
    expected: Status = Status.HOLDS

    @property
    def passed(self) -> bool:
        return self.verdict.status is self.expected

    def to_dict(self) -> ReportItem:
        return {
            "name": self.name,
            "verdict": self.verdict.status.value,
            "witness": self.verdict.witness,
            "expected": self.expected.value,
            "pass": self.passed,
        }


def _oracle(name: str, ok: bool, witness: dict[str, Any], horizon: int = 0) -> SuiteItem:
    """An exact check: HOLDS when ``ok``, FAILS with the same witness otherwise."""
    status = Status.HOLDS if ok else Status.FAILS
    return SuiteItem(name, Verdict(status, horizon, EXACT, witness))


def _rng(seed: int, suite: str) -> random.Random:
    return random.Random(f"{seed}:{suite}")


# ============================================================================
# symmetric-group
# ============================================================================


def symmetric_group_suite(seed: int) -> list[SuiteItem]:
    H = 512
    G = sym_fin_group()
    b = GroupSequence(G, lambda n: transposition(n, n + 1), "transpositions")
    items: list[SuiteItem] = []

    P = partial_products(b, H)
    items.append(
        _oracle("partial-product-is-cycle", P[2] == cycle(0, 1, 2, 3), {"pi_2": P[2].to_json()})
    )

    for k in range(1, 17):
        cfg = AnalysisConfig(Fraction(1, 2**k), H)
        report = check_cauchy_productive(b, cfg)
        verdict = report.verdict
        index_ok = verdict.holds and verdict.witness["criterion_index"] == k + 1  # type: ignore[index]
        fixes = all(
            segment_product(b, l, m)(x) == x  # type: ignore[operator]
            for l in range(k, k + 4)
            for m in range(l + 1, l + 6)
            for x in range(k + 1)
        )
        if verdict.holds and not (index_ok and fixes):
            verdict = Verdict(
                Status.FAILS, H, cfg.tolerance, {**verdict.witness, "segments_fix_prefix": fixes}  # type: ignore[dict-item]
            )
        items.append(SuiteItem(f"cauchy-productive/k={k}", verdict))

    cfg = AnalysisConfig(Fraction(1, 2**16), H)
    partials = GroupSequence.from_values(G, P, "pi")
    items.append(SuiteItem("left-cauchy", check_left_cauchy(partials, cfg)))
    items.append(
        SuiteItem("two-sided-cauchy", check_left_cauchy(partials, cfg, two_sided=True), Status.FAILS)
    )
    items.append(SuiteItem("productive", check_productive(b, cfg).verdict, Status.FAILS))

    # π_m⁻¹(0) = m + 1 and π_n fixes m + 1 for n < m, so d(π_n⁻¹, π_m⁻¹) = 1
    bad = None
    pairs = 0
    for m in range(1, H + 1):
        y = P[m]._inverse()(0)  # type: ignore[attr-defined]
        for n in range(m):
            pairs += 1
            if P[n](y) != m + 1:  # type: ignore[operator]
                bad = {"n": n, "m": m, "image": P[n](y)}  # type: ignore[operator]
                break
        if bad:
            break
    items.append(
        _oracle("two-sided-witness/exhaustive", bad is None, bad or {"pairs": pairs}, H)
    )
    return items


# ============================================================================
# padic
# ============================================================================


def padic_suite(seed: int) -> list[SuiteItem]:
    rng = _rng(seed, "padic")
    depth = 8
    items: list[SuiteItem] = []
    for p in (2, 3, 5):
        cases = mismatches = 0
        first_bad: dict[str, Any] | None = None
        for _ in range(200):
            t = rng.randint(0, 5)
            unit = rng.randrange(1, p ** (depth - t))
            while unit % p == 0:
                unit = rng.randrange(1, p ** (depth - t))
            alpha = PadicInt.from_int(unit * p**t, p, depth)
            eta = PadicInt.from_int(rng.randrange(p ** (depth - t)) * p**t, p, depth)
            for k in range(t + 1, 7):
                cases += 1
                z = padic_approx_solve(eta, alpha, k)
                modulus = p**k
                brute = next(
                    w for w in range(modulus) if (eta.residue - w * alpha.residue) % modulus == 0
                )
                if z != brute or not valuation(eta - alpha * z).at_least(k):
                    mismatches += 1
                    first_bad = first_bad or {
                        "eta": eta.residue, "alpha": alpha.residue, "k": k, "z": z, "brute": brute
                    }
        items.append(
            _oracle(
                f"solver/p={p}",
                mismatches == 0,
                first_bad or {"cases": cases, "mismatches": 0},
            )
        )

    items.append(
        _oracle(
            "solver/examples",
            padic_approx_solve(PadicInt.from_int(6, 3, 4), PadicInt.from_int(3, 3, 4), 3) == 2
            and padic_approx_solve(PadicInt.from_int(7, 5, 4), PadicInt.from_int(1, 5, 4), 2) == 7,
            {"cases": 2},
        )
    )

    digit_mismatch = 0
    for p in (2, 3, 5):
        alphas = [PadicInt.from_int(p**i, p, depth) for i in range(depth)]
        for _ in range(50):
            eta = PadicInt.from_int(rng.randrange(p**depth), p, depth)
            zs = iterated_approx(eta, alphas)
            remainder = eta - sum((a * z for a, z in zip(alphas, zs)), PadicInt(p, depth, 0))
            if tuple(zs) != eta.digits or not valuation(remainder).is_infinite:
                digit_mismatch += 1
    items.append(_oracle("iterated/digits", digit_mismatch == 0, {"mismatches": digit_mismatch}))

    thirteen = iterated_approx(
        PadicInt.from_int(13, 2, 4), [PadicInt.from_int(2**i, 2, 4) for i in range(4)]
    )
    items.append(_oracle("iterated/thirteen", thirteen == [1, 0, 1, 1], {"z": thirteen}))

    val_mismatch = 0
    for _ in range(300):
        p = rng.choice((2, 3, 5))
        x = PadicInt.from_int(rng.randrange(p**depth), p, depth)
        digits = x.digits
        oracle = next((i for i, d in enumerate(digits) if d), None)
        if valuation(x).value != oracle:
            val_mismatch += 1
    items.append(_oracle("valuation/first-nonzero-digit", val_mismatch == 0, {"mismatches": val_mismatch}))
    return items


# ============================================================================
# crt
# ============================================================================


def crt_suite(seed: int) -> list[SuiteItem]:
    rng = _rng(seed, "crt")
    primes = list(primerange(3, 100))
    mismatches = 0
    first_bad: dict[str, Any] | None = None
    for _ in range(200):
        while True:
            chosen = rng.sample(primes, rng.randint(1, 5))
            total = 1
            for q in chosen:
                total *= q
            if total <= 10**5:
                break
        G = product_group(tuple(cyclic_group(q) for q in chosen))
        g = product_value(G, [rng.randrange(1, q) for q in chosen])
        F = sorted(rng.sample(range(len(chosen)), rng.randint(1, len(chosen))))
        targets = {c: rng.randrange(chosen[c]) for c in F}
        z = crt_multiple(g, F, targets)

        def matches(w: int) -> bool:
            return all((w * g.coords[c]) % chosen[c] == targets[c] for c in F)

        big = max(F, key=lambda c: chosen[c])
        q = chosen[big]
        start = (targets[big] * pow(g.coords[big], -1, q)) % q
        span = 1
        for c in F:
            span *= chosen[c]
        brute = next(w for w in range(start, span, q) if matches(w))
        if z != brute or not matches(z):
            mismatches += 1
            first_bad = first_bad or {"moduli": chosen, "F": F, "z": z, "brute": brute}
    items = [_oracle("crt/random", mismatches == 0, first_bad or {"cases": 200, "mismatches": 0})]

    G = product_group((cyclic_group(3), cyclic_group(5)))
    examples = (
        crt_multiple(product_value(G, (1, 1)), [0, 1], {0: 2, 1: 3}),
        crt_multiple(product_value(G, (2, 1)), [0, 1], {0: 1, 1: 4}),
        crt_multiple(product_value(G, (2, 1)), [0, 1], {0: 0, 1: 0}),
    )
    items.append(_oracle("crt/examples", examples == (8, 14, 0), {"z": list(examples)}))
    return items


# ============================================================================
# reshuffle
# ============================================================================


def reshuffle_suite(seed: int) -> list[SuiteItem]:
    rng = _rng(seed, "reshuffle")
    items: list[SuiteItem] = []
    for label, G, count, top in (
        ("padic", padic_group(3, 48), 45, 40),
        ("circle", circle_group(), 40, 30),
    ):
        basis = make_nested_basis(G, count)
        violations = 0
        witness: dict[str, Any] = {"cases": 1000}
        for case in range(1000):
            phi = rng.sample(range(1, top + 1), rng.randint(1, 20))
            verdict = reshuffle_bound_check(basis, phi, 1, seed * 100_003 + case)
            if not verdict.holds:
                violations += 1
                witness = {"phi": phi, **verdict.witness}  # type: ignore[dict-item]
        witness["violations"] = violations
        items.append(_oracle(f"reshuffle/{label}", violations == 0, witness))
        cube = all(basis.cube_condition(j) for j in range(count - 1))
        items.append(_oracle(f"cube-condition/{label}", cube, {"levels": count}))
    return items


# ============================================================================
# builder
# ============================================================================


def builder_suite(seed: int) -> list[SuiteItem]:
    items: list[SuiteItem] = []
    f = BoundFunction.identity_plus(1)
    for label, G, p in (
        ("padic", padic_group(3, 210), 3),
        ("int-padic", int_padic_group(5), 5),
    ):
        basis = make_nested_basis(G, 201)
        built = build_f_cauchy_set(G, basis, f, 200)
        items.append(
            _oracle(f"builder/{label}/faithful", len(set(built)) == len(built), {"size": len(built)})
        )
        cfg = AnalysisConfig(Fraction(1, p**10), 200, trials=100, seed=seed)
        seq = GroupSequence.from_values(G, built, f"built-{label}")
        report = check_f_productive_set(seq, f, cfg)
        items.append(SuiteItem(f"builder/{label}/f-cauchy-productive-set", report.verdict))

    G = circle_group()
    c3 = BoundFunction.constant(3)
    basis = make_nested_basis(G, 49)
    built = build_f_cauchy_set(G, basis, c3, 48)
    cfg = AnalysisConfig(Fraction(1, 2**20), 48, trials=10, seed=seed)
    report = check_f_productive_set(GroupSequence.from_values(G, built, "built-circle"), c3, cfg)
    items.append(SuiteItem("builder/circle/f-cauchy-productive-set", report.verdict))

    try:
        build_f_cauchy_set(G, basis, f_omega(), 3)
        exhausted = False
    except DepthExhaustedError:
        exhausted = True
    items.append(_oracle("builder/circle/no-f-omega-set", exhausted, {"raised": exhausted}))
    return items


# ============================================================================
# cantor
# ============================================================================


def _thirds() -> GroupSequence:
    return GroupSequence(circle_group(), lambda n: CirclePoint(Fraction(1, 3 ** (n + 1))), "thirds")


def cantor_suite(seed: int) -> list[SuiteItem]:
    depth = 10
    tree = cantor_scheme(_thirds(), depth)
    items = [_oracle(f"cantor/{name}", ok, {"depth": depth}) for name, ok in tree.checks.items()]
    items.append(_oracle("cantor/leaf-count", len(tree.leaves) == 2**depth, {"leaves": len(tree.leaves)}))
    paths = sorted(leaf.path for leaf in tree.leaves)
    items.append(
        _oracle(
            "cantor/leaf-paths",
            paths == [format(k, f"0{depth}b") for k in range(2**depth)],
            {"first": paths[0], "last": paths[-1]},
        )
    )

    shallow = cantor_scheme(_thirds(), 0)
    items.append(
        _oracle(
            "cantor/depth-0",
            len(shallow.leaves) == 1 and shallow.leaves[0].center == identity(circle_group()),
            {"leaves": len(shallow.leaves)},
        )
    )
    one = cantor_scheme(_thirds(), 1)
    a, b = one.leaves
    items.append(_oracle("cantor/depth-1", one.ok and a.center != b.center, one.checks))
    return items


# ============================================================================
# hp-example
# ============================================================================


def _random_weight(rng: random.Random, terms: int) -> IntWeightSeq:
    size = rng.randint(1, 3)
    positions = rng.sample(range(terms), size)
    return IntWeightSeq.from_mapping(
        {n: rng.choice([-1, 1]) * rng.randint(1, 5) for n in positions}
    )


def hp_example_suite(seed: int) -> list[SuiteItem]:
    rng = _rng(seed, "hp-example")
    items: list[SuiteItem] = []
    window = 64

    S = family_S(32, 4096)
    triples_empty = all(not (S[a] & S[b] & S[c]) for a, b, c in combinations(range(32), 3))
    exact = all(len(set(surjection(k))) == 2 for k in range(4096))
    items.append(_oracle("families/S-3-disjoint", triples_empty and exact, {"sets": 32}))

    linked = all(
        all(set(surjection(k)) == {n, m} for k in linked_witnesses(n, m, 3))
        for n, m in combinations(range(32), 2)
    )
    covers = set().union(*family_S(4096, 256)) == set(range(256))
    items.append(_oracle("families/S-2-linked", linked and covers, {"pairs": 32 * 31 // 2}))

    T = family_T(6, window)
    five = boolean_combination(T[:3], (True, False, True), window)
    patterns = all(
        boolean_combination(T, tuple(bool(bits >> i & 1) for i in range(6)), window)
        for bits in range(64)
    )
    items.append(
        _oracle("families/T-independent", min(five) == 5 and patterns, {"least": min(five)})
    )

    nonempty = 0
    failed: dict[str, Any] | None = None
    for _ in range(100):
        k = rng.choice([-1, 1]) * rng.randint(1, 5)
        n = rng.choice([-1, 1]) * rng.randint(1, 5)
        l, m = rng.randint(-5, 5), rng.randint(-5, 5)
        q, r = rng.sample(range(9), 2)
        found = e_set_witness(k, l, m, n, q, r)
        if found is not None and max(q, r) <= 4:
            found = found if e_set(k, l, m, n, q, r, window, rows=2).coordinates else None
        if found is not None:
            nonempty += 1
        else:
            failed = failed or {"tuple": [k, l, m, n, q, r]}
    items.append(_oracle("e-set/nonempty", nonempty == 100, failed or {"tuples": nonempty}))
    plain = e_set(1, 1, 1, -1, 0, 1, window)
    items.append(_oracle("e-set/example", plain.status is Status.HOLDS, plain.to_dict()))

    holds = 0
    first_other: dict[str, Any] | None = None
    for _ in range(100):
        z, zp = _random_weight(rng, 8), _random_weight(rng, 8)
        verdict = support_overlap_check(z, zp, window, 8)
        if verdict.holds:
            holds += 1
        else:
            first_other = first_other or {"status": verdict.status.value, **(verdict.witness or {})}
    items.append(_oracle("overlap/random-pairs", holds == 100, first_other or {"holds": holds}))

    matched = 0
    for _ in range(100):
        coords = rng.sample([(i, j) for i in range(window) for j in range(window)], rng.randint(1, 6))
        targets = {c: rng.randrange(1000) for c in coords}
        matched += density_probe(targets).matched
    items.append(_oracle("density/probes", matched == 100, {"matched": matched}))

    small = 16
    cfg = AnalysisConfig(Fraction(1, 2**8), 8, exhaustive_threshold=64)
    family = [build_a_n(n, small) for n in range(8)]
    items.append(SuiteItem("support-criterion/a_n", product_support_criterion(family, cfg)))
    Z3 = product_group(tuple(cyclic_group(3) for _ in range(small)))
    items.append(
        SuiteItem(
            "support-criterion/basis",
            product_support_criterion([basis_vector(Z3, n) for n in range(small)], cfg),  # type: ignore[misc]
        )
    )
    items.append(
        SuiteItem(
            "support-criterion/constant-coordinate",
            product_support_criterion([basis_vector(Z3, 0) for _ in range(small)], cfg),  # type: ignore[misc]
            Status.FAILS,
        )
    )

    stable = True
    for _ in range(20):
        z = _random_weight(rng, 8)
        stable &= g_z(z, small, 8) == g_z(z, small, 12)
    indicator = g_z(IntWeightSeq.from_mapping({0: 1}), small, 8) == build_a_n(0, small)
    items.append(_oracle("g_z/stable", stable and indicator, {"samples": 20}))

    a0 = build_a_n(0, small)
    even = TruncatedProductValue(
        a0.owner, tuple(x if (c // small) % 2 == 0 else 0 for c, x in enumerate(a0.coords))
    )
    odd = TruncatedProductValue(
        a0.owner, tuple(x if (c // small) % 2 == 1 else 0 for c, x in enumerate(a0.coords))
    )
    items.append(SuiteItem("split/disjoint-rows", split_test(even, odd, small * small)))
    gz0 = g_z(IntWeightSeq.from_mapping({0: 1}), small, 8)
    gz1 = g_z(IntWeightSeq.from_mapping({1: 2}), small, 8)
    items.append(SuiteItem("split/g_z-pair", split_test(gz0, gz1, small * small), Status.FAILS))
    items.append(SuiteItem("split/same", split_test(gz0, gz0, small * small), Status.FAILS))
    a_check = all(
        a_n_at(n, i, j) == build_a_n(n, 8).coords[i * 8 + j]
        for n in range(4)
        for i in range(8)
        for j in range(8)
    )
    items.append(_oracle("a_n/window-agrees", a_check, {"window": 8}))
    return items


# ============================================================================
# abelian-equiv
# ============================================================================


def abelian_equiv_suite(seed: int) -> list[SuiteItem]:
    items: list[SuiteItem] = []
    padic = GroupSequence(
        padic_group(3, 40), lambda n: PadicInt.from_int(3**n, 3, 40), "powers-of-3"
    )
    padic_cfg = AnalysisConfig(Fraction(1, 3**8), 24, trials=200, seed=seed)
    circle_cfg = AnalysisConfig(Fraction(1, 2**10), 24, trials=200, seed=seed)
    for f in (f_one(), BoundFunction.constant(5)):
        items.append(
            SuiteItem(f"equiv/padic/{f.label()}", abelian_fstar_equiv_test(padic, f, padic_cfg))
        )
        items.append(
            SuiteItem(f"equiv/circle/{f.label()}", abelian_fstar_equiv_test(_thirds(), f, circle_cfg))
        )
    items.append(
        SuiteItem(
            "equiv/zero-weight",
            abelian_fstar_equiv_test(padic, BoundFunction.constant(0), padic_cfg.with_(trials=3)),
        )
    )
    zp, zm = decompose_weights(IntWeightSeq.from_list([1, -2, 3]))
    items.append(
        _oracle(
            "decompose/example",
            zp.values(3) == [1, 0, 3] and zm.values(3) == [0, -2, 0],
            {"plus": zp.values(3), "minus": zm.values(3)},
        )
    )
    hook_cfg = padic_cfg.with_(trials=4, exhaustive_threshold=64)
    star = check_f_cauchy_productive(padic, BoundFunction.constant(5), hook_cfg, star=True)
    signed = check_f_cauchy_productive(padic, BoundFunction.constant(5), hook_cfg)
    items.append(
        _oracle(
            "star-vs-signed/padic",
            star.status is signed.status is Status.HOLDS,
            {"star": star.status.value, "signed": signed.status.value},
        )
    )
    return items


# ============================================================================
# bounded-znn
# ============================================================================


def bounded_znn_suite(seed: int) -> list[SuiteItem]:
    cfg = AnalysisConfig(Fraction(1, 2**10), 80, trials=4, seed=seed, exhaustive_threshold=64)
    items: list[SuiteItem] = []
    for k in (1, 5, 10):
        verdict = bounded_subgroup_probe(BoundFunction.constant(k), cfg)
        if verdict.holds and verdict.witness["limit_sup"] > k:  # type: ignore[index]
            verdict = Verdict(Status.FAILS, cfg.horizon, cfg.tolerance, verdict.witness)
        items.append(SuiteItem(f"bounded/constant-{k}", verdict))
    unbounded = bounded_subgroup_probe(BoundFunction.identity_plus(0), cfg)
    escapes = (unbounded.witness or {}).get("escapes", [])
    if unbounded.fails and not (
        len(escapes) == 64 and all(e["coordinate"] == e["bound"] + 1 for e in escapes)
    ):
        unbounded = Verdict(Status.HOLDS, cfg.horizon, cfg.tolerance, {"escapes": escapes})
    items.append(SuiteItem("bounded/identity-escapes", unbounded, Status.FAILS))
    return items


# ============================================================================
# linear-groups
# ============================================================================


def _unit(rng: random.Random, p: int) -> int:
    u = rng.randrange(1, 10**6)
    return u + 1 if u % p == 0 else u


def _null_rules(p: int, u: int, s: int, Z3: Any) -> dict[str, Callable[[int], Any]]:
    """``u·p^(n+s)`` in ℤ and ℤ_p, and shifted basis vectors in the product."""
    return {
        "int-padic": lambda n: IntTauP(p, u * p ** (n + s)),
        "padic": lambda n: PadicInt.from_int(u * p ** (n + s), p, 40),
        "cyclic-product": lambda n: basis_vector(Z3, n + s, 1 + u % 2),
    }


def _unit_rules(p: int, units: list[int], Z3: Any) -> dict[str, Callable[[int], Any]]:
    """Terms of norm 1 throughout."""
    return {
        "int-padic": lambda n: IntTauP(p, units[n % len(units)]),
        "padic": lambda n: PadicInt.from_int(units[n % len(units)], p, 40),
        "cyclic-product": lambda n: basis_vector(Z3, 0, 1 + units[n % len(units)] % 2),
    }


def _linear_cases(rng: random.Random) -> list[tuple[str, GroupSequence, Fraction]]:
    p = 3
    Z3 = product_group(tuple(cyclic_group(3) for _ in range(24)))
    owners = {"int-padic": int_padic_group(p), "padic": padic_group(p, 40), "cyclic-product": Z3}
    tolerances = {
        "int-padic": Fraction(1, p**8),
        "padic": Fraction(1, p**8),
        "cyclic-product": Fraction(1, 2**8),
    }
    cases: list[tuple[str, GroupSequence, Fraction]] = []
    for null in (True, False):
        for _ in range(50):
            if null:
                rules = _null_rules(p, _unit(rng, p), rng.randint(0, 3), Z3)
            else:
                rules = _unit_rules(p, [_unit(rng, p) for _ in range(41)], Z3)
            for label, rule in rules.items():
                cases.append((label, GroupSequence(owners[label], rule, label), tolerances[label]))
    return cases


def linear_groups_suite(seed: int) -> list[SuiteItem]:
    rng = _rng(seed, "linear-groups")
    tallies: dict[str, dict[str, Any]] = {}
    for label, seq, tol in _linear_cases(rng):
        cfg = AnalysisConfig(tol, 40, trials=1, seed=seed, exhaustive_threshold=64, omega_cap=1000)
        null = check_null_sequence(seq, cfg)
        fw = check_f_cauchy_productive(seq, f_omega(), cfg)
        tally = tallies.setdefault(label, {"cases": 0, "mismatches": 0})
        tally["cases"] += 1
        if null.status is not fw.status:
            tally["mismatches"] += 1
            tally.setdefault("first", {"null": null.status.value, "f_omega": fw.status.value})
    return [
        _oracle(f"linear/{label}", tally["mismatches"] == 0, tally)
        for label, tally in sorted(tallies.items())
    ]


# ============================================================================
# reordering
# ============================================================================


def reordering_sequence() -> GroupSequence:
    """Halves on distinct coordinates interleaved with a geometric series on coordinate 1."""
    G = product_group(tuple(circle_group() for _ in range(33)))

    def rule(n: int) -> TruncatedProductValue:
        i = n // 2
        if n % 2 == 0:
            return basis_vector(G, i, Fraction(1, 2))  # type: ignore[return-value]
        return basis_vector(G, 1, Fraction(1, 2 ** (i + 1)))  # type: ignore[return-value]

    return GroupSequence(G, rule, "halves-and-geometric")


def reordering_suite(seed: int) -> list[SuiteItem]:
    f = BoundFunction.periodic(OMEGA, 1)
    cfg = AnalysisConfig(
        Fraction(1, 2**10), 64, trials=6, seed=seed, omega_cap=2**40, exhaustive_threshold=16
    )
    seq = reordering_sequence()
    items = [
        SuiteItem("reordering/sequence", check_f_productive(seq, f, cfg).verdict),
        SuiteItem(
            "reordering/set-composed",
            check_f_productive_set(seq, f, cfg, cauchy=False, bounds="composed").verdict,
        ),
        SuiteItem(
            "reordering/set-positional",
            check_f_productive_set(seq, f, cfg, cauchy=False, bounds="positional").verdict,
            Status.FAILS,
        ),
    ]

    Z3 = product_group(tuple(cyclic_group(3) for _ in range(24)))
    basis = GroupSequence(Z3, lambda n: basis_vector(Z3, n), "e_n")
    report = check_f_productive_set(basis, f_omega(), AnalysisConfig(Fraction(1, 2**8), 40, trials=12, seed=seed))
    counts = report.details["status_counts"]
    items.append(
        _oracle("reordering/disjoint-support-invariance", counts["holds"] == 12, counts)
    )

    mono = monothetic_generators(16, 3)
    mono_seq = GroupSequence.from_values(mono[0].owner, mono, "monothetic")
    mono_cfg = AnalysisConfig(Fraction(1, 2**6), 30, trials=6, seed=seed)
    items.append(
        SuiteItem("reordering/monothetic-product", check_f_productive_set(mono_seq, f_omega(), mono_cfg).verdict)
    )
    return items


# ============================================================================
# Registry
# ============================================================================


SuiteFn = Callable[[int], list[SuiteItem]]

SUITES: dict[str, tuple[int, SuiteFn]] = {
    "symmetric-group": (512, symmetric_group_suite),
    "padic": (6, padic_suite),
    "crt": (0, crt_suite),
    "reshuffle": (20, reshuffle_suite),
    "builder": (200, builder_suite),
    "cantor": (10, cantor_suite),
    "hp-example": (64, hp_example_suite),
    "abelian-equiv": (24, abelian_equiv_suite),
    "bounded-znn": (80, bounded_znn_suite),
    "linear-groups": (40, linear_groups_suite),
    "reordering": (64, reordering_suite),
}


def suite_names() -> list[str]:
    return [*SUITES, "all"]


def run_suite(name: str, seed: int = 0) -> SuiteReport:
    """Run a suite (or ``all``) and return its report.

    Raises:
        UnknownSuiteError: If ``name`` is not registered.
    """
    if name == "all":
        items: list[ReportItem] = []
        for suite, (_, fn) in SUITES.items():
            logger.info("running suite %s", suite)
            for item in fn(seed):
                row = item.to_dict()
                row["name"] = f"{suite}/{row['name']}"
                items.append(row)
        horizon = max(h for h, _ in SUITES.values())
        return {"suite": "all", "seed": seed, "horizon": horizon, "items": items}
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; choose from {', '.join(suite_names())}",
            details={"suite": name},
        )
    horizon, fn = SUITES[name]
    logger.info("running suite %s", name)
    return {
        "suite": name,
        "seed": seed,
        "horizon": horizon,
        "items": [item.to_dict() for item in fn(seed)],
    }


def report_passed(report: SuiteReport) -> bool:
    return all(item["pass"] for item in report["items"])
