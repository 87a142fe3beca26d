import random
from fractions import Fraction

import pytest

from prodlab.lab.analysis import (
    abelian_fstar_equiv_test,
    bounded_subgroup_probe,
    check_cauchy_productive,
    check_f_cauchy_productive,
    check_f_productive,
    check_left_cauchy,
    check_null_sequence,
    check_productive,
    product_support_criterion,
    sample_bijection,
)
from prodlab.lab.bounds import BoundFunction, f_omega, f_one
from prodlab.lab.concrete import (
    CirclePoint,
    CyclicValue,
    PadicInt,
    basis_vector,
    product_value,
    transposition,
)
from prodlab.lab.exceptions import ArgumentError, DomainError
from prodlab.lab.families import build_a_n
from prodlab.lab.groups import (
    GroupSequence,
    circle_group,
    cyclic_group,
    norm,
    padic_group,
    partial_products,
    power,
    product_group,
    sym_fin_group,
)
from prodlab.lab.verdict import AnalysisConfig, Status


def _transpositions() -> GroupSequence:
    return GroupSequence(sym_fin_group(), lambda n: transposition(n, n + 1), "transpositions")


def _padic_powers() -> GroupSequence:
    return GroupSequence(padic_group(3, 40), lambda n: PadicInt.from_int(3**n, 3, 40), "3^n")


def _thirds() -> GroupSequence:
    return GroupSequence(circle_group(), lambda n: CirclePoint(Fraction(1, 3 ** (n + 1))), "thirds")


def test_transpositions_are_cauchy_productive():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**5), horizon=64)
    report = check_cauchy_productive(_transpositions(), cfg)
    assert report.status is Status.HOLDS
    assert report.verdict.witness["settle_index"] == 5
    assert report.verdict.witness["criterion_index"] == 6
    assert len(report.distance_trace) == 64


def test_transposition_partials_are_left_but_not_two_sided_cauchy():
    seq = _transpositions()
    products = GroupSequence(sym_fin_group(), lambda n: partial_products(seq, n)[n], "partials")
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**5), horizon=40)
    assert check_left_cauchy(products, cfg).status is Status.HOLDS
    assert check_left_cauchy(products, cfg, two_sided=True).status is Status.FAILS


def test_transpositions_are_not_productive():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**5), horizon=64)
    report = check_productive(_transpositions(), cfg)
    assert report.status is Status.FAILS
    assert report.details["two_sided"] == "fails"
    assert "point" in report.verdict.witness
    assert report.limit is None


def test_null_sequences():
    cfg = AnalysisConfig(tolerance=Fraction(1, 3**8), horizon=24)
    assert check_null_sequence(_padic_powers(), cfg).status is Status.HOLDS
    ones = GroupSequence(padic_group(3, 40), lambda n: PadicInt.from_int(1, 3, 40), "ones")
    verdict = check_null_sequence(ones, cfg)
    assert verdict.status is Status.FAILS
    assert set(verdict.witness) == {"index", "distance", "window_start"}


def test_circle_series_converges_to_a_half():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**10), horizon=24)
    report = check_productive(_thirds(), cfg)
    assert report.status is Status.HOLDS
    assert report.limit == CirclePoint(Fraction(1, 2))


def test_padic_powers_are_f_cauchy_productive():
    cfg = AnalysisConfig(tolerance=Fraction(1, 3**8), horizon=24, trials=5, exhaustive_threshold=64)
    for f in (f_one(), BoundFunction.constant(5)):
        report = check_f_cauchy_productive(_padic_powers(), f, cfg)
        assert report.status is Status.HOLDS
        assert report.details["trials"] == 5
        assert report.details["exhaustive_prefix"] >= 1


def test_f_productive_finds_a_failing_weight():
    G = product_group((cyclic_group(3),) * 8)
    seq = GroupSequence(G, lambda n: basis_vector(G, 0), "constant e_0")
    cfg = AnalysisConfig(tolerance=Fraction(1, 8), horizon=16, trials=2)
    report = check_f_cauchy_productive(seq, f_one(), cfg)
    assert report.status is Status.FAILS
    assert report.z_used is not None
    assert all(abs(c) <= 1 for c in report.z_used)
    assert check_f_productive(seq, f_one(), cfg).status is Status.FAILS


def test_star_weights_are_non_negative():
    cfg = AnalysisConfig(tolerance=Fraction(1, 3**8), horizon=24, trials=3)
    report = check_f_productive(_padic_powers(), BoundFunction.constant(4), cfg, star=True)
    assert report.status is Status.HOLDS
    assert report.details["star"] is True
    assert min(report.z_used) >= 0


@pytest.mark.parametrize("trial", range(6))
def test_sampled_bijections_permute_the_window(trial):
    phi = sample_bijection(random.Random(trial), 17, trial)
    assert sorted(phi) == list(range(17))


def test_abelian_equivalence_on_the_circle():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**10), horizon=24, trials=5)
    verdict = abelian_fstar_equiv_test(_thirds(), f_one(), cfg)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["oracle_matches"] == 5


def test_abelian_equivalence_needs_an_abelian_group():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**5), horizon=8)
    with pytest.raises(DomainError):
        abelian_fstar_equiv_test(_transpositions(), f_one(), cfg)


def test_support_criterion():
    G = product_group((cyclic_group(3),) * 8)
    cfg = AnalysisConfig(tolerance=Fraction(1, 4), horizon=8, exhaustive_threshold=64)
    basis = [basis_vector(G, n) for n in range(8)]
    verdict = product_support_criterion(basis, cfg)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["max_hits"] == 1
    assert verdict.witness["direct"] == "holds"

    same = [basis_vector(G, 0)] * 8
    verdict = product_support_criterion(same, cfg)
    assert verdict.status is Status.FAILS
    assert verdict.witness["coordinate"] == 0
    assert verdict.witness["hits"] == 8


@pytest.mark.parametrize("size", [1, 2, 3])
def test_support_criterion_on_short_a_n_families(size):
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**8), horizon=8)
    verdict = product_support_criterion([build_a_n(n, 16) for n in range(size)], cfg)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["cutoff"] == 2
    assert verdict.witness["max_hits"] == min(size, 2)
    assert verdict.witness["direct"] == "holds"


def test_support_criterion_fails_past_the_pairwise_cutoff():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**8), horizon=8)
    verdict = product_support_criterion([build_a_n(0, 16)] * 3, cfg)
    assert verdict.status is Status.FAILS
    assert verdict.witness["hits"] == 3
    assert verdict.witness["members"] == [0, 1, 2]
    assert verdict.witness["direct"] == "fails"


def test_support_criterion_is_inconclusive_when_the_direct_check_disagrees():
    G = product_group((cyclic_group(3),) * 8)
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**8), horizon=8, exhaustive_threshold=64)
    verdict = product_support_criterion([basis_vector(G, n) for n in range(8)], cfg)
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.witness["max_hits"] == 1
    assert verdict.witness["direct"] == "fails"
    assert verdict.note


def test_support_criterion_explicit_cutoff():
    G = product_group((cyclic_group(3),) * 4)
    cfg = AnalysisConfig(tolerance=Fraction(1, 4), horizon=8)
    family = [basis_vector(G, 0), basis_vector(G, 0), basis_vector(G, 1)]
    assert product_support_criterion(family, cfg, cutoff=1).status is Status.FAILS
    with pytest.raises(ArgumentError):
        product_support_criterion(family, cfg, cutoff=-1)


def test_support_criterion_needs_cyclic_factors():
    G = product_group((cyclic_group(3), circle_group()))
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**8), horizon=8)
    with pytest.raises(DomainError):
        product_support_criterion([product_value(G, (1, 0))], cfg)


def test_bounded_probe_with_bounded_weights():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**10), horizon=80, trials=4, exhaustive_threshold=64)
    verdict = bounded_subgroup_probe(BoundFunction.constant(2), cfg)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["bound"] == 2
    assert verdict.witness["limit_sup"] <= 2
    assert verdict.witness["split_sum_matches"]


def test_bounded_probe_with_unbounded_weights():
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**10), horizon=80, trials=4, exhaustive_threshold=64)
    verdict = bounded_subgroup_probe(BoundFunction.identity_plus(0), cfg)
    assert verdict.status is Status.FAILS
    escapes = verdict.witness["escapes"]
    assert len(escapes) == 64
    assert escapes[0] == {"bound": 1, "coordinate": 2, "value": 2}
    assert all(e["coordinate"] == e["bound"] + 1 for e in escapes)


def _random_padic_geometric(seed: int) -> GroupSequence:
    rng = random.Random(f"padic-geometric:{seed}")
    units = [rng.randrange(1, 3**6) for _ in range(64)]
    return GroupSequence(
        padic_group(3, 30), lambda n: PadicInt.from_int(units[n] * 3**n, 3, 30), f"padic-{seed}"
    )


def _random_circle_geometric(seed: int) -> GroupSequence:
    rng = random.Random(f"circle-geometric:{seed}")
    numerators = [rng.randint(1, 9) for _ in range(64)]
    return GroupSequence(
        circle_group(), lambda n: CirclePoint(Fraction(numerators[n], 2 ** (n + 4))), f"circle-{seed}"
    )


PROPERTY_CASES = [
    (_transpositions(), AnalysisConfig(tolerance=Fraction(1, 2**5), horizon=32)),
    (_padic_powers(), AnalysisConfig(tolerance=Fraction(1, 3**8), horizon=24)),
    (_thirds(), AnalysisConfig(tolerance=Fraction(1, 2**10), horizon=24)),
    (
        GroupSequence(cyclic_group(3), lambda n: CyclicValue(3, 1), "ones"),
        AnalysisConfig(tolerance=Fraction(1, 2), horizon=16),
    ),
    *[(_random_padic_geometric(s), AnalysisConfig(tolerance=Fraction(1, 3**6), horizon=20)) for s in range(5)],
    *[(_random_circle_geometric(s), AnalysisConfig(tolerance=Fraction(1, 2**8), horizon=20)) for s in range(5)],
]


@pytest.mark.parametrize("seq, cfg", PROPERTY_CASES, ids=lambda x: getattr(x, "name", None))
def test_cauchy_productive_iff_partial_products_are_left_cauchy(seq, cfg):
    report = check_cauchy_productive(seq, cfg)
    partials = GroupSequence.from_values(seq.owner, partial_products(seq, cfg.horizon))
    verdict = check_left_cauchy(partials, cfg)
    assert report.status is verdict.status
    if verdict.status is Status.HOLDS:
        assert report.verdict.witness["settle_index"] == verdict.witness["settle_index"]


@pytest.mark.parametrize("seq, cfg", PROPERTY_CASES, ids=lambda x: getattr(x, "name", None))
def test_cauchy_productive_terms_tend_to_the_identity(seq, cfg):
    report = check_cauchy_productive(seq, cfg)
    if report.status is Status.HOLDS:
        settle = report.verdict.witness["settle_index"]
        assert all(norm(seq[n]) < cfg.tolerance for n in range(settle + 1, cfg.horizon + 1))


@pytest.mark.parametrize("seq, cfg", PROPERTY_CASES[1:3] + PROPERTY_CASES[4:], ids=lambda x: getattr(x, "name", None))
def test_f_cauchy_productive_weighted_terms_tend_to_the_identity(seq, cfg):
    report = check_f_cauchy_productive(seq, f_one(), cfg.with_(trials=3))
    if report.status is Status.HOLDS:
        settle = report.verdict.witness["settle_index"]
        weighted = [power(seq[n], z) for n, z in enumerate(report.z_used)]
        assert all(norm(weighted[n]) < cfg.tolerance for n in range(settle + 1, cfg.horizon + 1))


def test_circle_halves_are_not_f_omega_cauchy_productive():
    halves = GroupSequence(circle_group(), lambda n: CirclePoint(Fraction(1, 2 ** (n + 1))), "halves")
    cfg = AnalysisConfig(tolerance=Fraction(1, 2**10), horizon=40, trials=4)
    assert cfg.omega_cap < 2**20
    report = check_f_cauchy_productive(halves, f_omega(), cfg)
    assert report.status is Status.FAILS
    assert report.z_used[20] == 2**20
    assert power(halves[20], report.z_used[20]) == CirclePoint(Fraction(1, 2))
