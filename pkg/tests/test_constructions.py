from fractions import Fraction

import pytest

from prodlab.lab.bounds import BoundFunction, f_omega
from prodlab.lab.concrete import CirclePoint, PadicInt
from prodlab.lab.constructions import (
    BasisKind,
    build_f_cauchy_set,
    cantor_scheme,
    make_nested_basis,
    reshuffle_bound_check,
)
from prodlab.lab.exceptions import ArgumentError, DepthExhaustedError, DomainError, UnsupportedError
from prodlab.lab.groups import (
    GroupSequence,
    circle_group,
    cyclic_group,
    norm,
    padic_group,
    power,
    product_group,
    sym_fin_group,
)
from prodlab.lab.verdict import Status


@pytest.fixture
def thirds() -> GroupSequence:
    return GroupSequence(circle_group(), lambda n: CirclePoint(Fraction(1, 3 ** (n + 1))), "thirds")


def test_nested_basis_kinds():
    assert make_nested_basis(padic_group(3, 10), 5).kind is BasisKind.SUBGROUP_CHAIN
    assert make_nested_basis(sym_fin_group(), 5).kind is BasisKind.SUBGROUP_CHAIN
    circle = make_nested_basis(circle_group(), 5)
    assert circle.kind is BasisKind.METRIC_BALL
    assert circle.radius(2) == Fraction(1, 36)
    mixed = make_nested_basis(product_group((cyclic_group(3), circle_group())), 5)
    assert mixed.kind is BasisKind.METRIC_BALL


def test_nested_basis_cube_condition():
    for G in (padic_group(3, 10), circle_group(), sym_fin_group()):
        basis = make_nested_basis(G, 8)
        assert all(basis.cube_condition(j) for j in range(7))
        assert len(basis.levels) == 8


def test_nested_basis_rejects_discrete_groups():
    with pytest.raises(UnsupportedError):
        make_nested_basis(cyclic_group(5), 3)
    with pytest.raises(ArgumentError):
        make_nested_basis(padic_group(3, 10), 0)


@pytest.mark.parametrize("G", [padic_group(3, 48), circle_group()], ids=lambda G: G.label())
def test_reshuffled_products_stay_in_the_previous_level(G):
    basis = make_nested_basis(G, 20)
    verdict = reshuffle_bound_check(basis, [5, 3, 9, 4], samples=20, seed=7)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["k"] == 3


def test_reshuffle_validates_phi():
    basis = make_nested_basis(padic_group(3, 20), 10)
    for phi in ([], [2, 2], [0, 3], [3, 10]):
        with pytest.raises(ArgumentError):
            reshuffle_bound_check(basis, phi, samples=1, seed=0)


def test_padic_builder_picks_level_generators():
    G = padic_group(3, 40)
    basis = make_nested_basis(G, 30)
    chosen = build_f_cauchy_set(G, basis, BoundFunction.identity_plus(1), 20)
    assert chosen == [PadicInt.from_int(3**m, 3, 40) for m in range(21)]


def test_circle_builder_keeps_powers_inside():
    G = circle_group()
    basis = make_nested_basis(G, 10)
    f = BoundFunction.constant(3)
    chosen = build_f_cauchy_set(G, basis, f, 8)
    assert len(set(chosen)) == 9
    for m, a in enumerate(chosen):
        for z in range(-3, 4):
            assert norm(power(a, z)) < basis.radius(m)


def test_circle_builder_cannot_handle_omega():
    G = circle_group()
    with pytest.raises(DepthExhaustedError):
        build_f_cauchy_set(G, make_nested_basis(G, 10), f_omega(), 4)


def test_builder_validates_levels():
    G = padic_group(3, 10)
    with pytest.raises(ArgumentError):
        build_f_cauchy_set(G, make_nested_basis(G, 5), BoundFunction.constant(1), 5)
    with pytest.raises(ArgumentError):
        build_f_cauchy_set(G, make_nested_basis(circle_group(), 5), BoundFunction.constant(1), 2)


def test_cantor_scheme_on_thirds(thirds):
    tree = cantor_scheme(thirds, 3)
    assert tree.ok
    assert len(tree.leaves) == 8
    assert sorted(leaf.path for leaf in tree.leaves) == [f"{k:03b}" for k in range(8)]
    assert tree.to_dict()["depth"] == 3


def test_cantor_scheme_of_depth_zero_is_the_identity(thirds):
    tree = cantor_scheme(thirds, 0)
    assert [leaf.center for leaf in tree.leaves] == [CirclePoint(Fraction(0))]


def test_cantor_scheme_needs_star_productive_sequence():
    halves = GroupSequence(circle_group(), lambda n: CirclePoint(Fraction(1, 2)), "halves")
    with pytest.raises(DomainError):
        cantor_scheme(halves, 2)
