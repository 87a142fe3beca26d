from fractions import Fraction

import pytest

from prodlab.lab.concrete import (
    BoundedIntSeqValue,
    CirclePoint,
    CyclicValue,
    FinSupPermutation,
    IntTauP,
    PadicInt,
    basis_vector,
    circle_point,
    embed_int_tau_p,
    identity_of,
    int_to_padic,
    padic_to_residue,
    product_value,
    support,
    value_from_json,
)
from prodlab.lab.exceptions import ArgumentError, DomainError, UnsupportedError
from prodlab.lab.groups import (
    bounded_int_seq_group,
    circle_group,
    cyclic_group,
    norm,
    padic_group,
    power,
    product_group,
)


def test_padic_digits_are_least_significant_first():
    x = PadicInt.from_int(13, 2, 4)
    assert x.digits == (1, 0, 1, 1)
    assert PadicInt.from_digits([1, 0, 1, 1], 2) == x
    assert padic_to_residue(x) == 13


def test_negative_integers_embed_as_all_ones():
    assert int_to_padic(-1, 2, 4).digits == (1, 1, 1, 1)


def test_int_to_padic_validates_arguments():
    with pytest.raises(ArgumentError):
        int_to_padic(5, 6, 4)
    with pytest.raises(ArgumentError):
        int_to_padic(5, 3, 0)


def test_padic_arithmetic_wraps_at_depth():
    x = PadicInt.from_int(26, 3, 3)
    assert (x + 1).residue == 0
    assert (x * 3).residue == 24
    assert (-x).residue == 1


def test_circle_values_are_reduced():
    assert circle_point("3/2") == CirclePoint(Fraction(1, 2))
    assert circle_point(-1) == CirclePoint(Fraction(0))
    with pytest.raises(ArgumentError):
        CirclePoint(Fraction(1))


def test_circle_power_and_norm():
    x = CirclePoint(Fraction(1, 3))
    assert power(x, 2) == CirclePoint(Fraction(2, 3))
    assert norm(power(x, 2)) == Fraction(1, 3)


def test_int_tau_p_norm():
    assert norm(embed_int_tau_p(50, 5)) == Fraction(1, 25)
    assert norm(IntTauP(5, 0)) == 0


def test_cyclic_metric_is_discrete():
    assert norm(CyclicValue(7, 3)) == 1
    with pytest.raises(ArgumentError):
        CyclicValue(7, 7)


def test_permutation_from_mapping_checks_bijection():
    with pytest.raises(ArgumentError):
        FinSupPermutation.from_mapping({0: 1, 1: 1})
    sigma = FinSupPermutation.from_mapping({3: 5, 5: 3, 7: 7})
    assert sigma.support == frozenset({3, 5})
    assert norm(sigma) == Fraction(1, 8)


def test_product_values_are_canonical():
    G = product_group((cyclic_group(3), padic_group(2, 3), circle_group()))
    g = product_value(G, (4, -1, Fraction(5, 4)))
    assert g.coords == (1, 7, Fraction(1, 4))
    assert support(g) == frozenset({0, 1, 2})
    # coordinate c is weighted by 2^-c
    assert norm(product_value(G, (0, 0, Fraction(1, 4)))) == Fraction(1, 16)
    with pytest.raises(ArgumentError):
        product_value(G, (1, 2))


def test_basis_vector_truncates_past_depth():
    G = product_group((cyclic_group(5),) * 4)
    assert basis_vector(G, 2).coords == (0, 0, 1, 0)
    assert basis_vector(G, 9) == identity_of(G)
    with pytest.raises(UnsupportedError):
        basis_vector(circle_group(), 0)


def test_bounded_sequence_witness():
    G = bounded_int_seq_group(4)
    g = BoundedIntSeqValue(G, (1, -3, 0, 2))
    assert g.bound_witness == 3
    assert power(g, -2).bound_witness == 6
    assert norm(BoundedIntSeqValue(G, (0, 0, 4, 0))) == Fraction(1, 4)
    with pytest.raises(DomainError):
        BoundedIntSeqValue(G, (1, -3, 0, 2), bound_witness=2)


def test_value_from_json_reads_each_kind():
    assert value_from_json(padic_group(3, 3), [2, 0, 1]) == PadicInt.from_int(11, 3, 3)
    assert value_from_json(circle_group(), "1/3") == CirclePoint(Fraction(1, 3))
    G = product_group((cyclic_group(3), circle_group()))
    assert value_from_json(G, [2, "1/2"]) == product_value(G, (2, Fraction(1, 2)))
    with pytest.raises(ArgumentError):
        value_from_json(padic_group(3, 3), [1, 2])
