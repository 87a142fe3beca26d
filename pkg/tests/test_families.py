import itertools

import pytest

from prodlab.lab.bounds import IntWeightSeq
from prodlab.lab.concrete import product_value
from prodlab.lab.exceptions import ArgumentError, DomainError
from prodlab.lab.families import (
    a_n_at,
    boolean_combination,
    build_a_n,
    cantor_pair,
    cantor_unpair,
    choose_signs,
    density_probe,
    e_set,
    e_set_witness,
    family_S,
    family_T,
    g_z,
    kp_prime,
    kp_window,
    linked_witnesses,
    monothetic_generators,
    pair_from_index,
    pair_index,
    split_test,
    support_overlap_check,
    surjection,
)
from prodlab.lab.groups import cyclic_group, product_group
from prodlab.lab.verdict import Status


def test_cantor_pairing_round_trips():
    assert [cantor_pair(0, 0), cantor_pair(1, 0), cantor_pair(0, 1)] == [0, 1, 2]
    for k in range(200):
        assert cantor_pair(*cantor_unpair(k)) == k


def test_pair_index_is_colex():
    assert [pair_index(0, 1), pair_index(0, 2), pair_index(1, 2)] == [0, 1, 2]
    assert pair_index(2, 0) == 1
    for k in range(100):
        assert pair_index(*pair_from_index(k)) == k
    with pytest.raises(ArgumentError):
        pair_index(3, 3)


def test_linked_witnesses_hit_the_pair():
    for k in linked_witnesses(2, 5, 6):
        assert surjection(k) == (2, 5)


def test_any_two_S_sets_meet():
    S = family_S(8, 512)
    for n, m in itertools.combinations(range(8), 2):
        assert set(linked_witnesses(n, m, 3)) <= S[n] & S[m]


def test_no_three_S_sets_meet():
    S = family_S(16, 1024)
    for a, b, c in itertools.combinations(range(16), 3):
        assert not (S[a] & S[b] & S[c])


def test_T_sets_are_independent():
    T = family_T(5, 32)
    for signs in itertools.product((True, False), repeat=5):
        assert len(boolean_combination(T, signs, 32)) == 1


def test_coordinate_primes():
    assert kp_prime(0, 0) == 3
    assert kp_prime(1, 0) == 5
    assert kp_prime(0, 1) == 7
    assert [factor.n for factor in kp_window(2).factors] == [3, 7, 5, 13]
    with pytest.raises(ArgumentError):
        kp_window(0)


def test_a_n_coordinates_follow_bits():
    # f(0) = {0, 1}
    assert a_n_at(0, 0, 1) == 1
    assert a_n_at(0, 0, 0) == 2
    assert a_n_at(5, 0, 1) == 0


def test_g_z_of_a_unit_weight_is_a_n():
    z = IntWeightSeq.from_mapping({3: 1})
    assert g_z(z, 6, 10) == build_a_n(3, 6)
    assert g_z(z, 6, 10) == g_z(z, 6, 50)


def test_choose_signs():
    assert choose_signs(1, 1, 1, -1) == (1, 2)
    assert choose_signs(1, 0, 0, 1) == (1, 1)
    with pytest.raises(DomainError):
        choose_signs(0, 1, 1, 1)


def test_e_set_example():
    result = e_set(1, 1, 1, -1, 0, 1, depth=4, rows=2)
    assert result.coordinates == [(0, 1), (0, 2), (2, 1), (2, 2)]
    assert result.status is Status.HOLDS
    assert result.rows_outside == 0
    assert e_set_witness(1, 1, 1, -1, 0, 1) == (0, 1)
    with pytest.raises(DomainError):
        e_set(1, 1, 1, 1, 2, 2, depth=4)


def test_e_set_counts_rows_outside_the_window():
    result = e_set(1, 1, 1, -1, 0, 1, depth=2, rows=2)
    assert result.coordinates == [(0, 1)]
    assert result.rows == [0]
    assert result.rows_outside == 1


def test_e_set_in_a_small_window_is_inconclusive():
    result = e_set(1, 1, 1, -1, 3, 4, depth=8, rows=2)
    assert result.coordinates == []
    assert result.rows_outside == 2
    assert result.status is Status.INCONCLUSIVE
    assert result.to_dict()["status"] == "inconclusive"


def test_overlap_with_disjoint_supports():
    z, zp = IntWeightSeq.from_list([1]), IntWeightSeq.from_list([0, 1])
    verdict = support_overlap_check(z, zp, depth=8, terms=2)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["case"] == "disjoint-supports"
    assert verdict.witness["coordinate"] == [0, 3]
    assert verdict.witness["values"] == [1, 1]


def test_overlap_with_a_shared_index():
    z, zp = IntWeightSeq.from_list([1, 1]), IntWeightSeq.from_list([0, 1])
    verdict = support_overlap_check(z, zp, depth=8, terms=2)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["case"] == "shared-index"
    assert verdict.witness["coordinate"] == [3, 0]


def test_overlap_needs_nonzero_weights():
    with pytest.raises(DomainError):
        support_overlap_check(IntWeightSeq(), IntWeightSeq.from_list([1]), depth=4, terms=4)


def test_split_test():
    G = product_group((cyclic_group(3),) * 4)
    g, gp = product_value(G, (1, 0, 0, 0)), product_value(G, (0, 2, 0, 0))
    assert split_test(g, gp, 4).status is Status.HOLDS
    verdict = split_test(g, g, 4)
    assert verdict.status is Status.FAILS
    assert verdict.witness["coordinate"] == 0
    with pytest.raises(DomainError):
        split_test(g, product_value(G, (0, 0, 0, 0)), 4)


def test_density_probe_meets_targets():
    result = density_probe({(0, 1): 3, (2, 0): 5})
    assert result.matched
    assert set(result.weights) == {0, 1}
    assert result.to_dict()["targets"] == [[0, 1, 3], [2, 0, 5]]


def test_monothetic_generators_are_basis_vectors():
    gens = monothetic_generators(3, 5)
    assert [g.coords for g in gens] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
