import random
from fractions import Fraction

import pytest

from prodlab.lab.concrete import (
    BoundedIntSeqValue,
    CirclePoint,
    FinSupPermutation,
    PadicInt,
    cycle,
    random_element,
    transposition,
)
from prodlab.lab.exceptions import ArgumentError, DescriptorMismatchError, UnsupportedError
from prodlab.lab.groups import (
    GroupSequence,
    bounded_int_seq_group,
    circle_group,
    cyclic_group,
    distance,
    identity,
    int_padic_group,
    inverse,
    norm,
    op,
    padic_group,
    partial_products,
    power,
    product_group,
    segment_product,
    sym_fin_group,
    two_sided_distance,
)

ALL_GROUPS = [
    padic_group(3, 6),
    int_padic_group(5),
    circle_group(),
    cyclic_group(7),
    sym_fin_group(),
    product_group((cyclic_group(3), padic_group(2, 4), circle_group())),
    bounded_int_seq_group(6),
]


@pytest.mark.parametrize("G", ALL_GROUPS, ids=lambda G: G.label())
def test_group_axioms_on_random_elements(G):
    rng = random.Random(f"axioms:{G.label()}")
    e = identity(G)
    for _ in range(1000):
        a, b, c = (random_element(G, rng) for _ in range(3))
        assert op(op(a, b), c) == op(a, op(b, c))
        assert op(a, e) == a == op(e, a)
        assert op(a, inverse(a)) == e
        assert distance(a, a) == 0
        assert norm(a) == distance(a, e)


@pytest.mark.parametrize("G", ALL_GROUPS, ids=lambda G: G.label())
def test_distance_is_left_invariant(G):
    rng = random.Random(f"invariance:{G.label()}")
    for _ in range(1000):
        g, x, y = (random_element(G, rng) for _ in range(3))
        assert distance(op(g, x), op(g, y)) == distance(x, y)


def test_descriptor_flags():
    assert padic_group(3, 10).abelian
    assert padic_group(3, 10).ultrametric
    assert not circle_group().ultrametric
    assert not sym_fin_group().abelian
    assert not int_padic_group(5).complete
    assert not bounded_int_seq_group(4).complete
    assert not product_group((cyclic_group(3), circle_group())).ultrametric
    assert product_group((cyclic_group(3), cyclic_group(5))).linear


def test_descriptors_are_validated():
    with pytest.raises(ArgumentError):
        padic_group(4, 3)
    with pytest.raises(ArgumentError):
        padic_group(3, 0)
    with pytest.raises(UnsupportedError):
        product_group((sym_fin_group(),))


def test_mixing_groups_raises():
    with pytest.raises(DescriptorMismatchError):
        op(PadicInt.from_int(1, 3, 4), PadicInt.from_int(1, 3, 5))


def test_circle_distance_wraps_around():
    a, b = CirclePoint(Fraction(1, 10)), CirclePoint(Fraction(9, 10))
    assert distance(a, b) == Fraction(1, 5)
    assert op(a, b) == identity(circle_group())


def test_padic_distance_uses_valuation():
    assert distance(PadicInt.from_int(1, 3, 5), PadicInt.from_int(4, 3, 5)) == Fraction(1, 3)
    assert norm(PadicInt.from_int(0, 3, 5)) == 0


def test_permutation_composition_acts_right_to_left():
    t01, t12 = transposition(0, 1), transposition(1, 2)
    composed = op(t01, t12)
    assert composed(2) == 0
    assert composed(0) == 1
    assert power(cycle(0, 1, 2), 3) == FinSupPermutation()
    assert power(cycle(0, 1, 2), -1) == cycle(2, 1, 0)


def test_two_sided_distance_sees_inverses():
    seq = GroupSequence(sym_fin_group(), lambda n: transposition(n, n + 1))
    P = partial_products(seq, 12)
    assert distance(P[10], P[11]) == Fraction(1, 2**11)
    assert two_sided_distance(P[10], P[11]) == 1


def test_partial_products_of_transpositions():
    seq = GroupSequence(sym_fin_group(), lambda n: transposition(n, n + 1))
    assert partial_products(seq, 2)[2] == cycle(0, 1, 2, 3)


@pytest.mark.parametrize("G", ALL_GROUPS, ids=lambda G: G.label())
def test_segments_are_quotients_of_partial_products(G):
    rng = random.Random(f"segments:{G.label()}")
    seq = GroupSequence.from_values(G, [random_element(G, rng) for _ in range(10)])
    P = partial_products(seq, 9)
    for l in range(9):
        for m in range(l + 1, 10):
            assert op(inverse(P[l]), P[m]) == segment_product(seq, l, m)


def test_bounded_product_witness_is_at_most_the_sum():
    G = bounded_int_seq_group(6)
    rng = random.Random("bounded-witness")
    for _ in range(200):
        a, b = (random_element(G, rng) for _ in range(2))
        a = BoundedIntSeqValue(G, a.entries, a.sup_norm + rng.randint(0, 3))
        b = BoundedIntSeqValue(G, b.entries, b.sup_norm + rng.randint(0, 3))
        product = op(a, b)
        assert product.sup_norm <= product.bound_witness <= a.bound_witness + b.bound_witness


def test_segment_product_rejects_empty_segment():
    seq = GroupSequence(sym_fin_group(), lambda n: transposition(n, n + 1))
    with pytest.raises(ArgumentError):
        segment_product(seq, 3, 3)
    assert segment_product(seq, -1, 2) == partial_products(seq, 2)[2]


def test_sequence_from_values_pads_with_identity():
    G = cyclic_group(5)
    seq = GroupSequence.from_values(G, [random_element(G, random.Random(0))])
    assert seq[10] == identity(G)


def test_sequence_rejects_terms_from_another_group():
    seq = GroupSequence(padic_group(3, 4), lambda n: PadicInt.from_int(n, 3, 5))
    with pytest.raises(DescriptorMismatchError):
        seq[0]


def test_reordered_sequence_follows_phi():
    G = padic_group(2, 8)
    seq = GroupSequence(G, lambda n: PadicInt.from_int(n, 2, 8))
    reordered = seq.reordered([2, 0, 1])
    assert [reordered[i].residue for i in range(4)] == [2, 0, 1, 3]


def test_weighted_sequence_extends_finite_weights_by_zero():
    G = padic_group(3, 8)
    seq = GroupSequence(G, lambda n: PadicInt.from_int(n + 1, 3, 8))
    weighted = seq.weighted([2, -1])
    assert weighted[0] == power(seq[0], 2)
    assert weighted[1] == inverse(seq[1])
    assert weighted[5] == identity(G)
    assert seq.weighted(lambda n: n)[4] == power(seq[4], 4)
