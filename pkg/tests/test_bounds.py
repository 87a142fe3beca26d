import random

import pytest

from prodlab.lab.bounds import (
    OMEGA,
    BoundFunction,
    IntWeightSeq,
    TailKind,
    WeightTail,
    bound_le,
    decompose_weights,
    ext_le,
    f_omega,
    f_one,
    split_weights,
    weights_within,
)
from prodlab.lab.exceptions import ArgumentError
from prodlab.lab.verdict import Status


def test_omega_is_above_every_natural():
    assert ext_le(10**9, OMEGA)
    assert not ext_le(OMEGA, 10**9)
    assert ext_le(OMEGA, OMEGA)


def test_tail_rules():
    assert BoundFunction.constant(5)(100) == 5
    assert f_omega()(3) is OMEGA
    assert BoundFunction.identity_plus(1)(4) == 5
    assert BoundFunction.identity_plus(-3)(1) == 0
    table = BoundFunction.from_table({2: 7, 5: OMEGA}, default=1)
    assert [table(n) for n in range(6)] == [1, 1, 7, 1, 1, OMEGA]


def test_periodic_tail_uses_absolute_index():
    f = BoundFunction(prefix=(9, 9, 9), tail=TailKind.PERIODIC, period=(0, 1))
    assert [f(n) for n in range(6)] == [9, 9, 9, 1, 0, 1]


def test_prefix_overrides_tail():
    f = BoundFunction(prefix=(OMEGA, 2), value=1)
    assert [f(n) for n in range(4)] == [OMEGA, 2, 1, 1]
    assert f.capped(0, 50) == 50


def test_invalid_bounds_are_rejected():
    with pytest.raises(ArgumentError):
        BoundFunction.constant(-1)
    with pytest.raises(ArgumentError):
        BoundFunction(prefix=(-2,))
    with pytest.raises(ArgumentError):
        f_one()(-1)


def test_boundedness():
    assert f_one().is_bounded
    assert BoundFunction.periodic(1, 4).is_bounded
    assert not f_omega().is_bounded
    assert not BoundFunction.identity_plus(0).is_bounded
    assert not BoundFunction.periodic(OMEGA, 1).is_bounded
    assert BoundFunction.identity_plus(0).max_on(10) == 10


def test_labels():
    assert f_one().label() == "f_1"
    assert BoundFunction.constant(5).label() == "const(5)"
    assert BoundFunction.identity_plus(1).label() == "n+1"


def test_pointwise_comparison_reports_first_violation():
    verdict = bound_le(BoundFunction.identity_plus(0), BoundFunction.constant(5), 20)
    assert verdict.status is Status.FAILS
    assert verdict.witness == {"n": 6, "f": 6, "g": 5}
    assert bound_le(f_one(), f_omega(), 20).status is Status.HOLDS


def test_eventual_comparison():
    f = BoundFunction(prefix=(9, 9, 9), value=1)
    verdict = bound_le(f, BoundFunction.constant(2), 40, eventual=True)
    assert verdict.status is Status.HOLDS
    assert verdict.witness["from"] == 3
    late = bound_le(BoundFunction.identity_plus(0), BoundFunction.constant(5), 40, eventual=True)
    assert late.status is Status.INCONCLUSIVE


def test_weights_decompose_into_signed_parts():
    z = IntWeightSeq.from_list([1, -2, 3])
    plus, minus = decompose_weights(z)
    assert plus.values(4) == [1, 0, 3, 0]
    assert minus.values(4) == [0, -2, 0, 0]
    assert [plus(n) + minus(n) for n in range(4)] == z.values(4)
    assert z.support() == [0, 1, 2]


def test_weight_tails():
    z = IntWeightSeq((5,), WeightTail.PERIODIC, period=(1, -1))
    assert z.values(5) == [5, -1, 1, -1, 1]
    assert not z.finitely_supported
    with pytest.raises(ArgumentError):
        z.support()
    assert z.support(4) == [0, 1, 2, 3]
    assert IntWeightSeq.from_mapping({3: -2}).values(5) == [0, 0, 0, -2, 0]


def test_weights_within_is_monotone_in_the_bound():
    z = IntWeightSeq.from_list([1, -3, 2])
    assert not weights_within(z, BoundFunction.constant(2), 5)
    assert weights_within(z, BoundFunction.constant(3), 5)
    assert weights_within(z, BoundFunction.constant(4), 5)
    assert weights_within(z, f_omega(), 5)


def test_split_weights_sums_back():
    z = IntWeightSeq.from_list([5, -4, 0, 2])
    f = BoundFunction.constant(2)
    pieces = split_weights(z, f, 3, 5)
    assert len(pieces) == 3
    for piece in pieces:
        assert weights_within(piece, f, 5)
    assert [sum(p(n) for p in pieces) for n in range(6)] == z.values(6)


def test_split_weights_rejects_too_few_pieces():
    with pytest.raises(ArgumentError):
        split_weights(IntWeightSeq.from_list([7]), BoundFunction.constant(2), 3, 2)
    with pytest.raises(ArgumentError):
        split_weights(IntWeightSeq.from_list([1]), BoundFunction.constant(2), 0, 2)


def test_admissible_weights_grow_with_the_bound():
    rng = random.Random(5)
    for _ in range(50):
        g = BoundFunction(prefix=tuple(rng.randint(0, 4) for _ in range(12)), value=2)
        f = BoundFunction(prefix=tuple(g(n) + rng.randint(0, 2) for n in range(12)), value=3)
        z = IntWeightSeq.from_list([rng.randint(-3, 3) for _ in range(12)])
        if weights_within(z, g, 15):
            assert weights_within(z, f, 15)
        assert bound_le(g, f, 15).status is Status.HOLDS
