from math import factorial

import pytest
from hypothesis import given, strategies as st

from vertexcalc.exact_algebra import DomainError
from vertexcalc.partitions import (
    Partition,
    contains,
    decode,
    decode_triple,
    double,
    encode,
    encode_triple,
    enumerate_partitions,
    enumerate_up_to,
    hooks,
    kappa,
    partition_count,
    sub_partitions,
    transpose,
    triple,
    triples_up_to_weight,
    triples_with_leg_bound,
    z_factor,
)

import oracles

partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


def test_enumeration_order_and_count():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(0) == [()]
    for n in range(13):
        assert partition_count(n) == oracles.partition_count(n) == len(enumerate_partitions(n))


def test_validation():
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, 0))
    with pytest.raises(DomainError):
        decode("1,x")


def test_known_statistics():
    assert kappa((2, 1)) == 0
    assert kappa((2,)) == 2
    assert kappa((1, 1)) == -2
    assert z_factor((2, 2, 1)) == 8
    assert transpose((3, 1)) == (2, 1, 1)
    assert double((2, 1)) == (4, 2)
    assert sorted(hooks((2, 1))) == [1, 1, 3]


@given(partitions)
def test_kappa_matches_contents(mu):
    assert kappa(mu) == oracles.kappa_by_contents(mu)
    assert kappa(mu) % 2 == 0
    assert kappa(transpose(mu)) == -kappa(mu)


@given(partitions)
def test_transpose_involution(mu):
    assert transpose(transpose(mu)) == mu
    assert sum(transpose(mu)) == sum(mu)


def test_z_factor_counts_centralizers():
    for n in range(1, 7):
        for sigma, size in oracles.class_sizes(n).items():
            assert z_factor(sigma) * size == factorial(n)


@given(partitions)
def test_sub_partitions_are_contained(mu):
    subs = sub_partitions(mu)
    assert () in subs and tuple(mu) in subs
    assert all(contains(mu, s) for s in subs)
    assert len(set(subs)) == len(subs)


@given(partitions, partitions, partitions)
def test_encoding_round_trip(a, b, c):
    assert decode(encode(a)) == a
    t = triple(a, b, c)
    assert decode_triple(encode_triple(t)) == t


def test_empty_encodings():
    assert encode(()) == ""
    assert encode_triple(triple((2, 1), (1,), ())) == "2,1|1|"


def test_triple_enumerations():
    assert len(triples_with_leg_bound(3)) == len(enumerate_up_to(3)) ** 3 == 343
    by_weight = triples_up_to_weight(4)
    assert all(t.weight <= 4 for t in by_weight)
    assert len(set(by_weight)) == len(by_weight)
    assert triple((1,), (), (2,)).rotate() == triple((), (2,), (1,))
