from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from vertexcalc.cremona import (
    IRREDUCIBLE,
    SUPER_RIGID,
    ZERO,
    CannotCertify,
    CremonaRefused,
    CurveClass,
    DivisorClass,
    ReductionOutcome,
    canonical_divisor,
    class_of_degrees,
    cremona_transform,
    local_invariants,
    pair,
    reduce,
    replay,
)
from vertexcalc.exact_algebra import DomainError
from vertexcalc.ftcy import CHAIN, ConfigSpec, trivalent


def test_intersection_pairing():
    assert pair(DivisorClass(1, (0,)), CurveClass(1, (0,))) == 1
    # mults encode d h - sum a_i e_i, so e_1 itself is a_1 = -1
    assert pair(DivisorClass(0, (1,)), CurveClass(0, (-1,))) == -1
    beta = CurveClass(3, (1,) * 6)
    assert pair(canonical_divisor(6), beta) == 0
    with pytest.raises(DomainError):
        pair(canonical_divisor(2), beta)


def test_class_of_degrees_examples():
    cfg = trivalent((2, 2, 2), 0)
    d = {(i, j): 1 for i in (1, 2, 3) for j in (1, 2)}
    assert class_of_degrees(cfg, d) == CurveClass(3, (1, 0, 1) * 3)
    assert class_of_degrees(ConfigSpec(CHAIN, (3,), 0), {(1, 1): 2, (1, 2): 2}) == CurveClass(2, (2, 0, 2, 0))
    assert class_of_degrees(ConfigSpec(CHAIN, (1,), 0), {(1, 1): 1}) == CurveClass(1, (1, 1))
    with pytest.raises(DomainError):
        class_of_degrees(ConfigSpec(CHAIN, (1,), 0), {(2, 1): 1})


def test_transform_example_and_refusal():
    assert cremona_transform(CurveClass(3, (1,) * 6), (0, 1, 2, 3)) == CurveClass(1, (0, 0, 0, 0, 1, 1))
    with pytest.raises(CremonaRefused):
        cremona_transform(CurveClass(2, (1, 1, 1, 1)), (0, 1, 2, 3))
    with pytest.raises(DomainError):
        cremona_transform(CurveClass(3, (1,) * 5), (0, 1, 2, 3))


@st.composite
def cy_with_indices(draw):
    M = draw(st.integers(5, 9))
    mults = draw(st.lists(st.integers(-3, 6), min_size=M, max_size=M))
    assume(sum(mults) % 2 == 0)
    idx = draw(st.permutations(range(M)))[:4]
    assume(any(a for i, a in enumerate(mults) if i not in idx))
    return CurveClass(sum(mults) // 2, tuple(mults)), tuple(idx)


@given(cy_with_indices())
def test_transform_is_cy_involution(case):
    C, idx = case
    once = cremona_transform(C, idx)
    assert once.is_calabi_yau()
    assert pair(canonical_divisor(once.M), once) == 0
    assert cremona_transform(once, idx) == C


@pytest.mark.parametrize(
    "text,tag,degree",
    [("3;1,1,1,1,1,1", SUPER_RIGID, 1), ("1;-1,3", ZERO, None), ("2;2,1,1", ZERO, None), ("2;2,2", SUPER_RIGID, 2)],
)
def test_reduce_examples(text, tag, degree):
    C = CurveClass.parse(text)
    out = reduce(C)
    assert (out.tag, out.degree) == (tag, degree)
    assert replay(C, out.trace) == (tag, degree)


def test_reduce_rejects_non_cy():
    with pytest.raises(DomainError):
        reduce(CurveClass(2, (1, 1)))


def test_parse_errors():
    with pytest.raises(DomainError):
        CurveClass.parse("x;1")


@given(cy_with_indices())
def test_reduce_traces_replay(case):
    C, _ = case
    out = reduce(C, max_states=2000)
    if out.tag != IRREDUCIBLE:
        assert replay(C, out.trace) == (out.tag, out.degree)


def test_local_invariants():
    assert local_invariants(ReductionOutcome(SUPER_RIGID, 1), 2) == [1, Fraction(1, 12), Fraction(1, 240)]
    assert local_invariants(ReductionOutcome(SUPER_RIGID, 2), 0) == [Fraction(1, 8)]
    assert local_invariants(ReductionOutcome(ZERO), 2) == [0, 0, 0]
    with pytest.raises(CannotCertify):
        local_invariants(ReductionOutcome(IRREDUCIBLE), 1)


def test_replay_rejects_tampered_trace():
    C = CurveClass.parse("3;1,1,1,1,1,1")
    trace = [dict(s) for s in reduce(C).trace]
    trace[-1] = {"step": "base"}
    trace.insert(0, {"step": "pad", "count": 1})
    with pytest.raises(DomainError):
        replay(C, trace)
