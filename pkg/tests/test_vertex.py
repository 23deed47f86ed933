from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vertexcalc.exact_algebra import DomainError, HalfLaurent, NovikovSeries, QRational, qbracket
from vertexcalc.partitions import enumerate_partitions, enumerate_up_to, triple, triples_up_to_weight
from vertexcalc.symfunc import PowerSumAssignment, w_mu
from vertexcalc.vertex import (
    MATH,
    PHYSICAL,
    TripleIndexedSeries,
    amplitude,
    clear_memo,
    coherent_pairing_check,
    connected,
    framed_amplitude,
    framed_table,
    memo_items,
    pair_sum,
    phi,
    seed_memo,
    w_three_math,
    w_three_physical,
    w_two,
)

b1 = qbracket(1)
one = QRational.one()


def test_w_two_examples():
    assert w_two((), ()) == one
    assert w_two((1,), ()) == b1.inverse()
    want = QRational(HalfLaurent({2: 1, 0: -1, -2: 1})) / (b1 * b1)
    assert w_two((1,), (1,)) == want
    assert w_two((1,), (1,)) == w_mu((1,)) ** 2 + 1


@pytest.mark.parametrize("flavor", [PHYSICAL, MATH])
def test_three_leg_examples(flavor):
    assert amplitude(flavor, triple()) == one
    assert amplitude(flavor, triple((1,), (1,))) == w_two((1,), (1,))


@pytest.mark.parametrize("mu", enumerate_up_to(5))
def test_one_leg_collapse(mu):
    assert w_three_physical(triple(mu)) == w_three_math(triple(mu)) == w_mu(mu)


def test_pair_sum_examples():
    assert pair_sum((), ()) == 1
    assert pair_sum((1,), (2,)) == 1
    assert pair_sum((1,), (1, 1)) == -1
    assert pair_sum((1,), (1,)) == 0


def test_phi_examples():
    assert phi((2,), (2,), 0) == QRational(Fraction(1, 2))
    assert phi((2,), (1, 1), 0).is_zero()
    for a in range(-2, 3):
        assert phi((1,), (1,), a) == one
    assert phi((2,), (1, 1), 1) == QRational(HalfLaurent({2: Fraction(1, 4), -2: Fraction(-1, 4)}))


@given(st.integers(-2, 2), st.integers(0, 3).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_partitions(n)), st.sampled_from(enumerate_partitions(n)))))
def test_phi_is_a_flow(a, pair):
    # Phi(a) Phi(b) = Phi(a + b) in the sense of composing via z-weighted sums
    nu, mu = pair
    n = sum(nu)
    from vertexcalc.partitions import z_factor

    lhs = sum((phi(nu, eta, a) * phi(eta, mu, 1) * z_factor(eta) for eta in enumerate_partitions(n)),
              QRational.zero())
    assert lhs == phi(nu, mu, a + 1)


def test_unknown_flavor_rejected():
    with pytest.raises(DomainError):
        amplitude("other", triple())


def test_framed_amplitude_examples():
    assert framed_amplitude(triple(), (1, 2, 3)) == one
    assert framed_amplitude(triple((1,)), (0, 5, -2)) == b1.inverse()
    t = triple((1,), (1,), (1,))
    assert framed_amplitude(t) == w_three_math(t)


def test_connected_examples():
    F = connected(framed_table(3))
    assert F[triple((1,))] == b1.inverse()
    assert F[triple((1,), (1,))] == one
    assert F[triple((1,), (1,), (1,))] == b1


def test_connected_requires_unit():
    with pytest.raises(DomainError):
        connected(TripleIndexedSeries({triple(): QRational(2)}, 2))


def test_triple_series_exp_log_round_trip():
    table = framed_table(3)
    assert connected(table).exp() == table


def test_memo_seed_and_items():
    clear_memo()
    t = triple((1,), (), ())
    seed_memo([(MATH, t, QRational(7))])
    assert amplitude(MATH, t) == QRational(7)
    assert (MATH, t, QRational(7)) in memo_items()
    clear_memo()
    assert amplitude(MATH, t) == b1.inverse()


def _novikov_pairing_inputs(a, b, D=2):
    base = NovikovSeries([(1, 1), (2, 1)], D)
    t = PowerSumAssignment(lambda n: base.monomial((n, 0), a), one=base.one())
    tb = PowerSumAssignment(lambda n: base.monomial((0, n), b), one=base.one())
    return t, tb, base


def test_coherent_pairing_trivial():
    base = NovikovSeries([(1, 1)], 2)
    zero = PowerSumAssignment(lambda n: base.zero(), one=base.one())
    lhs, rhs = coherent_pairing_check(zero, zero, base)
    assert lhs == rhs == base.one()


def test_coherent_pairing_one_leg():
    base = NovikovSeries([(1, 1)], 2)
    t = PowerSumAssignment(lambda n: base.monomial((n,), qbracket(n).inverse() * (-1) ** (n + 1)), one=base.one())
    zero = PowerSumAssignment(lambda n: base.zero(), one=base.one())
    lhs, rhs = coherent_pairing_check(t, zero, base)
    assert lhs == rhs


@pytest.mark.parametrize("a,b", [(Fraction(2), Fraction(-3)), (Fraction(1, 2), Fraction(5, 7))])
def test_coherent_pairing_generic(a, b):
    lhs, rhs = coherent_pairing_check(*_novikov_pairing_inputs(a, b))
    assert lhs == rhs


@pytest.mark.parametrize("t", triples_up_to_weight(4))
def test_cyclic_symmetry(t):
    for f in (w_three_physical, w_three_math):
        assert f(t) == f(t.rotate())
