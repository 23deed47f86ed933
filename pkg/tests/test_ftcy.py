from fractions import Fraction

import pytest

from vertexcalc.exact_algebra import DomainError, NovikovSeries, QRational, qbracket, series_exp, series_log
from vertexcalc.ftcy import (
    CHAIN,
    CLOSED_VERTEX,
    ConfigSpec,
    f1,
    f2,
    f3,
    f4,
    f5,
    f_one_leg_glued,
    free_energy,
    free_energy_by_pieces,
    monotone_violations,
    partition_function,
    q_n,
    trivalent,
    u_power_sum,
    z_chain_direct,
    z_closed_vertex,
    z_trivalent,
    z_two_leg,
)
from vertexcalc.vertex import MATH, PHYSICAL

b1sq_inv = (qbracket(1) * qbracket(1)).inverse()


def test_config_validation():
    with pytest.raises(DomainError):
        ConfigSpec("square")
    with pytest.raises(DomainError):
        trivalent((1, 0, 1), 3)
    with pytest.raises(DomainError):
        ConfigSpec("trivalent", (1, 1), 3)
    assert ConfigSpec(CHAIN, (3,), 2).edges == [(1, 1), (1, 2), (1, 3)]
    assert ConfigSpec(CLOSED_VERTEX, (5, 5, 5), 2).lengths == (1, 1, 1)


def test_q_n_signs():
    base = trivalent((1, 1, 1), 3).base()
    q = q_n(1, base)
    assert q.coefficient({(1, 1): 1}) == QRational.one()
    assert q.coefficient({(1, 1): 1, (2, 1): 1}) == -QRational.one()
    assert q.coefficient({(1, 1): 1, (2, 1): 1, (3, 1): 1}) == QRational.one()


def test_u_power_sum_examples():
    base = trivalent((2, 1, 1), 4).base()
    assert u_power_sum(2, 1, 1, base) == base.constant(qbracket(1).inverse())
    u = u_power_sum(1, 2, 2, base)
    assert u.coefficient({(1, 2): 2}) == qbracket(2).inverse()
    assert u.coefficient({(1, 2): 1}).is_zero()


def test_closed_forms():
    a = f1(2, 3)
    assert a.coefficient((1, 1)) == -b1sq_inv
    assert a.coefficient((1, 2)).is_zero()
    b = f2(3, 4)
    assert b.coefficient((0, 2, 2)) == (qbracket(2) * qbracket(2)).inverse() * Fraction(1, 2)
    c = f5(2, 3)
    assert c.coefficient({(1, 1): 1, (2, 1): 1, (2, 2): 1}) == b1sq_inv


def test_closed_vertex_log_coefficients():
    F = series_log(z_closed_vertex(4))
    assert z_closed_vertex(4).constant_term() == QRational.one()
    assert F.coefficient((1, 0, 0)) == -b1sq_inv
    assert F.coefficient((1, 1, 1)) == -b1sq_inv
    assert F.coefficient((1, 1, 0)) == b1sq_inv


@pytest.mark.parametrize("flavor", [PHYSICAL, MATH])
def test_trivalent_with_unit_legs_is_closed_vertex(flavor):
    assert z_trivalent(trivalent((1, 1, 1), 4), flavor) == z_closed_vertex(4)


def test_flavors_agree_on_longer_legs():
    cfg = trivalent((2, 2, 2), 3)
    assert z_trivalent(cfg, PHYSICAL) == z_trivalent(cfg, MATH)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_chain_routes(N):
    assert z_chain_direct(N, 3) == series_exp(f2(N, 3))


def test_chain_rejects_short():
    with pytest.raises(DomainError):
        z_chain_direct(1, 3)


def test_two_leg_matches_trivalent_without_third_leg():
    z2 = z_two_leg(2, 2, 3)
    z3 = z_trivalent(trivalent((2, 2, 1), 3))
    stripped = NovikovSeries(
        z2.edges, 3, {tuple(k[:4]): v for k, v in z3.items() if k[4] == 0}
    )
    assert z2 == stripped
    assert series_log(z2).coefficient({(1, 1): 1, (2, 1): 1}) == b1sq_inv


def test_route_equality_and_pieces():
    cfg = trivalent((2, 2, 2), 3)
    assert free_energy(cfg) == free_energy_by_pieces(cfg)
    base = cfg.base()
    ones = sum((f1(2, 3, leg=i, base=base) for i in (1, 2, 3)), base.zero())
    assert f_one_leg_glued(cfg) == ones
    assert f4(trivalent((2, 2, 2), 2)).is_zero()
    assert f4(cfg).coefficient({(1, 1): 1, (2, 1): 1, (3, 1): 1}) == -b1sq_inv


def test_f3_matches_f5_on_chain_monomials():
    cfg = trivalent((1, 3, 1), 4)
    g = f3(cfg)
    want = f5(3, 4)
    for k in range(1, 4):
        mono = {(1, 1): 1, **{(2, j): 1 for j in range(1, k + 1)}}
        assert g.coefficient(mono) == want.coefficient(mono)


def test_monotone_vanishing():
    F = free_energy(trivalent((2, 2, 2), 4))
    assert monotone_violations(F) == []
    assert monotone_violations(partition_function(trivalent((2, 2, 2), 4)))


def test_chain_free_energy_is_closed_form():
    cfg = ConfigSpec(CHAIN, (3,), 3)
    assert free_energy(cfg) == f1(3, 3) + f2(3, 3)
