from fractions import Fraction

import pytest

from vertexcalc.exact_algebra import DomainError, NovikovSeries, QRational, series_log
from vertexcalc.ftcy import f1, f2, free_energy, trivalent, z_closed_vertex
from vertexcalc.gv import GvIntegralityError, c_g, gv_extract, gv_resum, gv_to_json, gw_invariants

import oracles


def test_c_g_values():
    assert [c_g(g) for g in range(3)] == [1, Fraction(1, 12), Fraction(1, 240)]
    assert [c_g(g) for g in range(7)] == oracles.cg_from_sin(6)
    with pytest.raises(DomainError):
        c_g(-1)


@pytest.mark.parametrize("d", [1, 3])
def test_super_rigid_line(d):
    F = f1(1, 3)
    assert gw_invariants(F, (d,), 3) == [c_g(g) * Fraction(d) ** (2 * g - 3) for g in range(4)]


def test_closed_vertex_class():
    F = series_log(z_closed_vertex(3))
    assert gw_invariants(F, (1, 1, 1), 2) == [c_g(g) for g in range(3)]


def test_chain_gv_is_positive_roots():
    for N in (3, 4):
        F = f2(N, 4)
        table = gv_extract(F, 2)
        intervals = {
            tuple(1 if k1 <= j <= k2 else 0 for j in range(1, N + 1))
            for k1 in range(2, N + 1)
            for k2 in range(k1, N + 1)
        }
        assert set(table.classes()) == intervals
        for d in intervals:
            assert table.invariants(d) == {0: 1}


def test_resum_reproduces_free_energy():
    F = free_energy(trivalent((2, 1, 1), 4))
    assert gv_resum(gv_extract(F), F) == F


def test_trivalent_small_table_cyclic():
    F = free_energy(trivalent((2, 2, 2), 6))
    table = gv_extract(F, 2)
    for d in table.classes():
        rot = d[4:] + d[:4]
        assert table.invariants(d) == table.invariants(rot)
    assert table.get(0, {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 1, (3, 1): 1, (3, 2): 1}) == -1


def test_integrality_failure():
    base = NovikovSeries([(1, 1)], 2)
    F = base.monomial((1,), QRational(Fraction(1, 3)))
    with pytest.raises(GvIntegralityError) as err:
        gv_extract(F)
    assert err.value.degree == (1,)


def test_constant_term_rejected():
    base = NovikovSeries([(1, 1)], 2)
    with pytest.raises(DomainError):
        gv_extract(base.one())


def test_json_shape():
    table = gv_extract(f1(2, 2), 1)
    out = gv_to_json(table, 1)
    first = out["classes"][0]
    assert first["d"] == {"1,1": 1}
    assert first["n"] == {"0": -1, "1": 0}
