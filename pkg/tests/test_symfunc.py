from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vertexcalc.exact_algebra import DomainError, QRational, qbracket
from vertexcalc.partitions import enumerate_partitions, enumerate_up_to, transpose
from vertexcalc.symfunc import (
    PowerSumAssignment,
    character,
    dimension,
    hook_dimension,
    lr_by_characters,
    lr_coefficient,
    schur_from_power_sums,
    w_mu,
    w_mu_closed_form,
    w_skew,
)

import oracles

small = st.integers(0, 5).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@pytest.mark.parametrize("n", [3, 4])
def test_characters_match_tables(n):
    for lam, row in oracles.CHARACTER_TABLES[n].items():
        for nu, value in row.items():
            assert character(lam, nu) == value


def test_character_examples_and_errors():
    assert character((1, 1, 1), (2, 1)) == -1
    assert character((2, 1), (1, 1, 1)) == 2
    assert all(character((5,), nu) == 1 for nu in enumerate_partitions(5))
    with pytest.raises(DomainError):
        character((2,), (1,))


def test_column_orthogonality_via_brute_force_class_sizes():
    # sum over permutations of chi_lam chi_mu = n! delta
    from math import factorial

    for n in range(1, 6):
        sizes = oracles.class_sizes(n)
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                s = sum(character(lam, c) * character(mu, c) * k for c, k in sizes.items())
                assert s == (factorial(n) if lam == mu else 0)


@given(small)
def test_dimension_hook_formula(lam):
    assert dimension(lam) == hook_dimension(lam)


def test_lr_known_values():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((), (2, 1), (2, 1)) == 1


@given(small, small)
def test_lr_symmetry_transpose_and_characters(mu, nu):
    for rho in enumerate_partitions(sum(mu) + sum(nu)):
        c = lr_coefficient(mu, nu, rho)
        assert c == lr_coefficient(nu, mu, rho)
        assert c == lr_coefficient(transpose(mu), transpose(nu), transpose(rho))
        if sum(rho) <= 5:
            assert c == lr_by_characters(mu, nu, rho)


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_schur_matches_bialternant(mu):
    xs = [Fraction(2), Fraction(-1, 3), Fraction(5, 7), Fraction(3, 2)]
    p = {n: sum(x**n for x in xs) for n in range(1, 5)}
    assert schur_from_power_sums(mu, p) == oracles.schur_bialternant(mu, xs)


def test_schur_two_row_example():
    a, b = Fraction(3), Fraction(5)
    assert schur_from_power_sums((2,), {1: a, 2: b}) == (a * a + b) / 2


def test_schur_missing_power_sum():
    with pytest.raises(DomainError):
        schur_from_power_sums((2,), {1: Fraction(1)})


def test_power_sum_assignment_caches_monomials():
    calls = []

    def p(n):
        calls.append(n)
        return Fraction(n)

    a = PowerSumAssignment(p, one=Fraction(1))
    assert a.monomial((2, 1)) == 2
    a.monomial((2, 1))
    assert calls.count(2) == 1


def test_w_mu_examples():
    assert w_mu(()) == QRational.one()
    assert w_mu((1,)) == qbracket(1).inverse()
    # q = 4 means x = 2
    assert w_mu((2,))(Fraction(2)) == Fraction(16, 45)


@pytest.mark.parametrize("mu", enumerate_up_to(7))
def test_w_mu_hook_form_and_transpose(mu):
    assert w_mu(mu) == w_mu_closed_form(mu)
    assert w_mu(transpose(mu)) == w_mu(mu).substitute_x_inverse() * (-1) ** sum(mu)


def test_w_skew_examples():
    assert w_skew((2, 1), ()) == w_mu((2, 1))
    assert w_skew((2,), (1,)) == w_mu((1,))
    assert w_skew((1,), (2,)).is_zero()
