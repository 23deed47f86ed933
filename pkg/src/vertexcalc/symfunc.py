"""Symmetric-group characters, Littlewood-Richardson coefficients and Schur
functions evaluated on power sums."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Mapping

from .exact_algebra import DomainError, QRational, qbracket
from .partitions import (
    Partition,
    contains,
    enumerate_partitions,
    hooks,
    kappa,
    sub_partitions,
    z_factor,
)


# -- characters -----------------------------------------------------------------


def _beta(lam) -> tuple[int, ...]:
    n = len(lam)
    return tuple(p + n - 1 - i for i, p in enumerate(lam))


def _from_beta(beta) -> tuple[int, ...]:
    beads = sorted(beta, reverse=True)
    n = len(beads)
    return tuple(p for p in (b - (n - 1 - i) for i, b in enumerate(beads)) if p > 0)


@lru_cache(maxsize=None)
def _rim_hooks(lam, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Partitions obtained by removing a ``k``-rim hook, with the MN sign."""
    beta = _beta(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        c = b - k
        if c < 0 or c in occupied:
            continue
        between = sum(1 for x in beta if c < x < b)
        new = tuple(x if x != b else c for x in beta)
        out.append((_from_beta(new), -1 if between % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _character(lam, nu) -> int:
    if not nu:
        return 1 if not lam else 0
    k, rest = nu[0], nu[1:]
    return sum(sign * _character(smaller, rest) for smaller, sign in _rim_hooks(lam, k))


def character(lam, nu) -> int:
    """``chi_lam(nu)`` by the Murnaghan-Nakayama rule."""
    lam, nu = tuple(lam), tuple(sorted(nu, reverse=True))
    if sum(lam) != sum(nu):
        raise DomainError(f"character needs equal weights: |{lam}| != |{nu}|")
    return _character(lam, nu)


# -- Littlewood-Richardson ---------------------------------------------------------


@lru_cache(maxsize=None)
def _lr(rho, mu, nu) -> int:
    rows = [(mu[i] if i < len(mu) else 0, rho[i]) for i in range(len(rho))]
    cells = [(i, j) for i, (lo, hi) in enumerate(rows) for j in range(hi - 1, lo - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    target = (0,) + tuple(nu)
    total = 0

    def inside(i, j):
        return 0 <= i < len(rows) and rows[i][0] <= j < rows[i][1]

    def rec(pos):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        hi = filling[(i, j + 1)] if inside(i, j + 1) else len(nu)
        lo = filling[(i - 1, j)] + 1 if inside(i - 1, j) else 1
        for v in range(lo, hi + 1):
            if counts[v] >= target[v]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            rec(pos + 1)
            counts[v] -= 1
        filling.pop((i, j), None)

    rec(0)
    return total


def lr_coefficient(mu, nu, rho) -> int:
    """``c^rho_{mu nu}``: the coefficient of ``s_rho`` in ``s_mu s_nu``."""
    mu, nu, rho = tuple(mu), tuple(nu), tuple(rho)
    if sum(mu) + sum(nu) != sum(rho) or not contains(rho, mu) or not contains(rho, nu):
        return 0
    # fewer cells to fill when the larger factor is removed
    if sum(nu) > sum(mu):
        mu, nu = nu, mu
    return _lr(rho, mu, nu)


def lr_by_characters(mu, nu, rho) -> int:
    """Same coefficient through the induced-character inner product."""
    if sum(mu) + sum(nu) != sum(rho):
        return 0
    acc = Fraction(0)
    for a in enumerate_partitions(sum(mu)):
        ca = character(mu, a)
        if not ca:
            continue
        for b in enumerate_partitions(sum(nu)):
            cb = character(nu, b)
            if cb:
                acc += Fraction(ca * cb * character(rho, a + b), z_factor(a) * z_factor(b))
    assert acc.denominator == 1
    return int(acc)


# -- Schur functions on power sums -------------------------------------------------


class PowerSumAssignment:
    """Values ``p_1, p_2, ...`` for Schur evaluation; products ``p_nu`` are memoized.

    ``values`` may be a mapping ``n -> scalar`` or a callable.  Scalars need
    ``+``, ``*`` and multiplication by :class:`QRational`.
    """

    def __init__(self, values: Mapping[int, object] | Callable[[int], object], one=None):
        self._values = values
        self._p: dict[int, object] = {}
        self._mono: dict[tuple, object] = {}
        self._one = QRational.one() if one is None else one

    def p(self, n: int):
        if n not in self._p:
            try:
                v = self._values(n) if callable(self._values) else self._values[n]
            except KeyError:
                raise DomainError(f"power sum p_{n} is not assigned") from None
            self._p[n] = v
        return self._p[n]

    def monomial(self, nu):
        nu = tuple(nu)
        if not nu:
            return self._one
        hit = self._mono.get(nu)
        if hit is None:
            hit = self.monomial(nu[:-1]) * self.p(nu[-1])
            self._mono[nu] = hit
        return hit


def schur_from_power_sums(mu, p: PowerSumAssignment | Mapping | Callable):
    """``s_mu = sum_nu chi_mu(nu) / z_nu * p_nu``."""
    if not isinstance(p, PowerSumAssignment):
        p = PowerSumAssignment(p)
    mu = tuple(mu)
    if not mu:
        return p.monomial(())
    total = None
    for nu in enumerate_partitions(sum(mu)):
        c = character(mu, nu)
        if not c:
            continue
        term = p.monomial(nu) * QRational(Fraction(c, z_factor(nu)))
        total = term if total is None else total + term
    return total


_PRINCIPAL = PowerSumAssignment(lambda n: qbracket(n).inverse())


@lru_cache(maxsize=None)
def _w_mu(mu) -> QRational:
    return schur_from_power_sums(mu, _PRINCIPAL)


def w_mu(mu) -> QRational:
    """Principal specialization ``s_mu(x_i = q^{-i+1/2})``, i.e. ``p_n = 1/[n]``."""
    return _w_mu(tuple(mu))


def w_mu_closed_form(mu) -> QRational:
    """``q^{kappa/4} / prod_cells [hook]``: an independent route to :func:`w_mu`."""
    den = QRational.one()
    for h in hooks(mu):
        den = den * qbracket(h)
    return QRational.monomial(kappa(mu) // 2) / den


@lru_cache(maxsize=None)
def _w_skew(mu, nu) -> QRational:
    if not contains(mu, nu):
        return QRational.zero()
    n = sum(mu) - sum(nu)
    total = QRational.zero()
    for lam in sub_partitions(mu):
        if sum(lam) != n:
            continue
        c = lr_coefficient(nu, lam, mu)
        if c:
            total = total + _w_mu(lam) * c
    return total


def w_skew(mu, nu) -> QRational:
    """``W_{mu/nu} = sum_lam c^mu_{nu lam} W_lam``."""
    return _w_skew(tuple(mu), tuple(nu))


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = enumerate_partitions(n)
    return {(lam, nu): character(lam, nu) for lam in parts for nu in parts}


def dimension(lam) -> int:
    return character(lam, (1,) * sum(lam))


def hook_dimension(lam) -> int:
    from math import factorial

    return factorial(sum(lam)) // prod(hooks(lam))
