"""Vertex amplitudes.

``w_three_physical`` is the Schur/LR-coefficient form of the three-leg
vertex; ``w_three_math`` is the Hodge-integral form written with characters.
All exponents are powers of ``x = q^{1/2}``, so ``q^{kappa/2} = x^kappa``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .exact_algebra import DomainError, NovikovSeries, QRational, qbracket, series_exp
from .exact_algebra.novikov import graded_exp, graded_log
from .partitions import (
    PartitionTriple,
    contains,
    double,
    enumerate_partitions,
    enumerate_up_to,
    kappa,
    sub_partitions,
    transpose,
    z_factor,
)
from .symfunc import (
    PowerSumAssignment,
    character,
    lr_coefficient,
    schur_from_power_sums,
    w_mu,
    w_skew,
)

PHYSICAL = "physical"
MATH = "math"
FLAVORS = (PHYSICAL, MATH)

_x = QRational.monomial


@lru_cache(maxsize=None)
def _w_two(mu, nu) -> QRational:
    mt, nt = transpose(mu), transpose(nu)
    total = QRational.zero()
    for lam in sub_partitions(mt):
        if contains(nt, lam):
            total = total + w_skew(mt, lam) * w_skew(nt, lam)
    return total * _x(kappa(mu) + kappa(nu))


def w_two(mu, nu) -> QRational:
    """Two-leg amplitude ``W_{mu nu}``."""
    return _w_two(tuple(mu), tuple(nu))


def _lr_pairs(outer) -> list[tuple[tuple, tuple, int]]:
    """All ``(a, b, c^outer_{a b})`` with nonzero coefficient."""
    out = []
    for a in sub_partitions(outer):
        for b in enumerate_partitions(sum(outer) - sum(a)):
            c = lr_coefficient(a, b, outer)
            if c:
                out.append((a, tuple(b), c))
    return out


def _physical(m1, m2, m3) -> QRational:
    m3t = transpose(m3)
    by_rho: dict[tuple, list] = defaultdict(list)
    for rho, r3, c in _lr_pairs(m3t):
        by_rho[rho].append((r3, c))
    m2t = transpose(m2)
    total = QRational.zero()
    for rho, r1, c1 in _lr_pairs(m1):
        for r3, c3 in by_rho.get(rho, ()):
            total = total + w_two(m2t, r1) * w_two(m2, r3) * (c1 * c3)
    return total * _x(kappa(m2) + kappa(m3)) / w_mu(m2)


@lru_cache(maxsize=None)
def pair_sum(eta1, eta3) -> Fraction:
    """``sum_sigma chi_eta1(sigma) chi_eta3(2 sigma) / z_sigma``."""
    eta1, eta3 = tuple(eta1), tuple(eta3)
    if sum(eta3) != 2 * sum(eta1):
        return Fraction(0)
    total = Fraction(0)
    for sigma in enumerate_partitions(sum(eta1)):
        a = character(eta1, sigma)
        if a:
            total += Fraction(a * character(eta3, double(sigma)), z_factor(sigma))
    return total


def _math(m1, m2, m3) -> QRational:
    # (nu1, eta1) with c^{m1}_{eta1^t nu1}, (nu3, eta3) with c^{m3}_{eta3 nu3^t}
    left = []
    for a, b, c in _lr_pairs(m1):
        left.append((b, transpose(a), c))  # nu1 = b, eta1^t = a
    right = []
    for a, b, c in _lr_pairs(m3):
        right.append((transpose(b), a, c))  # eta3 = a, nu3^t = b
    total = QRational.zero()
    for nu1, eta1, c1 in left:
        nu1t = transpose(nu1)
        plus = []
        for nup in enumerate_partitions(sum(nu1) + sum(m2)):
            cp = lr_coefficient(nu1t, m2, nup)
            if cp:
                plus.append((tuple(nup), cp))
        for nu3, eta3, c3 in right:
            ps = pair_sum(eta1, eta3)
            if not ps:
                continue
            for nup, cp in plus:
                term = w_two(nup, nu3) * _x(-2 * kappa(nup) - kappa(nu3) // 2)
                total = total + term * QRational(ps * (c1 * c3 * cp))
    return total * _x(-(kappa(m1) - 2 * kappa(m2) - kappa(m3) // 2))


# -- amplitude memo --------------------------------------------------------------

_MEMO: dict[tuple[str, PartitionTriple], QRational] = {}


def _key(flavor: str, mus) -> tuple[str, PartitionTriple]:
    if flavor not in FLAVORS:
        raise DomainError(f"unknown flavor {flavor!r}")
    if len(mus) != 3:
        raise DomainError("a vertex needs three partitions")
    return flavor, PartitionTriple(*(tuple(m) for m in mus))


def amplitude(flavor: str, mus) -> QRational:
    """Memoized three-leg vertex of the given flavor."""
    key = _key(flavor, mus)
    hit = _MEMO.get(key)
    if hit is None:
        fn = _physical if flavor == PHYSICAL else _math
        hit = fn(*key[1])
        _MEMO[key] = hit
    return hit


def w_three_physical(mus) -> QRational:
    return amplitude(PHYSICAL, mus)


def w_three_math(mus) -> QRational:
    return amplitude(MATH, mus)


def seed_memo(records: Iterable[tuple[str, PartitionTriple, QRational]]) -> int:
    """Preload amplitudes (e.g. from a persistent cache); returns the count loaded."""
    n = 0
    for flavor, t, value in records:
        _MEMO[_key(flavor, t)] = value
        n += 1
    return n


def memo_items() -> list[tuple[str, PartitionTriple, QRational]]:
    return [(f, t, v) for (f, t), v in _MEMO.items()]


def clear_memo() -> None:
    _MEMO.clear()


# -- framing ------------------------------------------------------------------


def phi(nu, mu, a: int) -> QRational:
    """Integer-framing double Hurwitz generating value ``Phi_{nu mu}(a)``."""
    nu, mu = tuple(nu), tuple(mu)
    if sum(nu) != sum(mu):
        return QRational.zero()
    total = QRational.zero()
    scale = Fraction(1, z_factor(nu) * z_factor(mu))
    for eta in enumerate_partitions(sum(mu)):
        c = character(eta, nu) * character(eta, mu)
        if c:
            total = total + _x(kappa(eta) * a) * (scale * c)
    return total


def framed_amplitude(mus, n=(0, 0, 0), flavor: str = MATH) -> QRational:
    """Disconnected framed amplitude ``F~._mu(n)``.

    ``sum_{|nu^i|=|mu^i|} prod_i x^{kappa(nu^i) n_i} chi_{nu^i}(mu^i) / z_{mu^i} * V_nu``.
    """
    mus = tuple(tuple(m) for m in mus)
    legs = []
    for mu, ni in zip(mus, n):
        opts = []
        for nu in enumerate_partitions(sum(mu)):
            c = character(nu, mu)
            if c:
                opts.append((tuple(nu), _x(kappa(nu) * ni) * Fraction(c, z_factor(mu))))
        legs.append(opts)
    total = QRational.zero()
    for choice in product(*legs):
        w = amplitude(flavor, [nu for nu, _ in choice])
        if not w:
            continue
        for _, f in choice:
            w = w * f
        total = total + w
    return total


# -- triple-indexed series --------------------------------------------------------


def _concat(a: PartitionTriple, b: PartitionTriple) -> PartitionTriple:
    return PartitionTriple(
        *(tuple(sorted(x + y, reverse=True)) for x, y in zip(a, b))
    )


_EMPTY = PartitionTriple((), (), ())


class TripleIndexedSeries:
    """Coefficients of ``p_mu = p^1_{mu^1} p^2_{mu^2} p^3_{mu^3}`` up to a total weight."""

    def __init__(self, terms: Mapping, cutoff: int):
        self.cutoff = cutoff
        self.terms: dict[PartitionTriple, QRational] = {}
        for t, v in terms.items():
            t = PartitionTriple(*(tuple(m) for m in t))
            v = QRational(v)
            if v and t.weight <= cutoff:
                self.terms[t] = v

    def __getitem__(self, t) -> QRational:
        return self.terms.get(PartitionTriple(*(tuple(m) for m in t)), QRational.zero())

    def __eq__(self, other):
        return (
            isinstance(other, TripleIndexedSeries)
            and self.cutoff == other.cutoff
            and self.terms == other.terms
        )

    def _layers(self):
        layers: dict[int, dict] = defaultdict(dict)
        for t, v in self.terms.items():
            layers[t.weight][t] = v
        return layers

    def __mul__(self, other: "TripleIndexedSeries") -> "TripleIndexedSeries":
        cutoff = min(self.cutoff, other.cutoff)
        out: dict[PartitionTriple, QRational] = defaultdict(QRational.zero)
        for a, va in self.terms.items():
            for b, vb in other.terms.items():
                if a.weight + b.weight <= cutoff:
                    k = _concat(a, b)
                    out[k] = out[k] + va * vb
        return TripleIndexedSeries(out, cutoff)

    def exp(self) -> "TripleIndexedSeries":
        layers = graded_exp(
            self._layers(), _concat, lambda t: t.weight <= self.cutoff,
            self.cutoff, _EMPTY, QRational.one(),
        )
        return TripleIndexedSeries({k: v for l in layers.values() for k, v in l.items()}, self.cutoff)

    def log(self) -> "TripleIndexedSeries":
        layers = graded_log(
            self._layers(), _concat, lambda t: t.weight <= self.cutoff,
            self.cutoff, _EMPTY, QRational.one(),
        )
        return TripleIndexedSeries({k: v for l in layers.values() for k, v in l.items()}, self.cutoff)


def connected(table: TripleIndexedSeries) -> TripleIndexedSeries:
    """Connected amplitudes: the logarithm in the triple-partition monoid algebra."""
    if table[_EMPTY] != QRational.one():
        raise DomainError("the empty-triple entry of a disconnected table must be 1")
    return table.log()


def framed_table(cutoff: int, n=(0, 0, 0), flavor: str = MATH, leg_bound=None) -> TripleIndexedSeries:
    """Disconnected framed amplitudes for all triples of total weight <= ``cutoff``."""
    from .partitions import triples_up_to_weight

    terms = {}
    for t in triples_up_to_weight(cutoff):
        if leg_bound is not None and any(sum(m) > b for m, b in zip(t, leg_bound)):
            continue
        terms[t] = framed_amplitude(t, n, flavor)
    return TripleIndexedSeries(terms, cutoff)


# -- coherent-state pairing --------------------------------------------------------


def coherent_pairing_check(t: PowerSumAssignment, tbar: PowerSumAssignment, base: NovikovSeries):
    """Both sides of the two-leg generating identity, truncated like ``base``.

    ``t`` and ``tbar`` assign Novikov series to power sums; each ``t_n`` must
    have Novikov weight at least ``n`` so that partitions of weight above the
    truncation degree do not contribute.
    """
    D = base.max_degree
    parts = enumerate_up_to(D)
    s_t = {mu: schur_from_power_sums(mu, t) for mu in parts}
    s_tb = {nu: schur_from_power_sums(nu, tbar) for nu in parts}
    one = base.one()
    lhs = base.zero()
    for mu in parts:
        sm = s_t[mu] if mu else one
        if sm.is_zero():
            continue
        for nu in parts:
            if sum(mu) + sum(nu) > D:
                continue
            sn = s_tb[nu] if nu else one
            if sn.is_zero():
                continue
            c = w_two(mu, nu) * _x(-kappa(mu) - kappa(nu))
            lhs = lhs + (sm * sn).scale(c)
    f = base.zero()
    for n in range(1, D + 1):
        tn, tbn = t.p(n), tbar.p(n)
        sign = 1 if n % 2 else -1
        f = f + (tn + tbn).scale(qbracket(n).inverse() * Fraction(sign, n))
        f = f + (tn * tbn).scale(Fraction(1, n))
    return lhs, series_exp(f)
