"""Partition functions and free energies of chains and trivalent configurations.

Edge ``(i, j)`` is the ``j``-th curve on leg ``i``; ``Q_{i,j} = e^{-t_{i,j}}``.
Every quantity with a closed form is also reachable by gluing vertices, and
the two routes are kept independent so they can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .exact_algebra import DomainError, NovikovSeries, QRational, qbracket, series_exp, series_log
from .partitions import enumerate_up_to, kappa, transpose
from .symfunc import PowerSumAssignment, schur_from_power_sums
from .vertex import MATH, amplitude, connected, framed_table, w_two

CLOSED_VERTEX = "closed_vertex"
CHAIN = "chain"
TRIVALENT = "trivalent"
SHAPES = (CLOSED_VERTEX, CHAIN, TRIVALENT)

_x = QRational.monomial


def _inv_n_bracket_sq(n: int) -> QRational:
    """``1 / (n [n]^2)``."""
    b = qbracket(n)
    return (b * b * n).inverse()


@dataclass(frozen=True)
class ConfigSpec:
    shape: str
    lengths: tuple[int, ...] = (1, 1, 1)
    max_degree: int = 4
    caps: Mapping[tuple[int, int], int] | None = field(default=None, hash=False, compare=False)

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise DomainError(f"unknown shape {self.shape!r}")
        lengths = tuple(int(n) for n in self.lengths)
        if self.shape == CLOSED_VERTEX:
            lengths = (1, 1, 1)
        elif self.shape == CHAIN:
            lengths = lengths[:1]
        elif len(lengths) != 3:
            raise DomainError("a trivalent configuration needs three leg lengths")
        if any(n < 1 for n in lengths):
            raise DomainError("leg lengths must be positive")
        if self.max_degree < 0:
            raise DomainError("max_degree must be nonnegative")
        object.__setattr__(self, "lengths", lengths)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, n in enumerate(self.lengths, start=1) for j in range(1, n + 1)]

    def base(self) -> NovikovSeries:
        return NovikovSeries(self.edges, self.max_degree, None, self.caps)


def trivalent(lengths, max_degree: int, caps=None) -> ConfigSpec:
    return ConfigSpec(TRIVALENT, tuple(lengths), max_degree, caps)


def _path(base: NovikovSeries, leg: int, first: int, last: int, n: int) -> NovikovSeries:
    """``(Q_{leg,first} ... Q_{leg,last})^n``."""
    return base.monomial({(leg, j): n for j in range(first, last + 1)})


def q_n(n: int, base: NovikovSeries) -> NovikovSeries:
    """``Q_1^n + Q_2^n + Q_3^n - (Q_1Q_2)^n - ... + (Q_1Q_2Q_3)^n`` on the edges ``(i,1)``."""
    total = base.zero()
    legs = (1, 2, 3)
    for mask in range(1, 8):
        chosen = [legs[k] for k in range(3) if mask >> k & 1]
        sign = 1 if len(chosen) % 2 else -1
        total = total + base.monomial({(i, 1): n for i in chosen}, sign)
    return total


def u_power_sum(leg: int, n: int, length: int, base: NovikovSeries) -> NovikovSeries:
    """``(1/[n]) (1 + sum_{k=2}^{N} (Q_{leg,2}...Q_{leg,k})^n)``."""
    s = base.one()
    for k in range(2, length + 1):
        s = s + _path(base, leg, 2, k, n)
    return s.scale(qbracket(n).inverse())


def _leg_base(N: int, D: int, leg: int = 1, base: NovikovSeries | None = None) -> NovikovSeries:
    if base is None:
        base = NovikovSeries([(leg, j) for j in range(1, N + 1)], D)
    return base


def f1(N: int, D: int, leg: int = 1, base: NovikovSeries | None = None) -> NovikovSeries:
    """``sum_n -1/(n[n]^2) sum_{k<=N} (Q_{leg,1}...Q_{leg,k})^n``."""
    base = _leg_base(N, D, leg, base)
    total = base.zero()
    for n in range(1, base.max_degree + 1):
        c = -_inv_n_bracket_sq(n)
        for k in range(1, N + 1):
            total = total + _path(base, leg, 1, k, n).scale(c)
    return total


def f2(N: int, D: int, leg: int = 1, base: NovikovSeries | None = None) -> NovikovSeries:
    """``sum_n 1/(n[n]^2) sum_{2<=k1<=k2<=N} (Q_{leg,k1}...Q_{leg,k2})^n``."""
    base = _leg_base(N, D, leg, base)
    total = base.zero()
    for n in range(1, base.max_degree + 1):
        c = _inv_n_bracket_sq(n)
        for k1 in range(2, N + 1):
            for k2 in range(k1, N + 1):
                total = total + _path(base, leg, k1, k2, n).scale(c)
    return total


def f5(N: int, D: int, base: NovikovSeries | None = None) -> NovikovSeries:
    """``sum_n 1/(n[n]^2) sum_{k<=N} Q_{1,1}^n (Q_{2,1}...Q_{2,k})^n``."""
    if base is None:
        base = NovikovSeries([(1, 1)] + [(2, j) for j in range(1, N + 1)], D)
    total = base.zero()
    for n in range(1, base.max_degree + 1):
        c = _inv_n_bracket_sq(n)
        for k in range(1, N + 1):
            total = total + (base.monomial({(1, 1): n}) * _path(base, 2, 1, k, n)).scale(c)
    return total


def z_closed_vertex(D: int) -> NovikovSeries:
    """``exp(sum_n Q_n / (-n[n]^2))``."""
    base = NovikovSeries([(1, 1), (2, 1), (3, 1)], D)
    f = base.zero()
    for n in range(1, D + 1):
        f = f + q_n(n, base).scale(-_inv_n_bracket_sq(n))
    return series_exp(f)


def _leg_factors(base: NovikovSeries, leg: int, length: int, transposed: bool = True):
    """``(-1)^{|mu|} Q_{leg,1}^{|mu|} s_{mu^t}(u^leg)`` for every admissible ``mu``."""
    cap = base.max_degree
    if base.caps is not None:
        cap = min(cap, base.caps[base.edges.index((leg, 1))])
    u = PowerSumAssignment(lambda n: u_power_sum(leg, n, length, base), one=base.one())
    out = {}
    for mu in enumerate_up_to(cap):
        lam = transpose(mu) if transposed else mu
        s = schur_from_power_sums(lam, u) if mu else base.one()
        term = base.monomial({(leg, 1): sum(mu)}, (-1) ** sum(mu)) * s
        if not term.is_zero():
            out[tuple(mu)] = term
    return out


def _chain_exponent(config: ConfigSpec, base: NovikovSeries) -> NovikovSeries:
    total = base.zero()
    for i, n in enumerate(config.lengths, start=1):
        if n >= 2:
            total = total + f2(n, base.max_degree, leg=i, base=base)
    return total


def z_trivalent(config: ConfigSpec, flavor: str = MATH) -> NovikovSeries:
    """Vertex-glued partition function of a trivalent configuration."""
    if config.shape == CHAIN:
        raise DomainError("z_trivalent needs three legs")
    base = config.base()
    legs = [_leg_factors(base, i, n) for i, n in enumerate(config.lengths, start=1)]
    D = base.max_degree
    total = base.zero()
    for m1, s1 in legs[0].items():
        for m2, s2 in legs[1].items():
            w12 = sum(m1) + sum(m2)
            if w12 > D:
                continue
            inner = base.zero()
            for m3, s3 in legs[2].items():
                if w12 + sum(m3) > D:
                    continue
                v = amplitude(flavor, (m1, m2, m3))
                if v:
                    inner = inner + s3.scale(v)
            if not inner.is_zero():
                total = total + s1 * s2 * inner
    return series_exp(_chain_exponent(config, base)) * total


def z_chain_direct(N: int, D: int) -> NovikovSeries:
    """Chain partition function by gluing two-leg amplitudes; edges ``(1,1)..(1,N)``."""
    if N < 2:
        raise DomainError("a chain needs N >= 2")
    base = NovikovSeries([(1, j) for j in range(1, N + 1)], D)
    parts = enumerate_up_to(D)
    terms: dict[tuple, QRational] = {}

    def rec(i, prev, weight, coeff, exps):
        # i indexes the next interior partition mu^i, 2 <= i <= N
        if i == N + 1:
            c = coeff * w_two(prev, ()) * _x(-kappa(prev))
            if c:
                key = (0,) + tuple(exps)
                terms[key] = terms.get(key, QRational.zero()) + c
            return
        for mu in parts:
            w = weight + sum(mu)
            if w > D:
                break
            c = coeff * w_two(prev, mu) * _x(-kappa(prev) - kappa(mu))
            if c:
                rec(i + 1, mu, w, c, exps + [sum(mu)])

    rec(2, (), 0, QRational.one(), [])
    return NovikovSeries(base.edges, D, terms)


def z_two_leg(N1: int, N2: int, D: int) -> NovikovSeries:
    """Two chains joined at a vertex, from the closed two-leg formula."""
    edges = [(1, j) for j in range(1, N1 + 1)] + [(2, j) for j in range(1, N2 + 1)]
    base = NovikovSeries(edges, D)
    expo = f1(N2, D, leg=2, base=base) + f2(N1, D, leg=1, base=base) + f2(N2, D, leg=2, base=base)

    def uhat(n):
        s = base.one()
        for k in range(1, N2 + 1):
            s = s - _path(base, 2, 1, k, n)
        return s.scale(qbracket(n).inverse())

    u1 = PowerSumAssignment(lambda n: u_power_sum(1, n, N1, base), one=base.one())
    u2 = PowerSumAssignment(uhat, one=base.one())
    total = base.zero()
    for mu in enumerate_up_to(D):
        if not mu:
            total = total + base.one()
            continue
        c = _x(-kappa(mu)) * (-1) ** sum(mu)
        term = base.monomial({(1, 1): sum(mu)}, c)
        term = term * schur_from_power_sums(mu, u2) * schur_from_power_sums(mu, u1)
        total = total + term
    return series_exp(expo) * total


# -- free-energy pieces from connected framed amplitudes ---------------------------


def _connected_amplitudes(D: int, leg_bound=None):
    return connected(framed_table(D, (0, 0, 0), MATH, leg_bound))


def _glued(config: ConfigSpec, nonempty: int) -> NovikovSeries:
    base = config.base()
    D = base.max_degree
    bound = None
    if base.caps is not None:
        bound = tuple(min(D, base.caps[base.edges.index((i, 1))]) for i in (1, 2, 3))
    F = _connected_amplitudes(D, bound)
    upow = {}

    def u(i, n):
        if (i, n) not in upow:
            upow[(i, n)] = u_power_sum(i, n, config.lengths[i - 1], base)
        return upow[(i, n)]

    total = base.zero()
    for t, amp in sorted(F.terms.items(), key=lambda kv: (kv[0].weight, kv[0])):
        if sum(1 for m in t if m) != nonempty:
            continue
        term = base.constant(amp)
        for i, mu in enumerate(t, start=1):
            if not mu:
                continue
            term = term * base.monomial({(i, 1): sum(mu)}, (-1) ** len(mu))
            for part in mu:
                term = term * u(i, part)
        total = total + term
    return total


def f_one_leg_glued(config: ConfigSpec) -> NovikovSeries:
    """Glued one-leg contributions; equals ``sum_i f1`` on each leg."""
    return _glued(config, 1)


def f3(config: ConfigSpec) -> NovikovSeries:
    """Connected contributions with exactly two nonempty legs."""
    return _glued(config, 2)


def f4(config: ConfigSpec) -> NovikovSeries:
    """Connected contributions with all three legs nonempty."""
    return _glued(config, 3)


def free_energy_by_pieces(config: ConfigSpec) -> NovikovSeries:
    """``sum_i f1 + sum_i f2 + f3 + f4``."""
    base = config.base()
    total = base.zero()
    for i, n in enumerate(config.lengths, start=1):
        total = total + f1(n, base.max_degree, leg=i, base=base) + f2(n, base.max_degree, leg=i, base=base)
    return total + f3(config) + f4(config)


def free_energy(config: ConfigSpec, flavor: str = MATH) -> NovikovSeries:
    """``log`` of the vertex-glued partition function (or the chain closed form)."""
    if config.shape == CLOSED_VERTEX:
        return series_log(z_closed_vertex(config.max_degree))
    if config.shape == CHAIN:
        N = config.lengths[0]
        return f1(N, config.max_degree) + f2(N, config.max_degree)
    return series_log(z_trivalent(config, flavor))


def partition_function(config: ConfigSpec, flavor: str = MATH) -> NovikovSeries:
    if config.shape == CLOSED_VERTEX:
        return z_closed_vertex(config.max_degree)
    if config.shape == CHAIN:
        return series_exp(free_energy(config))
    return z_trivalent(config, flavor)


def monotone_violations(F: NovikovSeries) -> list[tuple[tuple[int, ...], QRational]]:
    """Nonzero coefficients whose degrees increase along a leg with ``d_{i,1} > 0``."""
    legs: dict[int, list[int]] = {}
    for pos, (i, j) in enumerate(F.edges):
        legs.setdefault(i, []).append(pos)
    bad = []
    for exp, c in F.items():
        for i, pos in legs.items():
            degs = [exp[p] for p in sorted(pos, key=lambda p: F.edges[p][1])]
            if degs[0] > 0 and any(a < b for a, b in zip(degs, degs[1:])):
                bad.append((exp, c))
                break
    return bad
