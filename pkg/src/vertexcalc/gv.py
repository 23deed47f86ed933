"""Gromov-Witten coefficients and Gopakumar-Vafa integers from free energies."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from functools import reduce

from .exact_algebra import (
    DomainError,
    HalfLaurent,
    NovikovSeries,
    QRational,
    bernoulli,
    expand_genus,
    qbracket,
)


class GvIntegralityError(ArithmeticError):
    """A remainder that is not an integral polynomial in ``[1]^2``."""

    def __init__(self, degree, message):
        super().__init__(f"GV integrality failure at class {degree}: {message}")
        self.degree = degree


def c_g(g: int) -> Fraction:
    """``|B_{2g} (2g-1)| / (2g)!``."""
    if g < 0:
        raise DomainError("genus must be nonnegative")
    return abs(bernoulli(2 * g) * (2 * g - 1)) / factorial(2 * g)


def gw_invariants(F: NovikovSeries, d, max_genus: int) -> list[Fraction]:
    """``N^0 .. N^G`` of the coefficient of ``Q^d`` in ``F``."""
    return expand_genus(F.coefficient(d), max_genus).genus_coefficients(max_genus)


@dataclass
class GvTable:
    edges: tuple
    entries: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)
    max_genus_found: dict[tuple[int, ...], int] = field(default_factory=dict)
    max_genus: int | None = None

    def classes(self) -> list[tuple[int, ...]]:
        return sorted(self.max_genus_found, key=_class_order)

    def get(self, g: int, d) -> int:
        return self.entries.get((g, self._exp(d)), 0)

    def invariants(self, d) -> dict[int, int]:
        d = self._exp(d)
        return {g: n for (g, e), n in sorted(self.entries.items()) if e == d}

    def _exp(self, d) -> tuple[int, ...]:
        if isinstance(d, dict):
            out = [0] * len(self.edges)
            for e, a in d.items():
                out[self.edges.index(tuple(e))] = a
            return tuple(out)
        return tuple(d)


def _class_order(d):
    return sum(d), tuple(-a for a in d)


def _divisors_above_one(d) -> list[int]:
    g = reduce(gcd, d, 0)
    return [l for l in range(2, g + 1) if g % l == 0]


def _peel(P: HalfLaurent, degree) -> dict[int, int]:
    """Write a symmetric Laurent polynomial in ``x^2`` as ``sum_g n_g y^g``, ``y = x^2 - 2 + x^-2``."""
    y = HalfLaurent({2: 1, 0: -2, -2: 1})
    out: dict[int, int] = {}
    while not P.is_zero():
        top = P.max_exponent()
        if top < 0 or top % 2:
            raise GvIntegralityError(degree, f"remainder {P} is not a polynomial in [1]^2")
        c = P.terms[top]
        if c.denominator != 1:
            raise GvIntegralityError(degree, f"non-integral coefficient {c} in genus {top // 2}")
        out[top // 2] = int(c)
        P = P - y ** (top // 2) * HalfLaurent({0: c})
    return out


def gv_extract(F: NovikovSeries, max_genus: int | None = None) -> GvTable:
    """Strip multicovers class by class in increasing total degree.

    Every genus is extracted; ``max_genus`` only sets the range reported by
    :func:`gv_to_json`.
    """
    if F.constant_term():
        raise DomainError("free energy must have zero constant term")
    b1sq = qbracket(1) * qbracket(1)
    table = GvTable(F.edges, max_genus=max_genus)
    candidates = set(F.support())
    for d in list(candidates):
        for l in range(2, F.max_degree + 1):
            m = tuple(l * a for a in d)
            if F.admissible(m):
                candidates.add(m)
    bpow: dict[tuple[int, int], QRational] = {}

    def bracket_pow(l, k):
        if (l, k) not in bpow:
            bpow[(l, k)] = qbracket(l) ** k if k >= 0 else qbracket(l).inverse() ** (-k)
        return bpow[(l, k)]

    for d in sorted(candidates, key=_class_order):
        R = F.coefficient(d)
        for l in _divisors_above_one(d):
            base = tuple(a // l for a in d)
            for g, n in table.invariants(base).items():
                R = R - bracket_pow(l, 2 * g - 2) * Fraction(n, l)
        if not R:
            continue
        P = R * b1sq
        if not P.is_laurent():
            raise GvIntegralityError(d, "remainder times [1]^2 has a denominator")
        ns = _peel(P.as_laurent(), d)
        for g, n in ns.items():
            if n:
                table.entries[(g, d)] = n
        table.max_genus_found[d] = max(ns) if ns else 0
    return table


def gv_resum(table: GvTable, like: NovikovSeries) -> NovikovSeries:
    """``sum n^g_d (1/l) [l]^{2g-2} Q^{l d}`` truncated like ``like``."""
    total = like.zero()
    for (g, d), n in table.entries.items():
        for l in range(1, like.max_degree + 1):
            m = tuple(l * a for a in d)
            if not like.admissible(m):
                break
            b = qbracket(l)
            c = (b ** (2 * g - 2) if g >= 1 else (b * b).inverse()) * Fraction(n, l)
            total = total + like.monomial(m, c)
    return total


def gv_to_json(table: GvTable, max_genus: int | None = None) -> dict:
    from .exact_algebra.novikov import edge_label

    if max_genus is None:
        max_genus = table.max_genus
    classes = []
    for d in table.classes():
        ns = table.invariants(d)
        top = table.max_genus_found.get(d, 0)
        if max_genus is not None:
            top = max(top, max_genus)
        classes.append(
            {
                "d": {edge_label(e): a for e, a in zip(table.edges, d) if a},
                "n": {str(g): ns.get(g, 0) for g in range(top + 1)},
            }
        )
    return {"classes": classes}
