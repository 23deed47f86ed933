"""Genus expansion of q-rational free-energy coefficients.

A coefficient ``A(q)`` of a free energy is expanded with ``q = e^u`` for a
real formal variable ``u``.  The physical variable is ``lambda`` with
``q = e^{i lambda}``, so ``u^(2g-2) = (-1)^(g-1) lambda^(2g-2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .laurent import DomainError, QRational


class NotConnectedCoefficient(DomainError):
    """The u-expansion has a pole of order larger than 2."""


class InconsistencyError(ArithmeticError):
    """An expansion that must be even in ``u`` has an odd term."""


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``, via ``sum_k C(m+1,k) B_k = 0``."""
    if n < 0:
        raise DomainError("Bernoulli numbers are indexed by n >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    total = sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0))
    return -total / (n + 1)


@dataclass(frozen=True)
class GenusSeries:
    """Truncated Laurent series ``sum_k c_k u^k`` for ``min_order <= k <= max_order``."""

    min_order: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.min_order < -2:
            raise NotConnectedCoefficient(
                f"pole of order {-self.min_order} in u: not a connected free-energy coefficient"
            )

    @property
    def max_order(self) -> int:
        return self.min_order + len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        i = k - self.min_order
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        if k > self.max_order:
            raise IndexError(f"u^{k} beyond the truncation order {self.max_order}")
        return Fraction(0)

    def genus_coefficients(self, max_genus: int | None = None) -> list[Fraction]:
        """``N^g = (-1)^(g-1) [u^(2g-2)]`` for ``g = 0..max_genus``."""
        if max_genus is None:
            max_genus = (self.max_order + 2) // 2
        return [(-1) ** ((g - 1) % 2) * self.coefficient(2 * g - 2) for g in range(max_genus + 1)]


def _u_series(p, order: int) -> list[Fraction]:
    """Taylor coefficients of ``sum_k c_k e^{k u / 2}`` up to ``u^order``."""
    out = []
    terms = [(Fraction(k, 2), c) for k, c in p.terms.items()]
    for m in range(order + 1):
        f = factorial(m)
        out.append(sum((c * a**m for a, c in terms), Fraction(0)) / f)
    return out


def _order(series: list[Fraction]) -> int | None:
    for i, c in enumerate(series):
        if c:
            return i
    return None


def expand_genus(v, max_genus: int) -> GenusSeries:
    """Expand ``v(q)`` with ``q = e^u`` through ``u^(2*max_genus)``.

    The result always starts at ``u^-2``.  Raises :class:`NotConnectedCoefficient`
    for poles of order above 2 and :class:`InconsistencyError` when an odd
    power of ``u`` survives.
    """
    v = QRational(v)
    if max_genus < 0:
        raise DomainError("max_genus must be nonnegative")
    top = 2 * max_genus
    if v.is_zero():
        return GenusSeries(-2, tuple(Fraction(0) for _ in range(top + 3)))
    num, den = v.num, v.den
    # the order of vanishing at u = 0 is below the number of terms (Vandermonde)
    a = _order(_u_series(num, len(num.terms)))
    b = _order(_u_series(den, len(den.terms)))
    if a is None or b is None:
        raise InconsistencyError("Laurent polynomial with vanishing u-expansion")
    lead = a - b
    if lead < -2:
        raise NotConnectedCoefficient(
            f"pole of order {-lead} in u: not a connected free-energy coefficient"
        )
    need = top - lead
    if need < 0:
        return GenusSeries(-2, tuple(Fraction(0) for _ in range(top + 3)))
    nser = _u_series(num, a + need)
    dser = _u_series(den, b + need)
    n = nser[a : a + need + 1]
    d = dser[b : b + need + 1]
    quot: list[Fraction] = []
    for k in range(need + 1):
        acc = n[k] - sum((quot[j] * d[k - j] for j in range(k)), Fraction(0))
        quot.append(acc / d[0])
    coeffs = [Fraction(0)] * (top + 3)
    for k, c in enumerate(quot):
        order = lead + k
        if order <= top:
            coeffs[order + 2] = c
    for order in range(-2, top + 1):
        if order % 2 and coeffs[order + 2]:
            raise InconsistencyError(f"odd power u^{order} in a genus expansion")
    return GenusSeries(-2, tuple(coeffs))
