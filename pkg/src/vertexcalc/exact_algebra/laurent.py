"""Laurent polynomials and rational functions in ``x = q^(1/2)``.

Every amplitude handled by the package is a rational function of ``q^(1/2)``
with rational coefficients.  :class:`QRational` stores such a value in a
canonical reduced form so that equality is a structural comparison.

The polynomial arithmetic (products, exact quotients, gcd) is delegated to
FLINT integer polynomials; everything visible from the outside uses
:class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

from flint import fmpq, fmpz_poly

BigRational = Fraction


class DomainError(ValueError):
    """Raised when an operation is called outside of its domain."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, fmpq):
        return Fraction(int(c.p), int(c.q))
    raise TypeError(f"not an exact rational: {c!r}")


class HalfLaurent:
    """Finite Laurent polynomial ``sum_k c_k x^k`` with rational ``c_k``.

    ``x`` stands for ``q^(1/2)``, so ``x^2 == q``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                c = _as_fraction(c)
                if c:
                    clean[int(k)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, k: int, c=1) -> "HalfLaurent":
        return cls({k: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __add__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a Laurent polynomial")
        out = HalfLaurent({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        return QRational(self) / other

    def __rtruediv__(self, other):
        return other / QRational(self)

    def __eq__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __call__(self, x):
        """Evaluate at ``x = q^(1/2)`` (exact when ``x`` is rational)."""
        x = _as_fraction(x)
        return sum((c * x**k for k, c in self._terms.items()), Fraction(0))

    def evaluate_q(self, q):
        """Evaluate at a value of ``q`` that is a perfect rational square."""
        return self(_rational_sqrt(q))

    def __repr__(self):
        return f"HalfLaurent({format_laurent(self)})"


def _coerce_laurent(obj):
    if isinstance(obj, HalfLaurent):
        return obj
    if isinstance(obj, (int, Fraction, Rational)):
        return HalfLaurent({0: obj})
    return NotImplemented


def _rational_sqrt(q) -> Fraction:
    q = _as_fraction(q)
    from math import isqrt

    p, r = isqrt(q.numerator), isqrt(q.denominator)
    if p * p != q.numerator or r * r != q.denominator:
        raise DomainError(f"q = {q} is not a rational square; evaluate in x instead")
    return Fraction(p, r)


def bracket(n: int) -> HalfLaurent:
    """The quantum integer ``[n] = q^(n/2) - q^(-n/2) = x^n - x^(-n)``."""
    if n <= 0:
        raise DomainError(f"[n] needs n >= 1, got {n}")
    return HalfLaurent({n: 1, -n: -1})


def format_laurent(p: HalfLaurent) -> str:
    """Render as a polynomial in ``q`` with half-integer exponents."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in sorted(p.terms.items(), reverse=True):
        if k == 0:
            mono = ""
        elif k == 2:
            mono = "q"
        elif k % 2 == 0:
            mono = f"q^{k // 2}"
        else:
            mono = f"q^({k}/2)"
        if mono == "":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# rational functions


def _valuation(p: fmpz_poly) -> int:
    for i, c in enumerate(p.coeffs()):
        if c:
            return i
    raise DomainError("valuation of the zero polynomial")


def _laurent_to_poly(p: HalfLaurent) -> tuple[fmpz_poly, int, int]:
    """Write ``p = x^shift * poly / denom`` with ``poly`` integral."""
    terms = p.terms
    lo = min(terms)
    hi = max(terms)
    denom = 1
    for c in terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    coeffs = [0] * (hi - lo + 1)
    for k, c in terms.items():
        coeffs[k - lo] = int(c * denom)
    return fmpz_poly(coeffs), lo, denom


class QRational:
    """Exact rational function of ``x = q^(1/2)`` over the rationals.

    Canonical form: ``x^shift * num(x) / den(x)`` where ``num`` and ``den``
    are coprime integer polynomials with nonzero constant terms, the joint
    content of their coefficients is 1 and ``den`` has a positive leading
    coefficient.  Zero is ``0 / 1``.
    """

    __slots__ = ("_n", "_d", "_s", "_key")

    def __init__(self, num=0, den=None):
        if isinstance(num, QRational) and den is None:
            self._n, self._d, self._s, self._key = num._n, num._d, num._s, num._key
            return
        q = _from_any(num)
        if den is not None:
            q = q / _from_any(den)
        self._n, self._d, self._s, self._key = q._n, q._d, q._s, None

    @classmethod
    def _raw(cls, n: fmpz_poly, d: fmpz_poly, s: int) -> "QRational":
        obj = object.__new__(cls)
        obj._n, obj._d, obj._s, obj._key = n, d, s, None
        return obj

    @classmethod
    def _make(cls, n: fmpz_poly, d: fmpz_poly, s: int) -> "QRational":
        if n.is_zero():
            return _ZERO
        if d.is_zero():
            raise ZeroDivisionError("QRational with zero denominator")
        v = _valuation(n)
        if v:
            n = n.right_shift(v)
            s += v
        w = _valuation(d)
        if w:
            d = d.right_shift(w)
            s -= w
        if d.degree() > 0:
            g = n.gcd(d)
            if g.degree() > 0:
                n = n / g
                d = d / g
        c = gcd(int(n.content()), int(d.content()))
        if c != 1:
            n = n / c
            d = d / c
        if d.leading_coefficient() < 0:
            n = -n
            d = -d
        return cls._raw(n, d, s)

    @classmethod
    def from_fraction(cls, c) -> "QRational":
        c = _as_fraction(c)
        if not c:
            return _ZERO
        return cls._raw(fmpz_poly([c.numerator]), fmpz_poly([c.denominator]), 0)

    @classmethod
    def monomial(cls, k: int, c=1) -> "QRational":
        """``c * x^k``."""
        q = cls.from_fraction(c)
        if q.is_zero():
            return q
        return cls._raw(q._n, q._d, k)

    @staticmethod
    def zero() -> "QRational":
        return _ZERO

    @staticmethod
    def one() -> "QRational":
        return _ONE

    # -- structure ---------------------------------------------------------

    @property
    def num(self) -> HalfLaurent:
        return HalfLaurent({self._s + i: int(c) for i, c in enumerate(self._n.coeffs())})

    @property
    def den(self) -> HalfLaurent:
        return HalfLaurent({i: int(c) for i, c in enumerate(self._d.coeffs())})

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_laurent(self) -> bool:
        return self._d.degree() == 0

    def as_laurent(self) -> HalfLaurent:
        """The value as a Laurent polynomial; raises if the denominator is not constant."""
        if not self.is_laurent():
            raise DomainError("not a Laurent polynomial")
        d = int(self._d.coeffs()[0])
        return HalfLaurent(
            {self._s + i: Fraction(int(c), d) for i, c in enumerate(self._n.coeffs())}
        )

    def as_fraction(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if self._s != 0 or self._n.degree() != 0 or self._d.degree() != 0:
            raise DomainError("not a constant")
        return Fraction(int(self._n.coeffs()[0]), int(self._d.coeffs()[0]))

    def is_constant(self) -> bool:
        return self.is_zero() or (self._s == 0 and self._n.degree() == 0 and self._d.degree() == 0)

    def _canon_key(self):
        if self._key is None:
            self._key = (
                self._s,
                tuple(int(c) for c in self._n.coeffs()),
                tuple(int(c) for c in self._d.coeffs()),
            )
        return self._key

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._n.is_zero():
            return other
        if other._n.is_zero():
            return self
        s = min(self._s, other._s)
        a = self._n.left_shift(self._s - s) if self._s != s else self._n
        b = other._n.left_shift(other._s - s) if other._s != s else other._n
        d1, d2 = self._d, other._d
        if d1 == d2:
            return QRational._make(a + b, d1, s)
        if d1.degree() == 0 and d2.degree() == 0:
            return QRational._make(a * d2 + b * d1, d1 * d2, s)
        g = d1.gcd(d2)
        if g.degree() > 0 or g != 1:
            d2g = d2 / g
            return QRational._make(a * d2g + b * (d1 / g), d1 * d2g, s)
        return QRational._make(a * d2 + b * d1, d1 * d2, s)

    __radd__ = __add__

    def __neg__(self):
        if self._n.is_zero():
            return self
        return QRational._raw(-self._n, self._d, self._s)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._n.is_zero() or other._n.is_zero():
            return _ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if d2.degree() > 0 and n1.degree() > 0:
            g = n1.gcd(d2)
            if g.degree() > 0:
                n1, d2 = n1 / g, d2 / g
        if d1.degree() > 0 and n2.degree() > 0:
            g = n2.gcd(d1)
            if g.degree() > 0:
                n2, d1 = n2 / g, d1 / g
        n = n1 * n2
        d = d1 * d2
        c = gcd(int(n.content()), int(d.content()))
        if c != 1:
            n, d = n / c, d / c
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return QRational._raw(n, d, self._s + other._s)

    __rmul__ = __mul__

    def inverse(self) -> "QRational":
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n, d = self._d, self._n
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return QRational._raw(n, d, -self._s)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self._n.is_zero():
            return _ONE if k == 0 else _ZERO
        return QRational._raw(self._n**k, self._d**k, self._s * k)

    def shift(self, k: int) -> "QRational":
        """Multiply by ``x^k``."""
        if self._n.is_zero() or k == 0:
            return self
        return QRational._raw(self._n, self._d, self._s + k)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._s == other._s and self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash(self._canon_key())

    def __bool__(self):
        return not self._n.is_zero()

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x):
        """Exact value at ``x = q^(1/2)``."""
        x = _as_fraction(x)
        n = self._n(fmpq(x.numerator, x.denominator))
        d = self._d(fmpq(x.numerator, x.denominator))
        if d == 0:
            raise ZeroDivisionError(f"pole at x = {x}")
        return _as_fraction(n) / _as_fraction(d) * x**self._s

    def evaluate_q(self, q):
        return self(_rational_sqrt(q))

    def substitute_x_inverse(self) -> "QRational":
        """The function ``x -> f(1/x)``, i.e. ``q -> 1/q``."""
        if self._n.is_zero():
            return self
        n = fmpz_poly(list(reversed(self._n.coeffs())))
        d = fmpz_poly(list(reversed(self._d.coeffs())))
        return QRational._make(n, d, -self._s - self._n.degree() + self._d.degree())

    def __repr__(self):
        return f"QRational({self})"

    def __str__(self):
        n = format_laurent(self.num)
        if self._d.degree() == 0 and self._d.coeffs()[0] == 1:
            return n
        return f"({n})/({format_laurent(self.den)})"


def _from_any(obj) -> QRational:
    if isinstance(obj, QRational):
        return obj
    if isinstance(obj, HalfLaurent):
        if obj.is_zero():
            return _ZERO
        poly, lo, denom = _laurent_to_poly(obj)
        return QRational._make(poly, fmpz_poly([denom]), lo)
    return QRational.from_fraction(obj)


def _coerce(obj):
    if isinstance(obj, QRational):
        return obj
    if isinstance(obj, (HalfLaurent, int, Fraction, Rational)):
        return _from_any(obj)
    return NotImplemented


_ZERO = QRational._raw(fmpz_poly([]), fmpz_poly([1]), 0)
_ONE = QRational._raw(fmpz_poly([1]), fmpz_poly([1]), 0)


def qbracket(n: int) -> QRational:
    """``[n]`` as a :class:`QRational`."""
    return QRational(bracket(n))
