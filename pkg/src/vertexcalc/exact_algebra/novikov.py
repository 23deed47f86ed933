"""Truncated multivariate power series in the Novikov variables ``Q_{i,j} = e^{-t_{i,j}}``.

Truncation is by total degree, optionally refined by a per-edge cap.  Both
kinds of truncation discard a monomial ideal, so products, ``exp`` and
``log`` computed on truncated data are exact up to the truncation.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .laurent import DomainError, QRational

Edge = tuple[int, int]


def edge_label(edge: Edge) -> str:
    return f"{edge[0]},{edge[1]}"


def parse_edge(text: str) -> Edge:
    i, j = text.split(",")
    return int(i), int(j)


def graded_log(layers, mul, admissible, cutoff, one_key, scalar_one):
    """Logarithm in a graded monoid algebra.

    ``layers[k]`` maps keys of weight ``k`` to coefficients, with
    ``layers[0] == {one_key: 1}``.  Uses the Euler-operator recursion
    ``k F_k = k Z_k - sum_j j F_j Z_{k-j}``.
    """
    if layers.get(0, {}) != {one_key: scalar_one}:
        raise DomainError("log needs constant term exactly 1")
    logs: dict[int, dict] = {}
    for k in range(1, cutoff + 1):
        acc = defaultdict(lambda: 0)
        for key, c in layers.get(k, {}).items():
            acc[key] = c * k
        for j in range(1, k):
            fj = logs.get(j)
            zk = layers.get(k - j)
            if not fj or not zk:
                continue
            for e, fe in fj.items():
                fe_j = fe * j
                for f, zf in zk.items():
                    key = mul(e, f)
                    if admissible(key):
                        acc[key] = acc[key] - fe_j * zf
        layer = {}
        for key, c in acc.items():
            c = c * Fraction(1, k)
            if c:
                layer[key] = c
        if layer:
            logs[k] = layer
    return logs


def graded_exp(layers, mul, admissible, cutoff, one_key, scalar_one):
    """Exponential in a graded monoid algebra; ``layers`` must have no weight-0 part."""
    if layers.get(0):
        raise DomainError("exp needs zero constant term")
    out: dict[int, dict] = {0: {one_key: scalar_one}}
    for k in range(1, cutoff + 1):
        acc = defaultdict(lambda: 0)
        for j in range(1, k + 1):
            fj = layers.get(j)
            zk = out.get(k - j)
            if not fj or not zk:
                continue
            for e, fe in fj.items():
                fe_j = fe * j
                for f, zf in zk.items():
                    key = mul(e, f)
                    if admissible(key):
                        acc[key] = acc[key] + fe_j * zf
        layer = {}
        for key, c in acc.items():
            c = c * Fraction(1, k)
            if c:
                layer[key] = c
        if layer:
            out[k] = layer
    return out


class NovikovSeries:
    """Power series in edge variables truncated at total degree ``max_degree``.

    ``caps`` optionally bounds the exponent of individual edges.  Coefficients
    are :class:`QRational`.
    """

    __slots__ = ("edges", "max_degree", "caps", "_terms", "_index")

    def __init__(
        self,
        edges: Iterable[Edge],
        max_degree: int,
        terms: Mapping[tuple[int, ...], object] | None = None,
        caps: Mapping[Edge, int] | Iterable[int] | None = None,
    ):
        self.edges = tuple(tuple(e) for e in edges)
        if len(set(self.edges)) != len(self.edges):
            raise DomainError("duplicate edge labels")
        if max_degree < 0:
            raise DomainError("max_degree must be nonnegative")
        self.max_degree = max_degree
        self._index = {e: i for i, e in enumerate(self.edges)}
        if caps is None:
            self.caps = None
        elif isinstance(caps, Mapping):
            self.caps = tuple(min(int(caps.get(e, max_degree)), max_degree) for e in self.edges)
        else:
            self.caps = tuple(int(c) for c in caps)
            if len(self.caps) != len(self.edges):
                raise DomainError("one cap per edge expected")
        if self.caps is not None and all(c >= max_degree for c in self.caps):
            self.caps = None
        self._terms: dict[tuple[int, ...], QRational] = {}
        if terms:
            n = len(self.edges)
            for exp, c in terms.items():
                exp = tuple(int(a) for a in exp)
                if len(exp) != n or min(exp, default=0) < 0:
                    raise DomainError(f"bad exponent vector {exp}")
                if not self.admissible(exp):
                    continue
                c = QRational(c)
                if c:
                    self._terms[exp] = c

    # -- construction helpers ---------------------------------------------

    def _like(self, terms) -> "NovikovSeries":
        out = object.__new__(NovikovSeries)
        out.edges, out.max_degree, out.caps, out._index = (
            self.edges,
            self.max_degree,
            self.caps,
            self._index,
        )
        out._terms = terms
        return out

    def admissible(self, exp: tuple[int, ...]) -> bool:
        if sum(exp) > self.max_degree:
            return False
        if self.caps is not None:
            return all(a <= c for a, c in zip(exp, self.caps))
        return True

    def zero(self) -> "NovikovSeries":
        return self._like({})

    def one(self) -> "NovikovSeries":
        return self.constant(1)

    def constant(self, c) -> "NovikovSeries":
        c = QRational(c)
        return self._like({(0,) * len(self.edges): c} if c else {})

    def monomial(self, degrees: Mapping[Edge, int] | tuple[int, ...], c=1) -> "NovikovSeries":
        exp = self._exp(degrees)
        c = QRational(c)
        if not c or not self.admissible(exp):
            return self.zero()
        return self._like({exp: c})

    def variable(self, edge: Edge) -> "NovikovSeries":
        return self.monomial({edge: 1})

    def _exp(self, degrees) -> tuple[int, ...]:
        if isinstance(degrees, Mapping):
            exp = [0] * len(self.edges)
            for e, a in degrees.items():
                if a:
                    if tuple(e) not in self._index:
                        raise DomainError(f"unknown edge {e}")
                    exp[self._index[tuple(e)]] = int(a)
            return tuple(exp)
        exp = tuple(int(a) for a in degrees)
        if len(exp) != len(self.edges):
            raise DomainError("exponent vector length does not match edges")
        return exp

    # -- access ---------------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], QRational]:
        return dict(self._terms)

    def items(self):
        """Terms sorted by total degree, then lexicographically by exponent."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def coefficient(self, degrees) -> QRational:
        return self._terms.get(self._exp(degrees), QRational.zero())

    def constant_term(self) -> QRational:
        return self._terms.get((0,) * len(self.edges), QRational.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def support(self):
        return list(self._terms)

    def _check_compatible(self, other: "NovikovSeries"):
        if other.edges != self.edges:
            raise DomainError(f"edge sets differ: {self.edges} vs {other.edges}")

    def _meet(self, other: "NovikovSeries") -> "NovikovSeries":
        """Common truncation of two series on the same edges."""
        self._check_compatible(other)
        if other.max_degree == self.max_degree and other.caps == self.caps:
            return self
        d = min(self.max_degree, other.max_degree)
        caps = {}
        for i, e in enumerate(self.edges):
            a = self.caps[i] if self.caps else d
            b = other.caps[i] if other.caps else d
            caps[e] = min(a, b, d)
        return NovikovSeries(self.edges, d, None, caps)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NovikovSeries):
            return self + self.constant(other)
        base = self._meet(other)
        out = {k: v for k, v in self._terms.items() if base.admissible(k)}
        for k, v in other._terms.items():
            if not base.admissible(k):
                continue
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return base._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NovikovSeries":
        c = QRational(c)
        if not c:
            return self.zero()
        return self._like({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NovikovSeries):
            return self.scale(other)
        base = self._meet(other)
        by_deg = defaultdict(list)
        for k, v in other._terms.items():
            by_deg[sum(k)].append((k, v))
        out: dict[tuple[int, ...], QRational] = {}
        dmax = base.max_degree
        caps = base.caps
        for k1, v1 in self._terms.items():
            d1 = sum(k1)
            for d2 in range(0, dmax - d1 + 1):
                for k2, v2 in by_deg.get(d2, ()):
                    k = tuple(a + b for a, b in zip(k1, k2))
                    if caps is not None and any(a > c for a, c in zip(k, caps)):
                        continue
                    p = v1 * v2
                    s = out.get(k)
                    out[k] = p if s is None else s + p
        return base._like({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a series")
        out = self.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        return self.edges == other.edges and self._terms == other._terms

    def __hash__(self):
        return hash((self.edges, frozenset(self._terms.items())))

    # -- reshaping ----------------------------------------------------------

    def truncate(self, max_degree: int | None = None, caps=None) -> "NovikovSeries":
        d = self.max_degree if max_degree is None else min(max_degree, self.max_degree)
        if caps is None and self.caps is not None:
            caps = dict(zip(self.edges, self.caps))
        return NovikovSeries(self.edges, d, self._terms, caps)

    def embed(self, edges: Iterable[Edge], max_degree: int | None = None, caps=None) -> "NovikovSeries":
        """Re-index on a superset of edges (new edges get exponent 0)."""
        edges = tuple(tuple(e) for e in edges)
        missing = [e for e in self.edges if e not in edges]
        if missing:
            raise DomainError(f"edges {missing} absent from the target index")
        pos = [edges.index(e) for e in self.edges]
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * len(edges)
            for p, a in zip(pos, exp):
                new[p] = a
            terms[tuple(new)] = c
        if caps is None and self.caps is not None:
            caps = {e: c for e, c in zip(self.edges, self.caps)}
        return NovikovSeries(edges, self.max_degree if max_degree is None else max_degree, terms, caps)

    def drop_edges(self, dropped: Iterable[Edge]) -> "NovikovSeries":
        """Send ``t_e -> infinity`` for each dropped edge: delete every monomial containing it."""
        dropped = {tuple(e) for e in dropped}
        keep = [i for i, e in enumerate(self.edges) if e not in dropped]
        edges = [self.edges[i] for i in keep]
        terms = {}
        for exp, c in self._terms.items():
            if any(exp[i] for i, e in enumerate(self.edges) if e in dropped):
                continue
            terms[tuple(exp[i] for i in keep)] = c
        caps = None if self.caps is None else [self.caps[i] for i in keep]
        return NovikovSeries(edges, self.max_degree, terms, caps)

    def adams(self, n: int) -> "NovikovSeries":
        """Substitute ``Q_e -> Q_e^n`` for every edge."""
        terms = {}
        for exp, c in self._terms.items():
            new = tuple(n * a for a in exp)
            if self.admissible(new):
                terms[new] = c
        return self._like(terms)

    def map_coefficients(self, fn: Callable[[QRational], QRational]) -> "NovikovSeries":
        out = {}
        for k, v in self._terms.items():
            w = fn(v)
            if w:
                out[k] = w
        return self._like(out)

    def _layers(self):
        layers: dict[int, dict] = defaultdict(dict)
        for k, v in self._terms.items():
            layers[sum(k)][k] = v
        return layers

    def __repr__(self):
        body = " + ".join(
            f"({c})*{self.monomial_str(k)}" for k, c in self.items()[:8]
        )
        more = "" if len(self._terms) <= 8 else f" + ... ({len(self._terms)} terms)"
        return f"NovikovSeries[{self.max_degree}]({body or '0'}{more})"

    def monomial_str(self, exp) -> str:
        parts = []
        for e, a in zip(self.edges, exp):
            if a == 1:
                parts.append(f"Q{e[0]}{e[1]}")
            elif a:
                parts.append(f"Q{e[0]}{e[1]}^{a}")
        return "*".join(parts) or "1"


def _tuple_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def series_log(z: NovikovSeries) -> NovikovSeries:
    """Truncated logarithm; the constant term must be exactly 1."""
    zero = (0,) * len(z.edges)
    if z.constant_term() != QRational.one():
        raise DomainError("series_log needs constant term exactly 1")
    logs = graded_log(
        z._layers(), _tuple_add, z.admissible, z.max_degree, zero, QRational.one()
    )
    terms = {}
    for layer in logs.values():
        terms.update(layer)
    return z._like(terms)


def series_exp(f: NovikovSeries) -> NovikovSeries:
    """Truncated exponential; the constant term must vanish."""
    zero = (0,) * len(f.edges)
    if f.constant_term():
        raise DomainError("series_exp needs zero constant term")
    out = graded_exp(
        f._layers(), _tuple_add, f.admissible, f.max_degree, zero, QRational.one()
    )
    terms = {}
    for layer in out.values():
        terms.update(layer)
    return f._like(terms)
