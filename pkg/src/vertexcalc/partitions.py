"""Integer partitions and partition triples.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty partition.  :class:`Partition` is a validating tuple
subclass, and every function here accepts either.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple

from .exact_algebra import DomainError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({encode(self) or '∅'})"


class PartitionTriple(NamedTuple):
    first: tuple
    second: tuple
    third: tuple

    @property
    def weight(self) -> int:
        return sum(map(sum, self))

    @property
    def length(self) -> int:
        return sum(map(len, self))

    def rotate(self) -> "PartitionTriple":
        """``(a, b, c) -> (b, c, a)``."""
        return PartitionTriple(self[1], self[2], self[0])


def triple(a=(), b=(), c=()) -> PartitionTriple:
    return PartitionTriple(Partition(a), Partition(b), Partition(c))


def weight(mu) -> int:
    return sum(mu)


@lru_cache(maxsize=None)
def kappa(mu) -> int:
    return sum(m * (m - 2 * i + 1) for i, m in enumerate(mu, start=1))


@lru_cache(maxsize=None)
def z_factor(sigma) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(sigma).items())


@lru_cache(maxsize=None)
def transpose(mu) -> Partition:
    if not mu:
        return Partition()
    return Partition(sum(1 for p in mu if p > j) for j in range(mu[0]))


def double(sigma) -> Partition:
    return Partition(2 * p for p in sigma)


def contains(outer, inner) -> bool:
    """True iff the diagram of ``inner`` fits inside ``outer``."""
    return len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer))


def _gen(n: int, cap: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _gen(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return []
    return list(_enumerate(n))


def enumerate_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in _enumerate(k)]


def partition_count(n: int) -> int:
    return len(_enumerate(n)) if n >= 0 else 0


@lru_cache(maxsize=None)
def sub_partitions(mu) -> tuple[Partition, ...]:
    """Every partition whose diagram lies inside ``mu``."""
    out = []

    def rec(i, cap, acc):
        out.append(Partition(acc))
        if i == len(mu):
            return
        for p in range(1, min(cap, mu[i]) + 1):
            rec(i + 1, p, acc + [p])

    rec(0, mu[0] if mu else 0, [])
    return tuple(sorted(out, key=lambda p: (sum(p), tuple(-x for x in p))))


def hooks(mu) -> list[int]:
    mt = transpose(mu)
    return [mu[i] - j + mt[j] - i - 1 for i in range(len(mu)) for j in range(mu[i])]


def triples_with_leg_bound(k: int) -> list[PartitionTriple]:
    """All triples with each leg of weight at most ``k``."""
    legs = enumerate_up_to(k)
    return [PartitionTriple(*t) for t in product(legs, repeat=3)]


def triples_up_to_weight(n: int) -> list[PartitionTriple]:
    """All triples of total weight at most ``n``, ordered by weight."""
    out = []
    for total in range(n + 1):
        for a in range(total + 1):
            for b in range(total - a + 1):
                c = total - a - b
                for t in product(_enumerate(a), _enumerate(b), _enumerate(c)):
                    out.append(PartitionTriple(*t))
    return out


def encode(mu) -> str:
    return ",".join(map(str, mu))


def decode(text: str) -> Partition:
    text = text.strip()
    if not text or text in ("∅", "-"):
        return Partition()
    try:
        return Partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse partition {text!r}") from exc


def encode_triple(t) -> str:
    return "|".join(encode(mu) for mu in t)


def decode_triple(text: str) -> PartitionTriple:
    legs = text.split("|")
    if len(legs) != 3:
        raise DomainError(f"a triple needs three legs: {text!r}")
    return PartitionTriple(*(decode(leg) for leg in legs))
