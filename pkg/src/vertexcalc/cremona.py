"""Curve classes on blowups of P^3 at points and a Cremona reduction search.

A class ``d h - sum a_i e_i`` is written ``(d; a_1, ..., a_M)``.  The search
applies Cremona moves, point permutations, and adding or removing
zero-multiplicity points until it reaches a class with a known invariant.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .exact_algebra import DomainError
from .ftcy import CHAIN, CLOSED_VERTEX, ConfigSpec
from .gv import c_g

MAX_POINTS = 16
MAX_PADS = 2


class CremonaRefused(DomainError):
    """The four chosen points leave no nonzero multiplicity elsewhere."""


class CannotCertify(DomainError):
    """The search found no reduction to a known class."""


@dataclass(frozen=True)
class CurveClass:
    d: int
    mults: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(a) for a in self.mults))

    @property
    def M(self) -> int:
        return len(self.mults)

    def is_calabi_yau(self) -> bool:
        return 2 * self.d == sum(self.mults)

    def __str__(self):
        return f"{self.d};" + ",".join(map(str, self.mults))

    @classmethod
    def parse(cls, text: str) -> "CurveClass":
        try:
            d, _, rest = text.partition(";")
            mults = tuple(int(a) for a in rest.split(",") if a.strip())
            return cls(int(d), mults)
        except ValueError as exc:
            raise DomainError(f"cannot parse curve class {text!r}") from exc


@dataclass(frozen=True)
class DivisorClass:
    h_coeff: int
    e_coeffs: tuple[int, ...]


def canonical_divisor(M: int) -> DivisorClass:
    return DivisorClass(-4, (2,) * M)


def pair(D: DivisorClass, C: CurveClass) -> int:
    """Intersection number: ``H.h = 1``, ``E_i.e_i = -1``, mixed products vanish."""
    if len(D.e_coeffs) != len(C.mults):
        raise DomainError("divisor and curve live on blowups at different numbers of points")
    return D.h_coeff * C.d + sum(b * a for b, a in zip(D.e_coeffs, C.mults))


def class_of_degrees(config: ConfigSpec, degrees: Mapping[tuple[int, int], int]) -> CurveClass:
    """Assemble ``sum d_{i,j} [component_{i,j}]``.

    Each leg of length ``N`` owns ``N + 1`` points; its first curve is
    ``h - e_1 - e_2`` and its ``j``-th curve (``j >= 2``) is ``e_j - e_{j+1}``.
    """
    if config.shape == CLOSED_VERTEX:
        legs = (1, 2, 3)
    elif config.shape == CHAIN:
        legs = (1,)
    else:
        legs = (1, 2, 3)
    unknown = set(degrees) - set(config.edges)
    if unknown:
        raise DomainError(f"edges {sorted(unknown)} are not in the configuration")
    h = 0
    mults: list[int] = []
    for i in legs:
        N = config.lengths[i - 1]
        ds = [int(degrees.get((i, j), 0)) for j in range(1, N + 1)]
        if any(a < 0 for a in ds):
            raise DomainError("degree vectors must be effective")
        h += ds[0]
        mults.append(ds[0])
        mults.extend(ds[j - 1] - ds[j] for j in range(1, N))
        mults.append(ds[-1])
    return CurveClass(h, tuple(mults))


def cremona_transform(C: CurveClass, idx: Sequence[int]) -> CurveClass:
    idx = tuple(idx)
    if len(idx) != 4 or len(set(idx)) != 4 or not all(0 <= i < C.M for i in idx):
        raise DomainError(f"need four distinct point indices, got {idx}")
    if not C.is_calabi_yau():
        raise DomainError(f"class {C} violates 2d = sum a_i")
    if not any(a for i, a in enumerate(C.mults) if i not in idx):
        raise CremonaRefused(f"invariance not guaranteed for {C} at {idx}")
    s = sum(C.mults[i] for i in idx)
    mults = list(C.mults)
    for i in idx:
        mults[i] = C.d - (s - C.mults[i])
    return CurveClass(3 * C.d - 2 * s, tuple(mults))


# -- reduction search -----------------------------------------------------------

ZERO = "Zero"
SUPER_RIGID = "SuperRigid"
IRREDUCIBLE = "Irreducible"


@dataclass
class ReductionOutcome:
    tag: str
    degree: int | None = None
    trace: list[dict] = field(default_factory=list)
    engine_level: bool = False

    def __str__(self):
        return f"SuperRigid({self.degree})" if self.tag == SUPER_RIGID else self.tag


def _vanishing_reason(d: int, mults) -> str | None:
    if d > 0 and any(a < 0 for a in mults):
        return "negative multiplicity"
    if d < 0:
        return "non-effective image"
    if d == 0:
        return "zero h-degree"
    return None


def _canonicalize(d: int, mults) -> tuple[tuple[int, ...], list[dict]]:
    """Sort descending then drop zeros, returning the steps taken."""
    steps = []
    order = sorted(range(len(mults)), key=lambda i: (-mults[i], i))
    if order != list(range(len(mults))):
        steps.append({"step": "permute", "order": order})
    sorted_m = tuple(mults[i] for i in order)
    nz = tuple(a for a in sorted_m if a)
    if len(nz) != len(sorted_m):
        steps.append({"step": "drop-zeros", "count": len(sorted_m) - len(nz)})
    return nz, steps


def _terminal(d: int, mults) -> ReductionOutcome | None:
    reason = _vanishing_reason(d, mults)
    if reason:
        return ReductionOutcome(
            ZERO, trace=[{"step": "vanish", "reason": reason}],
            engine_level=reason != "negative multiplicity",
        )
    if len(mults) == 2 and mults[0] == mults[1] == d:
        return ReductionOutcome(SUPER_RIGID, d, [{"step": "base", "class": f"{d};{d},{d}"}])
    return None


def _moves(d: int, mults: tuple[int, ...]):
    """Distinct (pads, indices, image) triples from a canonical state."""
    seen = set()
    for pads in range(MAX_PADS + 1):
        if len(mults) + pads > MAX_POINTS:
            break
        vec = mults + (0,) * pads
        for idx in combinations(range(len(vec)), 4):
            values = tuple(vec[i] for i in idx)
            if (pads, values) in seen:
                continue
            seen.add((pads, values))
            if not any(a for i, a in enumerate(vec) if i not in idx):
                continue
            s = sum(values)
            new = list(vec)
            for i in idx:
                new[i] = d - (s - vec[i])
            yield pads, idx, 3 * d - 2 * s, tuple(new)


_MEMO: dict[tuple, ReductionOutcome] = {}


def _search(d0: int, m0: tuple[int, ...], max_growth: int, max_states: int) -> ReductionOutcome:
    key = (d0, m0, max_growth, max_states)
    if key in _MEMO:
        return _MEMO[key]
    start = (d0, m0)
    parents: dict[tuple, tuple | None] = {start: None}
    heap = [(d0, len(m0), 0, start)]
    counter = 1
    result = None
    while heap and len(parents) <= max_states:
        _, _, _, state = heapq.heappop(heap)
        d, mults = state
        for pads, idx, d2, image in _moves(d, mults):
            if d2 > d0 + max_growth:
                continue
            steps = []
            if pads:
                steps.append({"step": "pad", "count": pads})
            steps.append({"step": "cremona", "indices": list(idx)})
            done = _terminal(d2, image)
            if done is not None:
                result = _finish(parents, state, steps + done.trace, done)
                break
            canon, csteps = _canonicalize(d2, image)
            nxt = (d2, canon)
            if nxt in parents:
                continue
            parents[nxt] = (state, steps + csteps)
            done = _terminal(d2, canon)
            if done is not None:
                result = _finish(parents, nxt, done.trace, done)
                break
            heapq.heappush(heap, (d2, len(canon), counter, nxt))
            counter += 1
        if result is not None:
            break
    if result is None:
        reason = "state budget exhausted" if heap else "no admissible move lowers the class"
        result = ReductionOutcome(IRREDUCIBLE, trace=[{"step": "exhausted", "reason": reason}])
    _MEMO[key] = result
    return result


def _finish(parents, state, tail, done: ReductionOutcome) -> ReductionOutcome:
    steps = list(tail)
    while parents[state] is not None:
        prev, taken = parents[state]
        steps = taken + steps
        state = prev
    return ReductionOutcome(done.tag, done.degree, steps, done.engine_level)


def reduce(C: CurveClass, max_growth: int = 0, max_states: int = 20000) -> ReductionOutcome:
    """Reduce ``C`` to a vanishing class or a super-rigid line class.

    Moves never raise ``d`` above ``C.d + max_growth``.
    """
    if not C.is_calabi_yau():
        raise DomainError(f"class {C} violates 2d = sum a_i")
    done = _terminal(C.d, C.mults)
    if done is not None:
        return done
    canon, steps = _canonicalize(C.d, C.mults)
    done = _terminal(C.d, canon)
    if done is not None:
        return ReductionOutcome(done.tag, done.degree, steps + done.trace, done.engine_level)
    found = _search(C.d, canon, max_growth, max_states)
    return ReductionOutcome(found.tag, found.degree, steps + found.trace, found.engine_level)


def replay(C: CurveClass, trace: list[dict]) -> tuple[str, int | None]:
    """Re-apply a trace step by step; returns the tag and degree it certifies."""
    d, mults = C.d, list(C.mults)
    for step in trace:
        kind = step["step"]
        if kind == "permute":
            order = step["order"]
            if sorted(order) != list(range(len(mults))):
                raise DomainError("bad permutation in trace")
            mults = [mults[i] for i in order]
        elif kind == "drop-zeros":
            k = step["count"]
            if d <= 0 or any(mults[len(mults) - k:]):
                raise DomainError("drop-zeros on nonzero points")
            mults = mults[: len(mults) - k]
        elif kind == "pad":
            mults = mults + [0] * step["count"]
        elif kind == "cremona":
            c = cremona_transform(CurveClass(d, tuple(mults)), step["indices"])
            d, mults = c.d, list(c.mults)
        elif kind == "vanish":
            if _vanishing_reason(d, mults) is None:
                raise DomainError(f"class {d};{mults} does not vanish")
            return ZERO, None
        elif kind == "base":
            if not (len(mults) == 2 and mults[0] == mults[1] == d > 0):
                raise DomainError(f"class {d};{mults} is not a base case")
            return SUPER_RIGID, d
        elif kind == "exhausted":
            return IRREDUCIBLE, None
        else:
            raise DomainError(f"unknown trace step {kind!r}")
    raise DomainError("trace ends without a conclusion")


def local_invariants(outcome: ReductionOutcome, max_genus: int) -> list[Fraction]:
    if outcome.tag == ZERO:
        return [Fraction(0)] * (max_genus + 1)
    if outcome.tag == SUPER_RIGID:
        d = outcome.degree
        return [c_g(g) * Fraction(d) ** (2 * g - 3) for g in range(max_genus + 1)]
    raise CannotCertify("no reduction to a known class was found")


def clear_memo() -> None:
    _MEMO.clear()
