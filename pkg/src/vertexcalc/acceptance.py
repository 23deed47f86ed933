"""End-to-end acceptance checks, shared by the ``selftest`` command and the test suite."""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .exact_algebra import NovikovSeries, QRational, expand_genus, qbracket, series_exp
from .partitions import (
    enumerate_partitions,
    enumerate_up_to,
    encode_triple,
    decode_triple,
    kappa,
    transpose,
    triples_up_to_weight,
    triples_with_leg_bound,
    z_factor,
)
from .symfunc import (
    PowerSumAssignment,
    character,
    lr_by_characters,
    lr_coefficient,
    w_mu,
    w_mu_closed_form,
)
from . import cremona, ftcy, gv, vertex


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.detail}; {self.seconds:.1f}s)"


# -- 1: vertex identity -------------------------------------------------------------


def _compare_chunk(encoded: list[str]) -> list[str]:
    bad = []
    for text in encoded:
        t = decode_triple(text)
        if vertex.w_three_physical(t) != vertex.w_three_math(t):
            bad.append(text)
    return bad


def check_vertex_equality(max_size: int, jobs: int = 1) -> tuple[int, list[str]]:
    """Compare both vertex flavors on every triple with legs of size ``<= max_size``.

    Returns the number of triples checked and the failing ones, in enumeration order.
    """
    encoded = [encode_triple(t) for t in triples_with_leg_bound(max_size)]
    if jobs <= 1:
        return len(encoded), _compare_chunk(encoded)
    size = max(1, len(encoded) // (4 * jobs))
    chunks = [encoded[i : i + size] for i in range(0, len(encoded), size)]
    bad: list[str] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_compare_chunk, chunks):
            bad.extend(part)
    return len(encoded), bad


def criterion_vertex_identity(extended: bool = False, jobs: int = 1):
    k = 4 if extended else 3
    n, bad = check_vertex_equality(k, jobs)
    return not bad, f"{n} triples with legs of size <= {k}, {len(bad)} mismatches"


# -- 2: closed vertex -----------------------------------------------------------


def criterion_closed_vertex():
    D = 4
    closed = ftcy.z_closed_vertex(D)
    ok = []
    for flavor in vertex.FLAVORS:
        z = ftcy.z_trivalent(ftcy.trivalent((1, 1, 1), D), flavor)
        ok.append(z == closed)
    return all(ok), f"D={D}, {len(closed)} coefficients, physical={ok[0]}, math={ok[1]}"


# -- 3: GV table ----------------------------------------------------------------

GV_TABLE_CLASSES = [
    (((1, 1), (1, 1), (1, 1)), -1),
    (((2, 1), (1, 1), (1, 1)), 1),
    (((1, 0), (2, 1), (2, 1)), -2),
    (((1, 1), (2, 1), (2, 1)), -2),
    (((2, 1), (2, 1), (2, 1)), 4),
]


def _leg_degrees(legs) -> dict:
    return {(i, j): a for i, leg in enumerate(legs, start=1) for j, a in enumerate(leg, start=1)}


def table_config(boxed: bool = False) -> ftcy.ConfigSpec:
    """Lengths (2,2,2) at total degree 9, the largest total degree among the table classes.

    ``boxed`` adds the caps ``d_{i,1} <= 2``, ``d_{i,2} <= 1``, which still
    hold every table class and run much faster.
    """
    caps = None
    if boxed:
        caps = {(i, 1): 2 for i in (1, 2, 3)}
        caps.update({(i, 2): 1 for i in (1, 2, 3)})
    return ftcy.trivalent((2, 2, 2), 9, caps)


def criterion_gv_table(max_genus: int = 3, boxed: bool = False):
    F = ftcy.free_energy(table_config(boxed))
    table = gv.gv_extract(F, max_genus)
    problems = []
    for legs, expected in GV_TABLE_CLASSES:
        for r in range(3):
            rotated = legs[r:] + legs[:r]
            got = table.invariants(_leg_degrees(rotated))
            if got.get(0, 0) != expected:
                problems.append(f"n0{rotated}={got.get(0, 0)}")
            if any(got.get(g, 0) for g in range(1, max_genus + 1)):
                problems.append(f"higher genus at {rotated}: {got}")
    detail = "5 classes x 3 rotations" if not problems else "; ".join(problems)
    return not problems, detail


# -- 4: chains ------------------------------------------------------------------


def criterion_chain():
    D = 3
    results = {N: ftcy.z_chain_direct(N, D) == series_exp(ftcy.f2(N, D)) for N in (2, 3, 4)}
    return all(results.values()), ", ".join(f"N={N}:{'ok' if v else 'differs'}" for N, v in results.items())


# -- 5: Cremona vs free energies ----------------------------------------------------


def trivalent_cases():
    """Trivalent vectors with N = 2, entries <= 2, every ``d_{i,1} = 1``."""
    for second in product(range(3), repeat=3):
        yield {**{(i, 1): 1 for i in (1, 2, 3)}, **{(i, 2): second[i - 1] for i in (1, 2, 3)}}


def trivalent_expected(d, G):
    ok = all(1 >= d[(i, 2)] for i in (1, 2, 3))
    return [gv.c_g(g) if ok else Fraction(0) for g in range(G + 1)]


def chain_expected(ds, G):
    k = sum(1 for a in ds if a)
    ok = all(a == ds[0] for a in ds[:k]) and not any(ds[k:])
    return [gv.c_g(g) * Fraction(ds[0]) ** (2 * g - 3) if ok else Fraction(0) for g in range(G + 1)]


def criterion_cremona(G: int = 2):
    problems = []
    checked = 0
    caps = {(i, 1): 1 for i in (1, 2, 3)}
    caps.update({(i, 2): 2 for i in (1, 2, 3)})
    tri = ftcy.trivalent((2, 2, 2), 9, caps)
    F = ftcy.free_energy(tri)
    for d in trivalent_cases():
        outcome = cremona.reduce(cremona.class_of_degrees(tri, d))
        local = cremona.local_invariants(outcome, G)
        want = trivalent_expected(d, G)
        glued = gv.gw_invariants(F, d, G)
        checked += 1
        if not (local == want == glued):
            problems.append(f"trivalent {d}: {outcome} {local} {glued}")
    for N in range(1, 5):
        caps = {(1, j): 3 for j in range(1, N + 1)}
        caps.update({(2, 1): 0, (3, 1): 0})
        cfg = ftcy.trivalent((N, 1, 1), 3 * N, caps)
        F = ftcy.free_energy(cfg)
        chain = ftcy.ConfigSpec(ftcy.CHAIN, (N,), 3 * N)
        for ds in product(range(4), repeat=N):
            if not ds[0]:
                continue
            d = {(1, j): a for j, a in enumerate(ds, start=1)}
            outcome = cremona.reduce(cremona.class_of_degrees(chain, d))
            local = cremona.local_invariants(outcome, G)
            want = chain_expected(ds, G)
            glued = gv.gw_invariants(F, d, G)
            checked += 1
            if not (local == want == glued):
                problems.append(f"chain {ds}: {outcome} {local} {glued}")
    detail = f"{checked} classes" if not problems else "; ".join(problems[:5])
    return not problems, detail


# -- 6: C_g ---------------------------------------------------------------------


def cg_by_series(G: int) -> list[Fraction]:
    """Coefficients of ``((t/2)/sin(t/2))^2`` by series inversion."""
    s = [Fraction((-1) ** k, factorial(2 * k + 1) * 4**k) for k in range(G + 1)]
    inv = [Fraction(0)] * (G + 1)
    for k in range(G + 1):
        acc = Fraction(1 if k == 0 else 0) - sum(s[j] * inv[k - j] for j in range(1, k + 1))
        inv[k] = acc / s[0]
    return [sum(inv[j] * inv[k - j] for j in range(k + 1)) for k in range(G + 1)]


def criterion_cg(G: int = 6):
    series = cg_by_series(G)
    problems = []
    for g in range(G + 1):
        if gv.c_g(g) != series[g]:
            problems.append(f"series g={g}")
    for n in range(1, 5):
        b = qbracket(n)
        N = expand_genus(-(b * b * n).inverse(), G).genus_coefficients(G)
        for g in range(G + 1):
            if N[g] * Fraction(n) ** (3 - 2 * g) != gv.c_g(g):
                problems.append(f"n={n} g={g}")
    return not problems, f"g <= {G}, n <= 4" if not problems else ", ".join(problems)


# -- 7: coherent pairing -------------------------------------------------------


def random_pairing_input(rng: random.Random, D: int):
    base = NovikovSeries([(1, 1), (1, 2)], D)
    pool = [
        QRational(Fraction(rng.randint(-3, 3), rng.randint(1, 3))) + QRational.monomial(rng.randint(-2, 2)) * rng.randint(-2, 2)
        for _ in range(6)
    ]

    def make():
        values = {}
        for n in range(1, D + 1):
            s = base.zero()
            for a in range(D + 1):
                b = n - a if rng.random() < 0.5 else rng.randint(max(0, n - a), D - a)
                if b < 0 or a + b < n or a + b > D:
                    continue
                if rng.random() < 0.6:
                    s = s + base.monomial((a, b), rng.choice(pool))
            values[n] = s
        return PowerSumAssignment(values, one=base.one())

    return make(), make(), base


def criterion_coherent(D: int = 3, samples: int = 10, seed: int = 20240601):
    rng = random.Random(seed)
    ok = 0
    for _ in range(samples):
        t, tb, base = random_pairing_input(rng, D)
        lhs, rhs = vertex.coherent_pairing_check(t, tb, base)
        ok += lhs == rhs
    return ok == samples, f"{ok}/{samples} random inputs at D={D}"


# -- 8: property suites ------------------------------------------------------------


def _orthogonality(n_max=6):
    for n in range(n_max + 1):
        parts = enumerate_partitions(n)
        for a in parts:
            for b in parts:
                s = sum(Fraction(character(a, nu) * character(b, nu), z_factor(nu)) for nu in parts)
                if s != (1 if a == b else 0):
                    return False
    return True


def _lr_properties(n_max=6, char_max=5):
    for n in range(n_max + 1):
        for rho in enumerate_partitions(n):
            for k in range(n + 1):
                for mu in enumerate_partitions(k):
                    for nu in enumerate_partitions(n - k):
                        c = lr_coefficient(mu, nu, rho)
                        if c != lr_coefficient(nu, mu, rho):
                            return False
                        if c != lr_coefficient(transpose(mu), transpose(nu), transpose(rho)):
                            return False
                        if n <= char_max and c != lr_by_characters(mu, nu, rho):
                            return False
    return True


def _w_mu_properties(n_max=8):
    for mu in enumerate_up_to(n_max):
        w = w_mu(mu)
        if w != w_mu_closed_form(mu):
            return False
        if w_mu(transpose(mu)) != QRational.monomial(-kappa(mu)) * w:
            return False
    return True


def _cyclic(n_max=6):
    for t in triples_up_to_weight(n_max):
        r = t.rotate()
        for flavor in vertex.FLAVORS:
            if vertex.amplitude(flavor, t) != vertex.amplitude(flavor, r):
                return False
    return True


def _phi_zero(n_max=4):
    for n in range(n_max + 1):
        for a in enumerate_partitions(n):
            for b in enumerate_partitions(n):
                want = QRational(Fraction(1, z_factor(a))) if a == b else QRational.zero()
                if vertex.phi(a, b, 0) != want:
                    return False
    return True


def _route_equality():
    cfg = ftcy.trivalent((2, 2, 2), 3)
    return ftcy.free_energy(cfg) == ftcy.free_energy_by_pieces(cfg)


MONOTONE_LENGTHS = ((2, 2, 2), (3, 3, 3))


def _monotone(D=4):
    for lengths in MONOTONE_LENGTHS:
        if ftcy.monotone_violations(ftcy.free_energy(ftcy.trivalent(lengths, D))):
            return False
    return True


PROPERTY_SUITES = {
    "character orthogonality": _orthogonality,
    "LR symmetry/transpose/characters": _lr_properties,
    "w_mu closed form and transpose rule": _w_mu_properties,
    "cyclic symmetry of both vertices": _cyclic,
    "Phi(0) = delta/z": _phi_zero,
    "route equality of free energies": _route_equality,
    "monotone vanishing": _monotone,
}


def criterion_properties():
    failed = [name for name, fn in PROPERTY_SUITES.items() if not fn()]
    return not failed, f"{len(PROPERTY_SUITES)} suites" if not failed else "failed: " + ", ".join(failed)


CRITERIA = [
    (1, "vertex identity", criterion_vertex_identity),
    (2, "closed vertex", criterion_closed_vertex),
    (3, "GV table for lengths (2,2,2)", criterion_gv_table),
    (4, "chain equivalence", criterion_chain),
    (5, "Cremona reduction vs free energies", criterion_cremona),
    (6, "C_g consistency", criterion_cg),
    (7, "coherent-state pairing", criterion_coherent),
    (8, "property suites", criterion_properties),
]


def run_criterion(number: int, **kwargs) -> CriterionResult:
    for n, name, fn in CRITERIA:
        if n == number:
            start = time.perf_counter()
            passed, detail = fn(**kwargs)
            return CriterionResult(n, name, bool(passed), detail, time.perf_counter() - start)
    raise KeyError(number)


def run_all(extended: bool = False, jobs: int = 1, echo=None) -> list[CriterionResult]:
    out = []
    for n, _, _ in CRITERIA:
        kwargs = {"extended": extended, "jobs": jobs} if n == 1 else {}
        res = run_criterion(n, **kwargs)
        if echo:
            echo(res.line())
        out.append(res)
    return out
