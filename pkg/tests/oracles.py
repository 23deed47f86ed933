"""Independent reference computations used by the tests.

Nothing here calls into the library's own algorithms; each function takes a
different route to a value the library also produces.
"""
from fractions import Fraction
from itertools import permutations
from math import factorial


def det(matrix):
    """Exact determinant by Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    sign, out = 1, Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return sign * out


def schur_bialternant(mu, xs):
    """``s_mu(x_1..x_n)`` as a ratio of alternants (zero if ``mu`` is too long)."""
    n = len(xs)
    if len(mu) > n:
        return Fraction(0)
    lam = list(mu) + [0] * (n - len(mu))
    num = det([[x ** (lam[j] + n - 1 - j) for j in range(n)] for x in xs])
    den = det([[x ** (n - 1 - j) for j in range(n)] for x in xs])
    return num / den


def kappa_by_contents(mu):
    return 2 * sum(j - i for i, row in enumerate(mu) for j in range(row))


def partition_count(n):
    """Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        k, j = 0, s
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def class_sizes(n):
    """Conjugacy class sizes of S_n by brute force."""
    sizes = {}
    for p in permutations(range(n)):
        t = cycle_type(p)
        sizes[t] = sizes.get(t, 0) + 1
    return sizes


# S_3 and S_4 character tables, rows by irreducible, columns by cycle type
CHARACTER_TABLES = {
    3: {
        (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
        (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
        (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
    },
    4: {
        (4,): {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
        (3, 1): {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
        (2, 2): {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
        (2, 1, 1): {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
        (1, 1, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -1},
    },
}


def exp_series_1d(coeffs, order):
    """``exp(f)`` for a univariate series with ``f(0) = 0``, by summing powers."""
    out = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for k in range(order + 1):
        for i, c in enumerate(power):
            out[i] += c / factorial(k)
        new = [Fraction(0)] * (order + 1)
        for i, a in enumerate(power):
            for j, b in enumerate(coeffs):
                if a and b and i + j <= order:
                    new[i + j] += a * b
        power = new
    return out


def cg_from_sin(G):
    """Taylor coefficients of ``((t/2)/sin(t/2))^2`` via ``1/sin^2`` expansions of the square of the reciprocal."""
    # (t/2)/sin(t/2) = sum_k (-1)^(k+1) (2^(2k) - 2) B_2k (t/2)^(2k) / (2k)!
    from fractions import Fraction as F

    B = [F(1), F(-1, 2)] + [F(0)] * (2 * G + 1)
    for m in range(2, 2 * G + 1):
        from math import comb

        B[m] = -sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1)
    r = [(-1) ** (k + 1) * (2 ** (2 * k) - 2) * B[2 * k] / factorial(2 * k) / 4**k for k in range(G + 1)]
    return [sum(r[j] * r[k - j] for j in range(k + 1)) for k in range(G + 1)]
