"""Independent reference computations used only by the tests.

Nothing here calls into the package: determinants by Fraction elimination or
permutation expansion, characteristic polynomials by interpolating
det(M - vI) at integer points.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def det_fraction(rows) -> int:
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    assert det.denominator == 1
    return int(det)


def det_leibniz(rows) -> int:
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def charpoly_interp(rows) -> list[int]:
    """Coefficients (ascending) of det(M - xI) by Lagrange interpolation."""
    n = len(rows)
    xs = list(range(n + 1))
    ys = []
    for v in xs:
        shifted = [[rows[i][j] - (v if i == j else 0) for j in range(n)] for i in range(n)]
        ys.append(det_fraction(shifted))
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n + 1):
            coeffs[k] += ys[i] * basis[k] / denom
    assert all(c.denominator == 1 for c in coeffs)
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def bfs_free_distance(bits) -> list[list[int]]:
    """Floyd-Warshall on the creation-rule adjacency."""
    n = len(bits)
    inf = 10 ** 9
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for j in range(n):
        if bits[j]:
            for i in range(j):
                d[i][j] = d[j][i] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def monic(coeffs: list[int]) -> list[int]:
    return [-c for c in coeffs] if coeffs[-1] == -1 else list(coeffs)


def example1_expansion(a) -> list[int]:
    """Coefficients (ascending) of the explicit four-block expansion of Q."""
    a1, a2, a3, a4 = a
    x3 = 2 * a1 + a2 + 2 * a3 + a4 - 6
    x2 = (8 * a1 + 5 * a2 + 8 * a3 + 5 * a4 - a1 * a2 - a1 * a4 + 2 * a2 * a3
          - a3 * a4 - 13)
    x1 = (10 * a1 + 8 * a2 + 10 * a3 + 8 * a4 - 3 * a1 * a2 - 3 * a1 * a4
          + 6 * a2 * a3 - 3 * a3 * a4 - 2 * a1 * a2 * a3 - a2 * a3 * a4 - 12)
    x0 = (4 * a1 + 4 * a2 + 4 * a3 + 4 * a4 - 2 * a1 * a2 - 2 * a1 * a4
          + 4 * a2 * a3 - 2 * a3 * a4 - 2 * a1 * a2 * a3 - 2 * a2 * a3 * a4
          + a1 * a2 * a3 * a4 - 4)
    return [x0, x1, x2, x3, -1]
