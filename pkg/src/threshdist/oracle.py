"""Ground-truth characteristic polynomials over the integers.

:func:`charpoly_exact` uses Berkowitz's algorithm, which needs only ring
operations, so every intermediate value is an integer.  Nothing in this module
depends on the closed-form code paths at import time; :func:`verify_graph`
pulls them in lazily to compare against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import IntPolynomial, root_multiplicity
from .seqcore import BlockSequence, IntMatrix, connected_sequences, to_blocks

__all__ = [
    "charpoly_exact",
    "lemma3_matrix",
    "det_m_matrix",
    "VerifyReport",
    "verify_graph",
    "verify_all",
]


def _rows(m: IntMatrix | Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if isinstance(m, IntMatrix):
        return m.rows
    rows = tuple(tuple(r) for r in m)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square with order >= 1")
    return rows


def _berkowitz(a: tuple[tuple[int, ...], ...]) -> list[int]:
    """Coefficients of det(xI - A), highest degree first."""
    n = len(a)
    v = [1, -a[0][0]]
    for r in range(1, n):
        col = [a[i][r] for i in range(r)]
        row = a[r][:r]
        t = [1, -a[r][r]]
        vec = col
        for _ in range(r):
            t.append(-sum(p * q for p, q in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        # multiply by the (r+2) x (r+1) lower-triangular Toeplitz matrix of t
        v = [sum(t[i - j] * v[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return v


def charpoly_exact(m: IntMatrix | Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(M - xI)`` with leading coefficient ``(-1)**order`` (no normalization)."""
    rows = _rows(m)
    n = len(rows)
    high_first = _berkowitz(rows)
    sign = -1 if n % 2 else 1
    return IntPolynomial(sign * c for c in reversed(high_first))


def lemma3_matrix(n: int) -> IntMatrix:
    """Tridiagonal matrix: diagonal (-1, 0, ..., 0), superdiagonal 1, subdiagonal -1."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = -1
    for i in range(n - 1):
        rows[i][i + 1] = 1
        rows[i + 1][i] = -1
    return IntMatrix(tuple(map(tuple, rows)))


def det_m_matrix(n: int) -> int:
    # det(M) is the constant term of det(M - xI)
    return charpoly_exact(lemma3_matrix(n)).coeff(0)


@dataclass
class VerifyReport:
    blocks: tuple[int, ...]
    passed: bool
    first_mismatch_degree: int | None = None
    methods_compared: list[str] = field(default_factory=list)
    multiplicities_ok: bool = True
    message: str = ""

    def to_json(self) -> dict:
        return {
            "blocks": list(self.blocks),
            "pass": self.passed,
            "first_mismatch_degree": self.first_mismatch_degree,
            "methods_compared": list(self.methods_compared),
        }


def _first_mismatch(p: IntPolynomial, q: IntPolynomial) -> int | None:
    for k in range(max(len(p.coeffs), len(q.coeffs))):
        if p.coeff(k) != q.coeff(k):
            return k
    return None


def verify_graph(blocks: BlockSequence | Sequence[int]) -> VerifyReport:
    """Three-way comparison plus multiplicity check; failures go in the report."""
    from .charpoly import METHODS, full_charpoly, multiplicities

    if not isinstance(blocks, BlockSequence):
        blocks = BlockSequence(tuple(blocks))
    report = VerifyReport(blocks.runs, True, methods_compared=list(METHODS))
    try:
        polys = {meth: full_charpoly(blocks, meth).full_poly for meth in METHODS}
    except Exception as exc:  # report, never raise
        report.passed = False
        report.message = f"{type(exc).__name__}: {exc}"
        return report

    ref = polys["oracle"]
    for meth in METHODS:
        k = _first_mismatch(polys[meth], ref)
        if k is not None:
            report.passed = False
            if report.first_mismatch_degree is None or k < report.first_mismatch_degree:
                report.first_mismatch_degree = k
            report.message = f"{meth} differs from oracle at degree {k}"

    mult = multiplicities(blocks)
    got = (root_multiplicity(ref, -2), root_multiplicity(ref, -1))
    if got != (mult.m_minus2, mult.m_minus1):
        report.passed = False
        report.multiplicities_ok = False
        report.message = (
            report.message + "; " if report.message else ""
        ) + f"multiplicities {got} != predicted {(mult.m_minus2, mult.m_minus1)}"
    return report


def _verify_n(n: int) -> list[VerifyReport]:
    return [verify_graph(to_blocks(s)) for s in connected_sequences(n)]


def verify_all(max_vertices: int, workers: int = 1) -> list[VerifyReport]:
    """Reports for every connected threshold graph with 2 <= N <= max_vertices."""
    sizes = range(2, max_vertices + 1)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_verify_n, sizes))
    else:
        chunks = [_verify_n(n) for n in sizes]
    return [r for chunk in chunks for r in chunk]
