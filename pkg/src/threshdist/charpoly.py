"""Distance characteristic polynomial of a connected threshold graph.

For ``G = 0^a1 1^a2 ... 0^a(B-1) 1^aB`` the polynomial factors as

    (x+2)^e2 * (x+1)^e1 * Q(x),   e2 = sum(a_odd - 1),  e1 = sum(a_even - 1)

where ``Q`` is the characteristic polynomial of the B-by-B block quotient
matrix, and also ``Q = -p_B(z, y) + 2y p_(B-1)(z, y)`` evaluated on the negated
block sequence at ``z = x+2``, ``y = x+1``.  Three routes are provided:

* ``formula``  -- the closed expression above,
* ``quotient`` -- Berkowitz on the quotient matrix,
* ``oracle``   -- Berkowitz on the full N-by-N distance matrix.

All results are reported in monic form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactpoly import IntPolynomial, monic_canonical, poly_pow_linear, synthetic_division
from .gamma import p_closed_form, p_tridiag_recurrence
from .oracle import charpoly_exact
from .seqcore import BlockSequence, IntMatrix, SequenceError, distance_matrix, expand_blocks

__all__ = [
    "METHODS",
    "Multiplicities",
    "CharPolyResult",
    "multiplicities",
    "factor_exponents",
    "quotient_matrix",
    "q_formula",
    "full_charpoly",
]

METHODS = ("formula", "quotient", "oracle")

# Signs on the two terms of Q.  Fixed by exhaustive agreement with the oracle on
# every connected graph with N <= 8, with p_n taken as the tridiagonal
# determinant itself.
TERM_SIGNS = (-1, 1)

_Z = IntPolynomial.linear(2)
_Y = IntPolynomial.linear(1)


def _blocks(blocks: BlockSequence | Sequence[int]) -> BlockSequence:
    b = blocks if isinstance(blocks, BlockSequence) else BlockSequence(tuple(blocks))
    if len(b.runs) % 2:
        raise SequenceError(
            f"expected an even number of blocks (connected, N >= 2), got {len(b.runs)}"
        )
    return b


@dataclass(frozen=True)
class Multiplicities:
    m_minus2: int
    m_minus1: int


def factor_exponents(blocks: BlockSequence | Sequence[int]) -> tuple[int, int]:
    """Exponents ``(e2, e1)`` of ``(x+2)`` and ``(x+1)`` split off before Q.

    These omit the extra -1 root present when ``a1 = 1``; that root sits in Q.
    """
    runs = _blocks(blocks).runs
    return sum(a - 1 for a in runs[0::2]), sum(a - 1 for a in runs[1::2])


def multiplicities(blocks: BlockSequence | Sequence[int]) -> Multiplicities:
    """Multiplicities of the distance eigenvalues -2 and -1."""
    b = _blocks(blocks)
    e2, e1 = factor_exponents(b)
    return Multiplicities(e2, e1 + (1 if b.runs[0] == 1 else 0))


def quotient_matrix(blocks: BlockSequence | Sequence[int]) -> IntMatrix:
    """Block quotient of the distance matrix (row r = one vertex of block r).

    Off the diagonal, entry (r, c) is ``a_c`` times the distance between the
    blocks: 1 if the later of the two blocks is a 1-block, else 2.  On the
    diagonal it is ``2(a_r - 1)`` for 0-blocks and ``a_r - 1`` for 1-blocks.
    """
    runs = _blocks(blocks).runs
    n = len(runs)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            if c == r:
                row.append((2 if r % 2 == 0 else 1) * (runs[r] - 1))
            else:
                later = max(r, c)
                row.append((1 if later % 2 else 2) * runs[c])
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def q_formula(blocks: BlockSequence | Sequence[int], via: str = "recurrence") -> IntPolynomial:
    """Non-trivial factor Q(x) from the closed formula (not sign-normalized).

    ``via`` chooses how p_n is evaluated: ``"recurrence"`` (tridiagonal
    determinant) or ``"gamma"`` (expansion through gamma weights).
    """
    runs = _blocks(blocks).runs
    if via == "recurrence":
        p = p_tridiag_recurrence
    elif via == "gamma":
        p = p_closed_form
    else:
        raise ValueError(f"unknown evaluation route {via!r}")
    neg = [-a for a in runs]
    s1, s2 = TERM_SIGNS
    return p(neg, _Z, _Y) * s1 + _Y * p(neg[:-1], _Z, _Y) * (2 * s2)


@dataclass(frozen=True)
class CharPolyResult:
    blocks: BlockSequence
    multiplicities: Multiplicities
    q_poly: IntPolynomial
    full_poly: IntPolynomial
    method: str

    @property
    def n_vertices(self) -> int:
        return self.blocks.n_vertices

    def to_json(self) -> dict:
        return {
            "blocks": list(self.blocks.runs),
            "n_vertices": self.n_vertices,
            "m2": self.multiplicities.m_minus2,
            "m1": self.multiplicities.m_minus1,
            "q_coeffs": self.q_poly.to_json(),
            "full_coeffs": self.full_poly.to_json(),
            "method": self.method,
        }


def _divide_out(p: IntPolynomial, root: int, times: int) -> IntPolynomial:
    for _ in range(times):
        p, rem = synthetic_division(p, root)
        if rem:
            raise ArithmeticError(f"(x - {root}) does not divide the polynomial")
    return p


def full_charpoly(blocks: BlockSequence | Sequence[int], method: str = "formula") -> CharPolyResult:
    b = _blocks(blocks)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    e2, e1 = factor_exponents(b)
    factor = poly_pow_linear(2, e2) * poly_pow_linear(1, e1)
    if method == "oracle":
        full = monic_canonical(charpoly_exact(distance_matrix(expand_blocks(b))))
        q = _divide_out(_divide_out(full, -2, e2), -1, e1)
    else:
        if method == "formula":
            q = q_formula(b)
        else:
            q = charpoly_exact(quotient_matrix(b))
        q = monic_canonical(q)
        full = monic_canonical(factor * q)
    return CharPolyResult(b, multiplicities(b), q, full, method)
