"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Every characteristic polynomial in the package is an :class:`IntPolynomial`.
Coefficients are stored degree-ascending and trailing zeros are stripped, so
two polynomials are equal exactly when their coefficient tuples are equal.
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence, Union

__all__ = [
    "IntPolynomial",
    "X",
    "ONE",
    "ZERO",
    "poly_add",
    "poly_mul",
    "poly_pow_linear",
    "poly_eval_int",
    "monic_canonical",
    "synthetic_division",
    "root_multiplicity",
]

Scalar = Union[int, "IntPolynomial"]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable polynomial ``sum(coeffs[i] * x**i)`` over the integers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for v in c:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
        self._coeffs = c

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def linear(cls, c: int) -> IntPolynomial:
        """The polynomial ``x + c``."""
        return cls((c, 1))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def coeff(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other: Scalar) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial((other,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> IntPolynomial:
        q = self._lift(other)
        if q is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, q._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-v for v in self._coeffs)

    def __sub__(self, other: Scalar) -> IntPolynomial:
        q = self._lift(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: Scalar) -> IntPolynomial:
        q = self._lift(other)
        if q is NotImplemented:
            return NotImplemented
        return q - self

    def __mul__(self, other: Scalar) -> IntPolynomial:
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial(v * other for v in self._coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> IntPolynomial:
        if m < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self._coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        """Human-readable form, highest degree first: ``x^3 - 6x - 4``."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[str]:
        """Degree-ascending decimal strings (safe for any JSON consumer)."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: str | Sequence[str | int]) -> IntPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data)


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_pow_linear(c: int, m: int) -> IntPolynomial:
    """``(x + c)**m``, built from binomial coefficients."""
    if m < 0:
        raise ValueError("exponent must be non-negative")
    coeffs = [0] * (m + 1)
    binom = 1
    for k in range(m + 1):
        # coefficient of x^k is C(m, k) * c^(m-k)
        coeffs[k] = binom * c ** (m - k)
        binom = binom * (m - k) // (k + 1)
    return IntPolynomial(coeffs)


def poly_eval_int(p: IntPolynomial, v: int) -> int:
    return p(v)


def monic_canonical(p: IntPolynomial) -> IntPolynomial:
    """Return ``p`` or ``-p``, whichever has leading coefficient +1."""
    if p.is_zero():
        raise ValueError("zero polynomial has no monic form")
    lead = p.leading
    if lead == 1:
        return p
    if lead == -1:
        return -p
    raise ArithmeticError(f"leading coefficient {lead} is not +-1")


def synthetic_division(p: IntPolynomial, r: int) -> tuple[IntPolynomial, int]:
    """Divide ``p`` by ``(x - r)``; returns ``(quotient, remainder)``."""
    c = p.coeffs
    if not c:
        return ZERO, 0
    n = len(c) - 1
    q = [0] * n
    acc = c[n]
    for k in range(n - 1, -1, -1):
        q[k] = acc
        acc = c[k] + acc * r
    return IntPolynomial(q), acc


def root_multiplicity(p: IntPolynomial, r: int) -> int:
    """Largest ``m`` such that ``(x - r)**m`` divides ``p``."""
    if p.is_zero():
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    m = 0
    while p.degree and p(r) == 0:
        p, rem = synthetic_division(p, r)
        if rem != 0:
            raise ArithmeticError("nonzero remainder after vanishing evaluation")
        m += 1
    return m
