"""Distance-cospectral pairs of connected threshold graphs.

Necessary conditions, the four-block characterization and its two
parametrized families, and an exhaustive bounded search.  Every pair handed
back to a caller has been confirmed by comparing full N-by-N oracle
characteristic polynomials.
"""
from __future__ import annotations

import logging
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .charpoly import full_charpoly, multiplicities
from .exactpoly import IntPolynomial
from .gamma import gamma_value
from .seqcore import BlockSequence, SequenceError

__all__ = [
    "CospectralPair",
    "Theorem2Params",
    "Corollary1Params",
    "Corollary1Error",
    "SearchResult",
    "necessary_gamma",
    "necessary_fourblock",
    "theorem2_check",
    "theorem2_generate",
    "theorem2_to_corollary1",
    "corollary1_generate",
    "corollary1_diagnose",
    "corollary1_survey",
    "oracle_poly",
    "verify_pair",
    "search",
    "search_cospectral",
    "lemma1_agree",
]

log = logging.getLogger(__name__)

Runs = Sequence[int]


def _runs(b: BlockSequence | Runs) -> tuple[int, ...]:
    return b.runs if isinstance(b, BlockSequence) else tuple(b)


def _four(b: BlockSequence | Runs) -> tuple[int, int, int, int]:
    r = _runs(b)
    if len(r) != 4:
        raise SequenceError(f"expected a 4-block sequence, got {r!r}")
    return r  # type: ignore[return-value]


def oracle_poly(b: BlockSequence | Runs) -> IntPolynomial:
    """Monic distance characteristic polynomial from the full distance matrix."""
    return full_charpoly(_runs(b), "oracle").full_poly


@dataclass(frozen=True)
class CospectralPair:
    g: tuple[int, ...]
    h: tuple[int, ...]
    poly: IntPolynomial
    verified: bool
    nonisomorphic: bool
    family: str | None = None

    @property
    def n_vertices(self) -> int:
        return sum(self.g)

    def to_json(self) -> dict:
        return {
            "g": list(self.g),
            "h": list(self.h),
            "n_vertices": self.n_vertices,
            "poly": self.poly.to_json(),
            "verified": self.verified,
            "nonisomorphic": self.nonisomorphic,
            "family": self.family,
        }


def verify_pair(g: Runs, h: Runs, family: str | None = None) -> CospectralPair:
    g, h = _runs(g), _runs(h)
    pg, ph = oracle_poly(g), oracle_poly(h)
    return CospectralPair(g, h, pg, pg == ph, g != h, family)


# -- necessary conditions ----------------------------------------------------

def necessary_gamma(g: BlockSequence | Runs, h: BlockSequence | Runs) -> bool:
    """gamma weights of orders 1 and 2 agree on the full sequences and on the
    sequences with the last block dropped."""
    a, b = _runs(g), _runs(h)
    if len(a) != len(b) or len(a) < 2:
        return False
    for l in (1, 2):
        if gamma_value(a, l) != gamma_value(b, l):
            return False
        if gamma_value(a[:-1], l) != gamma_value(b[:-1], l):
            return False
    return True


def necessary_fourblock(g: BlockSequence | Runs, h: BlockSequence | Runs) -> bool:
    a1, _, _, a4 = _four(g)
    b1, _, _, b4 = _four(h)
    return a1 * a4 + 2 * a1 == b1 * b4 + 2 * b1 and 2 * a1 + a4 == 2 * b1 + b4


def _theorem2_oriented(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    a1, a2, a3, a4 = a
    b1, b2, b3, b4 = b
    alpha = a1 - b1
    if alpha <= 0 or a1 == 1 or b1 == 1 or b2 % 2:
        return False
    half = b2 // 2
    return (
        b3 == half + alpha
        and b4 == 2 * (a1 - 1)
        and a2 == b2 + 2 * alpha
        and a3 == half
        and a4 == 2 * (b1 - 1)
    )


def theorem2_check(g: BlockSequence | Runs, h: BlockSequence | Runs) -> bool:
    """Four-block characterization, tried in both orientations."""
    a, b = _four(g), _four(h)
    return _theorem2_oriented(a, b) or _theorem2_oriented(b, a)


# -- families ----------------------------------------------------------------

@dataclass(frozen=True)
class Theorem2Params:
    alpha: int
    beta: int
    b1: int

    def __post_init__(self) -> None:
        if self.alpha < 1 or self.beta < 1 or self.b1 < 2:
            raise ValueError(f"need alpha >= 1, beta >= 1, b1 >= 2; got {self}")


@dataclass(frozen=True)
class Corollary1Params:
    i: int
    j: int
    k: int
    l: int

    def __post_init__(self) -> None:
        if min(self.i, self.j, self.k, self.l) < 1:
            raise ValueError(f"parameters must be positive integers; got {self}")


def theorem2_generate(p: Theorem2Params | tuple[int, int, int]) -> CospectralPair:
    if not isinstance(p, Theorem2Params):
        p = Theorem2Params(*p)
    al, be, b1 = p.alpha, p.beta, p.b1
    g = (al + b1, 2 * (al + be), be, 2 * (b1 - 1))
    h = (b1, 2 * be, al + be, 2 * al + 2 * b1 - 2)
    return verify_pair(g, h, family="theorem2")


def theorem2_to_corollary1(p: Theorem2Params | tuple[int, int, int]) -> Corollary1Params:
    """Same pair, re-expressed as ``(i, j, k, l)`` of the corollary family."""
    if not isinstance(p, Theorem2Params):
        p = Theorem2Params(*p)
    return Corollary1Params(p.alpha + p.b1, p.alpha + p.beta, p.beta, p.b1 - 1)


class Corollary1Error(ValueError):
    """Parameter point rejected by the corollary generator."""

    def __init__(self, message: str, diagnostic: dict | None = None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


def _corollary1_graphs(p: Corollary1Params) -> tuple[tuple[int, ...], dict[str, tuple[int, ...]]]:
    i, j, k, l = p.i, p.j, p.k, p.l
    g = (i, 2 * j, k, 2 * l)
    return g, {
        "odd_exponent": (l + 1, 2 * k, j, 2 * i - 1),
        "even_exponent": (l + 1, 2 * k, j, 2 * (i - 1)),
    }


def corollary1_diagnose(p: Corollary1Params | tuple[int, int, int, int], oracle: bool = True) -> dict:
    """Vertex-count balance and cospectrality under both fourth-block readings."""
    if not isinstance(p, Corollary1Params):
        p = Corollary1Params(*p)
    g, readings = _corollary1_graphs(p)
    out: dict = {
        "params": {"i": p.i, "j": p.j, "k": p.k, "l": p.l},
        "g": list(g),
        "sum_condition": p.i + p.k == p.l + p.j,
        "balance_condition": p.i + p.k == p.l + p.j + 1,
    }
    for name, h in readings.items():
        balanced = sum(h) == sum(g)
        entry = {"h": list(h), "n_g": sum(g), "n_h": sum(h), "balanced": balanced}
        if oracle:
            entry["cospectral"] = balanced and h != g and oracle_poly(g) == oracle_poly(h)
        out[name] = entry
    return out


def corollary1_generate(p: Corollary1Params | tuple[int, int, int, int]) -> CospectralPair:
    """Corollary family with fourth block ``2(i - 1)`` for the second graph.

    Requires ``i > 1``, ``l > 1`` and equal vertex counts, which for this
    reading means ``i + k = l + j + 1``; ``i = l + 1`` is rejected because the
    two graphs then coincide.
    """
    if not isinstance(p, Corollary1Params):
        p = Corollary1Params(*p)
    if p.i <= 1 or p.l <= 1:
        raise Corollary1Error(f"need i > 1 and l > 1; got {p}")
    g, readings = _corollary1_graphs(p)
    h = readings["even_exponent"]
    if sum(g) != sum(h):
        diag = corollary1_diagnose(p, oracle=False)
        balancing = [name for name in readings if diag[name]["balanced"]]
        log.warning(
            "corollary1 %s: N(g)=%d, N(h)=%d with exponent 2(i-1); balancing reading(s): %s",
            p, sum(g), sum(h), balancing or "none",
        )
        raise Corollary1Error(
            f"vertex counts differ for {p}: N(g)={sum(g)}, N(h)={sum(h)} "
            f"(balance requires i + k = l + j + 1)",
            diag,
        )
    if g == h:
        raise Corollary1Error(f"{p} gives isomorphic graphs (i = l + 1)")
    return verify_pair(g, h, family="corollary1")


def corollary1_survey(bound: int = 5) -> dict:
    """Machine-readable note on both readings over ``1 <= i, j, k, l <= bound``."""
    points = []
    for i in range(2, bound + 1):
        for j in range(1, bound + 1):
            for k in range(1, bound + 1):
                for l in range(2, bound + 1):
                    points.append(corollary1_diagnose(Corollary1Params(i, j, k, l)))

    def count(pred) -> int:
        return sum(1 for d in points if pred(d))

    sum_cond = [d for d in points if d["sum_condition"]]
    return {
        "bound": bound,
        "n_points": len(points),
        "sum_condition_points": len(sum_cond),
        "sum_condition_odd_balanced": sum(d["odd_exponent"]["balanced"] for d in sum_cond),
        "sum_condition_odd_cospectral": sum(d["odd_exponent"]["cospectral"] for d in sum_cond),
        "sum_condition_even_balanced": sum(d["even_exponent"]["balanced"] for d in sum_cond),
        "even_balanced_points": count(lambda d: d["even_exponent"]["balanced"]),
        "even_balanced_nonisomorphic": count(
            lambda d: d["even_exponent"]["balanced"] and d["even_exponent"]["h"] != d["g"]
        ),
        "even_cospectral": count(lambda d: d["even_exponent"]["cospectral"]),
        "odd_cospectral_anywhere": count(lambda d: d["odd_exponent"]["cospectral"]),
        "odd_balanced_where_even_balanced": count(
            lambda d: d["even_exponent"]["balanced"] and d["odd_exponent"]["balanced"]
        ),
        "points": points,
    }


# -- exhaustive search ---------------------------------------------------------

@dataclass
class SearchResult:
    max_vertices: int
    pairs: list[CospectralPair]
    graphs_per_n: dict[int, int]
    pairs_per_n: dict[int, int]
    truncated: bool = False
    complete_through: int = 0
    formula_disagreements: list[tuple[int, ...]] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "complete_through": self.complete_through,
            "truncated": self.truncated,
            "graphs_per_n": {str(n): c for n, c in sorted(self.graphs_per_n.items())},
            "pairs_per_n": {str(n): c for n, c in sorted(self.pairs_per_n.items())},
            "total_pairs": len(self.pairs),
            "formula_disagreements": [list(r) for r in self.formula_disagreements],
        }


def _unit_keys(unit: tuple[int, int, int]) -> list[tuple[tuple[str, ...], tuple[int, ...]]]:
    """Formula-path keys for one work unit ``(N, prefix, prefix_bits)``."""
    n, prefix, nbits = unit
    free = n - 2
    rest = free - nbits
    out = []
    for low in range(1 << rest):
        code = (prefix << rest) | low
        mid = tuple((code >> (free - 1 - t)) & 1 for t in range(free))
        runs = _runs_of_bits((0,) + mid + (1,))
        poly = full_charpoly(runs, "formula").full_poly
        out.append((tuple(poly.to_json()), runs))
    return out


def _runs_of_bits(bits: tuple[int, ...]) -> tuple[int, ...]:
    runs = []
    prev, count = bits[0], 0
    for b in bits:
        if b == prev:
            count += 1
        else:
            runs.append(count)
            prev, count = b, 1
    runs.append(count)
    return tuple(runs)


def _work_units(n: int, prefix_bits: int = 6) -> list[tuple[int, int, int]]:
    nbits = min(prefix_bits, n - 2)
    return [(n, p, nbits) for p in range(1 << nbits)]


def search(
    max_vertices: int,
    workers: int = 1,
    max_graphs: int | None = None,
    min_vertices: int = 2,
) -> SearchResult:
    """Exhaustive search over connected threshold graphs with N <= max_vertices.

    Graphs are bucketed by their formula-path polynomial; every bucket with two
    or more members is re-checked against full distance-matrix polynomials
    before pairs are emitted.  With ``max_graphs`` the sweep stops before the
    first N that would exceed the budget and ``truncated`` is set.
    """
    if max_vertices < 2:
        raise ValueError("max_vertices must be at least 2")
    graphs_per_n: dict[int, int] = {}
    pairs_per_n: dict[int, int] = {}
    pairs: list[CospectralPair] = []
    disagreements: list[tuple[int, ...]] = []
    truncated = False
    complete = 0
    seen = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(max(2, min_vertices), max_vertices + 1):
            count = 1 << (n - 2)
            if max_graphs is not None and seen + count > max_graphs:
                truncated = True
                break
            units = _work_units(n)
            results: Iterable = pool.map(_unit_keys, units) if pool else map(_unit_keys, units)
            buckets: dict[tuple[str, ...], list[tuple[int, ...]]] = defaultdict(list)
            for chunk in results:
                for key, runs in chunk:
                    buckets[key].append(runs)
            seen += count
            graphs_per_n[n] = count
            found = _confirm_buckets(buckets, disagreements)
            pairs.extend(found)
            pairs_per_n[n] = len(found)
            complete = n
    finally:
        if pool is not None:
            pool.shutdown()
    pairs.sort(key=lambda p: (p.n_vertices, p.g, p.h))
    return SearchResult(max_vertices, pairs, graphs_per_n, pairs_per_n, truncated, complete, disagreements)


def _confirm_buckets(
    buckets: dict[tuple[str, ...], list[tuple[int, ...]]],
    disagreements: list[tuple[int, ...]],
) -> list[CospectralPair]:
    found = []
    for key in sorted(buckets):
        members = sorted(buckets[key])
        if len(members) < 2:
            continue
        formula_poly = IntPolynomial.from_json(key)
        by_oracle: dict[IntPolynomial, list[tuple[int, ...]]] = defaultdict(list)
        for runs in members:
            op = oracle_poly(runs)
            if op != formula_poly:
                disagreements.append(runs)
            by_oracle[op].append(runs)
        for poly, group in by_oracle.items():
            for g, h in combinations(group, 2):
                found.append(CospectralPair(g, h, poly, True, g != h, _family_of(g, h)))
    return found


def _family_of(g: tuple[int, ...], h: tuple[int, ...]) -> str | None:
    if len(g) == 4 and len(h) == 4 and theorem2_check(g, h):
        return "theorem2"
    return None


def search_cospectral(max_vertices: int, workers: int | None = 1) -> list[CospectralPair]:
    return search(max_vertices, workers=workers or (os.cpu_count() or 1)).pairs


def lemma1_agree(pair: CospectralPair) -> bool:
    """Predicted multiplicities of -2 and -1 coincide across the pair."""
    return multiplicities(pair.g) == multiplicities(pair.h)
