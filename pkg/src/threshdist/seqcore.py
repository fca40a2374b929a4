"""Creation sequences, block sequences and distance matrices of threshold graphs.

A threshold graph on ``N`` vertices is grown one vertex at a time; vertex ``i``
is added either isolated (bit 0) or dominating (bit 1).  The first bit is
always 0.  Runs of equal bits give the block form ``0^a1 1^a2 ... 0^a(B-1) 1^aB``.
Vertices are always kept in creation order.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, Sequence

__all__ = [
    "CreationSequence",
    "BlockSequence",
    "IntMatrix",
    "SequenceError",
    "parse_sequence",
    "to_blocks",
    "expand_blocks",
    "is_connected",
    "distance_matrix",
    "bfs_distance_matrix",
    "is_isomorphic",
    "connected_sequences",
]


class SequenceError(ValueError):
    """Malformed or unsupported creation/block sequence."""


@dataclass(frozen=True)
class CreationSequence:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if not bits:
            raise SequenceError("creation sequence must have at least one vertex")
        if any(b not in (0, 1) for b in bits):
            raise SequenceError(f"bits must be 0/1, got {bits!r}")
        if bits[0] != 0:
            raise SequenceError("first bit must be 0")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def n_vertices(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class BlockSequence:
    """Run lengths ``(a1, ..., aB)``; odd positions are 0-runs, even are 1-runs."""

    runs: tuple[int, ...]

    def __post_init__(self) -> None:
        runs = tuple(self.runs)
        object.__setattr__(self, "runs", runs)
        if not runs:
            raise SequenceError("block sequence must be non-empty")
        for a in runs:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise SequenceError(f"run lengths must be positive integers, got {runs!r}")

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.runs)

    def __getitem__(self, i: int) -> int:
        return self.runs[i]

    def __str__(self) -> str:
        return " ".join(f"{(i % 2)}^{a}" for i, a in enumerate(self.runs))

    @property
    def n_blocks(self) -> int:
        return len(self.runs)

    @property
    def n_vertices(self) -> int:
        return sum(self.runs)

    @property
    def connected(self) -> bool:
        return len(self.runs) % 2 == 0 or self.runs == (1,)


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix, stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have order >= 1")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.order))


_BLOCK_TOKEN = re.compile(r"([01])(?:\^(-?\d+))?")


def parse_sequence(text: str) -> CreationSequence:
    """Parse ``"00011001"`` or ``"0^3 1^2 0^2 1^1"`` into a creation sequence.

    In block notation an exponent of 1 may be omitted; adjacent tokens with the
    same symbol are concatenated.
    """
    s = text.strip()
    if not s:
        raise SequenceError("empty sequence")
    if "^" not in s and not any(ch.isspace() for ch in s):
        if any(ch not in "01" for ch in s):
            raise SequenceError(f"invalid symbol in bit string {text!r}")
        return CreationSequence(tuple(int(ch) for ch in s))
    bits: list[int] = []
    for tok in s.split():
        m = _BLOCK_TOKEN.fullmatch(tok)
        if m is None:
            raise SequenceError(f"malformed block token {tok!r}")
        k = 1 if m.group(2) is None else int(m.group(2))
        if k < 1:
            raise SequenceError(f"exponent must be positive in {tok!r}")
        bits.extend([int(m.group(1))] * k)
    return CreationSequence(tuple(bits))


def to_blocks(s: CreationSequence) -> BlockSequence:
    return BlockSequence(tuple(len(list(g)) for _, g in groupby(s.bits)))


def expand_blocks(blocks: BlockSequence | Sequence[int]) -> CreationSequence:
    runs = blocks.runs if isinstance(blocks, BlockSequence) else tuple(blocks)
    bits: list[int] = []
    for i, a in enumerate(runs):
        bits.extend([i % 2] * a)
    return CreationSequence(tuple(bits))


def is_connected(s: CreationSequence) -> bool:
    return len(s.bits) == 1 or s.bits[-1] == 1


def distance_matrix(s: CreationSequence) -> IntMatrix:
    """Distance matrix in creation order.

    For ``i < j`` the vertices are adjacent iff ``b_j = 1``; otherwise the last
    (dominating) vertex gives a path of length 2.
    """
    if not is_connected(s):
        raise SequenceError(f"graph {s} is disconnected")
    b = s.bits
    n = len(b)
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n):
        d = 1 if b[j] else 2
        for i in range(j):
            rows[i][j] = rows[j][i] = d
    return IntMatrix(tuple(map(tuple, rows)))


def bfs_distance_matrix(s: CreationSequence) -> list[list[int | None]]:
    """All-pairs shortest paths by BFS on the creation-rule adjacency.

    Independent of :func:`distance_matrix`; unreachable pairs are ``None``.
    """
    b = s.bits
    n = len(b)
    adj: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        if b[j]:
            for i in range(j):
                adj[i].append(j)
                adj[j].append(i)
    out: list[list[int | None]] = []
    for src in range(n):
        dist: list[int | None] = [None] * n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1  # type: ignore[operator]
                    queue.append(v)
        out.append(dist)
    return out


def is_isomorphic(g: BlockSequence, h: BlockSequence) -> bool:
    # With b1 = 0 the block sequence is a complete isomorphism invariant.
    return g.runs == h.runs


def connected_sequences(n_vertices: int) -> Iterator[CreationSequence]:
    """All connected creation sequences on exactly ``n_vertices`` vertices.

    Bits ``b2..b(N-1)`` range freely (binary counting order), ``b1 = 0`` and
    ``bN = 1``.
    """
    if n_vertices < 1:
        raise ValueError("n_vertices must be positive")
    if n_vertices == 1:
        yield CreationSequence((0,))
        return
    free = n_vertices - 2
    for code in range(1 << free):
        mid = tuple((code >> (free - 1 - k)) & 1 for k in range(free))
        yield CreationSequence((0,) + mid + (1,))
