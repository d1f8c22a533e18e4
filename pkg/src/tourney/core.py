"""Tournament objects, constructors, relabelings, and the canonical form.

A tournament is a complete antisymmetric digraph on vertices 0..n-1.  The
canonical code of a tournament is a byte string (one length byte, then the
orientation bits of the lexicographically minimal labeling packed MSB-first)
with the property that two tournaments are isomorphic iff their codes are
equal.  Bits inside the code follow colex pair order (0,1), (0,2), (1,2),
(0,3), ...: under that order the code of a canonically labeled tournament
minus its top vertex is a prefix of the full code, which the enumeration
machinery leans on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as K
from .errors import (
    BadSize,
    BudgetExceeded,
    ConflictingPair,
    MissingPair,
    SelfArc,
    VertexOutOfRange,
)

VertexSet = frozenset

MAX_VERTICES = 64
_KERNEL_MAX = 63


class Tournament:
    """Immutable tournament; rows[i] is the bitmask of vertices i beats."""

    __slots__ = ("n", "rows", "_np_rows", "_code")

    def __init__(self, rows: Iterable[int]):
        rows = tuple(int(r) for r in rows)
        self.n = len(rows)
        self.rows = rows
        self._np_rows = None
        self._code = None

    # -- basic queries ----------------------------------------------------

    def arc(self, i: int, j: int) -> bool:
        """True iff i beats j."""
        _check_vertex(self, i)
        _check_vertex(self, j)
        if i == j:
            raise SelfArc(f"arc({i}, {i}) is not a pair")
        return bool((self.rows[i] >> j) & 1)

    def out_neighbors(self, x: int) -> VertexSet:
        _check_vertex(self, x)
        return _mask_to_set(self.rows[x])

    def in_neighbors(self, x: int) -> VertexSet:
        _check_vertex(self, x)
        full = (1 << self.n) - 1
        return _mask_to_set(full ^ self.rows[x] ^ (1 << x))

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            row = self.rows[i]
            for j in range(self.n):
                if (row >> j) & 1:
                    yield (i, j)

    def vertices(self) -> VertexSet:
        return frozenset(range(self.n))

    # -- plumbing ----------------------------------------------------------

    def np_rows(self) -> np.ndarray:
        if self._np_rows is None:
            if self.n > _KERNEL_MAX:
                raise BudgetExceeded(
                    f"analysis kernels handle at most {_KERNEL_MAX} vertices, got {self.n}"
                )
            arr = np.array(self.rows, dtype=np.int64)
            arr.flags.writeable = False
            self._np_rows = arr
        return self._np_rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tournament)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, rows={self.rows})"


def _check_vertex(t: Tournament, x: int) -> None:
    if not isinstance(x, (int, np.integer)) or not 0 <= x < t.n:
        raise VertexOutOfRange(f"vertex {x!r} not in 0..{t.n - 1}")


def _mask_to_set(mask: int) -> VertexSet:
    out = []
    v = 0
    m = int(mask)
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _set_to_mask(t: Tournament, xs: Iterable[int]) -> int:
    mask = 0
    for x in xs:
        _check_vertex(t, x)
        mask |= 1 << int(x)
    return mask


def from_rows(rows: Iterable[int]) -> Tournament:
    """Build a tournament from out-neighbor masks, checking completeness."""
    t = Tournament(rows)
    if not 1 <= t.n <= MAX_VERTICES:
        raise BadSize(f"vertex count must be 1..{MAX_VERTICES}, got {t.n}")
    full = (1 << t.n) - 1
    for i in range(t.n):
        row = t.rows[i]
        if not 0 <= row <= full:
            raise VertexOutOfRange(f"row {i} has bits outside 0..{t.n - 1}")
        if (row >> i) & 1:
            raise SelfArc(f"row {i} contains a loop")
    for i in range(t.n):
        for j in range(i + 1, t.n):
            ij = (t.rows[i] >> j) & 1
            ji = (t.rows[j] >> i) & 1
            if ij and ji:
                raise ConflictingPair(f"pair ({i}, {j}) oriented both ways")
            if not ij and not ji:
                raise MissingPair(f"pair ({i}, {j}) has no arc")
    return t


def make_tournament(n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    """Build a tournament on 0..n-1 from an explicit arc set.

    Every unordered pair must appear exactly once; loops, repeats of the
    opposite orientation, and stray labels are rejected.
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_VERTICES:
        raise BadSize(f"vertex count must be 1..{MAX_VERTICES}, got {n!r}")
    n = int(n)
    rows = [0] * n
    seen = [0] * n  # seen[i] bit j: pair {i,j} already oriented
    for arc in arcs:
        i, j = arc
        i, j = int(i), int(j)
        if i == j:
            raise SelfArc(f"arc ({i}, {j})")
        if not 0 <= i < n or not 0 <= j < n:
            raise VertexOutOfRange(f"arc ({i}, {j}) outside 0..{n - 1}")
        if (seen[i] >> j) & 1:
            if (rows[i] >> j) & 1:
                continue  # harmless repeat
            raise ConflictingPair(f"pair ({min(i, j)}, {max(i, j)}) oriented both ways")
        seen[i] |= 1 << j
        seen[j] |= 1 << i
        rows[i] |= 1 << j
    for i in range(n):
        for j in range(i + 1, n):
            if not (seen[i] >> j) & 1:
                raise MissingPair(f"pair ({i}, {j}) has no arc")
    return Tournament(rows)


def dual(t: Tournament) -> Tournament:
    """Reverse every arc."""
    full = (1 << t.n) - 1
    return Tournament(full ^ (1 << i) ^ t.rows[i] for i in range(t.n))


def induce(t: Tournament, mask: int) -> Tournament:
    """Subtournament on the vertices of mask, relabeled in ascending order.
    Internal fast path; no label map."""
    out = np.empty(t.n, dtype=np.int64)
    ns = K.induce_rows(t.n, t.np_rows(), mask, out)
    return Tournament(int(out[i]) for i in range(ns))


def subtournament(t: Tournament, xs: Iterable[int]) -> tuple[Tournament, tuple[int, ...]]:
    """Restrict to a nonempty vertex subset.

    Returns the relabeled tournament together with the label map: entry k of
    the map is the original label of new vertex k (ascending original order).
    """
    label_map = tuple(sorted({int(x) for x in xs}))
    if not label_map:
        raise BadSize("subtournament needs a nonempty vertex set")
    mask = _set_to_mask(t, label_map)
    return induce(t, mask), label_map


def out_neighbors(t: Tournament, x: int) -> VertexSet:
    return t.out_neighbors(x)


def canonical_code(t: Tournament) -> bytes:
    """Canonical form as bytes; equal codes iff isomorphic tournaments."""
    if t._code is None:
        m = t.n * (t.n - 1) // 2
        if m == 0:
            t._code = bytes([t.n])
        else:
            bits = np.empty(m, dtype=np.uint8)
            K.min_colex_bits(t.n, t.np_rows(), bits)
            t._code = bytes([t.n]) + np.packbits(bits).tobytes()
    return t._code


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def is_canonically_labeled(t: Tournament) -> bool:
    """True iff this labeling is the one canonical_code describes."""
    return bool(K.is_canonical_rows(t.n, t.np_rows()))


def tournament_from_code(code: bytes) -> Tournament:
    """Rebuild the canonically labeled tournament from its code bytes."""
    if len(code) < 1:
        raise BadSize("empty canonical code")
    n = code[0]
    if not 1 <= n <= MAX_VERTICES:
        raise BadSize(f"code length byte {n} outside 1..{MAX_VERTICES}")
    m = n * (n - 1) // 2
    want = 1 + (m + 7) // 8
    if len(code) != want:
        raise BadSize(f"code for n={n} must be {want} bytes, got {len(code)}")
    if m == 0:
        return Tournament([0])
    bits = np.unpackbits(np.frombuffer(code[1:], dtype=np.uint8))[:m]
    rows = [0] * n
    p = 0
    for j in range(1, n):
        for i in range(j):
            if bits[p]:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            p += 1
    return Tournament(rows)


def random_tournament(n: int, rng) -> Tournament:
    """Uniform random orientation of each pair; rng is a random.Random."""
    if not 1 <= n <= MAX_VERTICES:
        raise BadSize(f"vertex count must be 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(rows)


def relabel(t: Tournament, perm: Iterable[int]) -> Tournament:
    """Apply a permutation: new vertex k is old vertex perm[k]."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(t.n)):
        raise VertexOutOfRange(f"not a permutation of 0..{t.n - 1}: {perm}")
    rows = [0] * t.n
    for a in range(t.n):
        for b in range(t.n):
            if a != b and (t.rows[perm[a]] >> perm[b]) & 1:
                rows[a] |= 1 << b
    return Tournament(rows)


@dataclass(frozen=True)
class UndirectedGraph:
    """Plain undirected graph; edges stored as sorted pairs."""

    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            a, b = e
            if a >= b or a not in self.vertices or b not in self.vertices:
                raise VertexOutOfRange(f"bad edge {e!r}")

    def neighbors(self, x: int) -> VertexSet:
        out = set()
        for a, b in self.edges:
            if a == x:
                out.add(b)
            elif b == x:
                out.add(a)
        return frozenset(out)

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))


def graph_from_edges(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> UndirectedGraph:
    vs = frozenset(int(v) for v in vertices)
    es = frozenset((min(int(a), int(b)), max(int(a), int(b))) for a, b in edges)
    return UndirectedGraph(vs, es)
