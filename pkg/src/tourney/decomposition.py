"""Intervals, support, and the outside machinery relative to a core.

An interval is a vertex subset that every outside vertex treats uniformly;
a tournament with only trivial intervals is indecomposable.  Relative to a
core X (|X| >= 3, T[X] indecomposable) the outside vertices split into named
blocks: ext(X) keeps the core indecomposable when added, X- beats the whole
core, X+ loses to it, and X-(u) / X+(u) mimic the core vertex u against the
rest of the core while losing to / beating u itself.  The outside graph joins
outside pairs whose joint addition to the core is indecomposable; its
component structure, block pairing, and a degree formula characterize the
tournaments whose every non-critical vertex lies in the core (check_sayar).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as K
from .core import (
    Tournament,
    UndirectedGraph,
    VertexSet,
    _mask_to_set,
    _set_to_mask,
    graph_from_edges,
)
from .errors import (
    BadSize,
    BudgetExceeded,
    CoreNotIndecomposable,
    CoreTooSmall,
    NotIndecomposable,
    NotTransitive,
)

# the interval scan walks 2^n subsets
_INTERVAL_SCAN_MAX = 20


def is_interval(t: Tournament, xs) -> bool:
    """True iff every vertex outside xs beats all of xs or loses to all of it.

    The empty set, singletons, and the full vertex set pass vacuously.
    """
    mask = _set_to_mask(t, xs)
    return bool(K.is_interval_mask(t.n, t.np_rows(), mask))


def nontrivial_intervals(t: Tournament) -> list:
    """Every interval that is not empty, a singleton, or the whole set,
    ordered by size then by members."""
    if t.n > _INTERVAL_SCAN_MAX:
        raise BudgetExceeded(
            f"interval scan is exponential; n={t.n} exceeds the cap {_INTERVAL_SCAN_MAX}"
        )
    if t.n < 3:
        return []
    buf = np.empty(1 << t.n, dtype=np.int64)
    cnt = K.collect_interval_masks(t.n, t.np_rows(), buf)
    sets = [_mask_to_set(int(buf[i])) for i in range(cnt)]
    sets.sort(key=lambda s: (len(s), sorted(s)))
    return sets


def is_indecomposable(t: Tournament) -> bool:
    """Only trivial intervals.  Tournaments on 1 or 2 vertices count as
    indecomposable (there is no subset that could witness otherwise)."""
    return bool(K.is_indecomposable_rows(t.n, t.np_rows()))


def support(t: Tournament) -> VertexSet:
    """The non-critical vertices: those whose removal keeps t indecomposable.

    Defined for indecomposable tournaments on at least 3 vertices.
    """
    if t.n < 3:
        raise BadSize(f"support needs at least 3 vertices, got {t.n}")
    if not is_indecomposable(t):
        raise NotIndecomposable("support is defined on indecomposable tournaments")
    return _mask_to_set(int(K.support_mask_rows(t.n, t.np_rows())))


def transitive_min_max(t: Tournament) -> tuple:
    """(least, greatest) element of a transitive tournament, where the least
    element beats every other vertex and the greatest loses to every other."""
    if not K.is_transitive_rows(t.n, t.np_rows()):
        raise NotTransitive("tournament contains a 3-cycle")
    full = (1 << t.n) - 1
    src = snk = -1
    for v in range(t.n):
        if t.rows[v] == full ^ (1 << v):
            src = v
        if t.rows[v] == 0:
            snk = v
    return (src, snk)


@dataclass(frozen=True)
class OutsidePartition:
    """Blocks of the vertices outside a core X.

    ext holds the vertices whose single addition keeps the core
    indecomposable.  x_minus / x_plus hold the uniform vertices (beating all
    of X, beaten by all of X).  per_u_minus[u] / per_u_plus[u] hold the
    vertices that copy u's arcs toward X minus u and beat / lose to u; both
    maps carry an entry for every u in X, possibly empty.
    """

    ext: VertexSet
    x_minus: VertexSet
    x_plus: VertexSet
    per_u_minus: dict
    per_u_plus: dict

    def named_blocks(self) -> list:
        """Nonempty non-ext blocks as (identifier, vertex set) pairs."""
        out = []
        if self.x_minus:
            out.append(("X-", self.x_minus))
        if self.x_plus:
            out.append(("X+", self.x_plus))
        for u in sorted(self.per_u_minus):
            if self.per_u_minus[u]:
                out.append((f"X-({u})", self.per_u_minus[u]))
        for u in sorted(self.per_u_plus):
            if self.per_u_plus[u]:
                out.append((f"X+({u})", self.per_u_plus[u]))
        return out


def _checked_core_mask(t: Tournament, xset: frozenset) -> int:
    mask = _set_to_mask(t, xset)
    if len(xset) < 3:
        raise CoreTooSmall(f"core needs at least 3 vertices, got {len(xset)}")
    sub = np.empty(t.n, dtype=np.int64)
    ns = K.induce_rows(t.n, t.np_rows(), mask, sub)
    if not K.is_indecomposable_rows(ns, sub):
        raise CoreNotIndecomposable("induced core tournament is decomposable")
    return mask


def outside_partition(t: Tournament, xs) -> OutsidePartition:
    """Classify every vertex outside the core into its block."""
    xset = frozenset(int(x) for x in xs)
    mask = _checked_core_mask(t, xset)
    rows = t.np_rows()
    kinds = np.empty(t.n, dtype=np.int64)
    us = np.empty(t.n, dtype=np.int64)
    K.classify_outside(t.n, rows, mask, kinds, us)
    ext = []
    x_minus = []
    x_plus = []
    per_u_minus = {u: [] for u in sorted(xset)}
    per_u_plus = {u: [] for u in sorted(xset)}
    sub = np.empty(t.n, dtype=np.int64)
    for v in range(t.n):
        k = int(kinds[v])
        if k == -1:
            continue
        if k == 0:
            # leftover slot: such a vertex must keep the core indecomposable,
            # so test that directly instead of taking it on faith
            ns = K.induce_rows(t.n, rows, mask | (1 << v), sub)
            if not K.is_indecomposable_rows(ns, sub):
                raise RuntimeError(
                    f"vertex {v} fits no outside block; classification is broken"
                )
            ext.append(v)
        elif k == 1:
            x_minus.append(v)
        elif k == 2:
            x_plus.append(v)
        elif k == 3:
            per_u_minus[int(us[v])].append(v)
        else:
            per_u_plus[int(us[v])].append(v)
    return OutsidePartition(
        ext=frozenset(ext),
        x_minus=frozenset(x_minus),
        x_plus=frozenset(x_plus),
        per_u_minus={u: frozenset(vs) for u, vs in per_u_minus.items()},
        per_u_plus={u: frozenset(vs) for u, vs in per_u_plus.items()},
    )


def outside_graph(t: Tournament, xs) -> UndirectedGraph:
    """Graph on the outside vertices joining pairs whose joint addition to
    the core stays indecomposable."""
    xset = frozenset(int(x) for x in xs)
    mask = _checked_core_mask(t, xset)
    pairs = np.empty(t.n * t.n, dtype=np.int64)
    cnt = K.outside_edges(t.n, t.np_rows(), mask, pairs)
    edges = [(int(pairs[2 * i]), int(pairs[2 * i + 1])) for i in range(cnt)]
    return graph_from_edges(frozenset(range(t.n)) - xset, edges)


def connected_components(g: UndirectedGraph) -> list:
    """Components as vertex sets, ordered by least member."""
    adj = {v: [] for v in g.vertices}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    out = []
    for v in sorted(g.vertices):
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        stack = [v]
        while stack:
            w = stack.pop()
            for y in adj[w]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def is_partially_critical(t: Tournament, xs) -> bool:
    """True iff T[X] is indecomposable and every non-critical vertex of t
    lies in X.  Requires t itself indecomposable."""
    xset = frozenset(int(x) for x in xs)
    mask = _set_to_mask(t, xset)
    if len(xset) < 3:
        raise CoreTooSmall(f"core needs at least 3 vertices, got {len(xset)}")
    if not is_indecomposable(t):
        raise NotIndecomposable("partial criticality needs an indecomposable tournament")
    sub = np.empty(t.n, dtype=np.int64)
    ns = K.induce_rows(t.n, t.np_rows(), mask, sub)
    if not K.is_indecomposable_rows(ns, sub):
        return False
    return support(t) <= xset


def _degree_adds_one(block_id: str) -> bool:
    # graph degree = in-block out-degree + 1 for X+ and X-(u) blocks;
    # the X- and X+(u) blocks use m minus the out-degree instead
    return block_id == "X+" or block_id.startswith("X-(")


@dataclass(frozen=True)
class SayarComponent:
    """One outside-graph component matched against a half-graph.

    q1 / q2 name the two blocks forming the halves (q1 owns the smallest
    vertex); half_size is the per-side size m.  structure_ok says the
    component is exactly two equal blocks wired as the gap graph on 2m
    vertices; degree_ok says each vertex degree obeys its block's formula.
    """

    vertices: VertexSet
    q1: Optional[str]
    q2: Optional[str]
    half_size: int
    structure_ok: bool
    degree_ok: bool


@dataclass(frozen=True)
class SayarReport:
    ok: bool
    ext_empty: bool
    transitivity_ok: bool
    components: tuple


def check_sayar(t: Tournament, xs) -> SayarReport:
    """Structural test for partial criticality over the core xs.

    Three conditions: no ext vertex; for every core vertex u both
    T[{uniform blocks} + u] and T[{u's copy blocks} + u] are transitive; and
    every outside-graph component is the union of two equal-size blocks
    carrying the half-graph structure with the block-wise degree formula.
    The report passes iff all three hold, which happens exactly when t is
    indecomposable with all non-critical vertices inside the core.
    """
    xset = frozenset(int(x) for x in xs)
    part = outside_partition(t, xs)
    ext_empty = not part.ext

    rows = t.np_rows()
    sub = np.empty(t.n, dtype=np.int64)
    trans_ok = True
    uniform = part.x_minus | part.x_plus
    for u in sorted(xset):
        copies = part.per_u_minus[u] | part.per_u_plus[u]
        for blockset in (uniform, copies):
            m = _set_to_mask(t, blockset) | (1 << u)
            ns = K.induce_rows(t.n, rows, m, sub)
            if not K.is_transitive_rows(ns, sub):
                trans_ok = False

    g = outside_graph(t, xs)
    degree = {v: 0 for v in g.vertices}
    for a, b in g.edges:
        degree[a] += 1
        degree[b] += 1
    blocks = part.named_blocks()

    comp_reports = []
    comps_ok = True
    for comp in connected_components(g):
        q1 = q2 = None
        half = 0
        structure_ok = False
        degree_ok = False
        touching = [(bid, bs) for bid, bs in blocks if bs & comp]
        if len(touching) == 2:
            (id_a, set_a), (id_b, set_b) = touching
            if (
                set_a <= comp
                and set_b <= comp
                and len(set_a) == len(set_b)
                and (set_a | set_b) == comp
            ):
                m = len(set_a)
                half = m
                shape = True
                for a, b in g.edges:
                    if a in comp and (a in set_a) == (b in set_a):
                        shape = False  # edge inside one half
                        break
                if shape:
                    want = list(range(1, m + 1))
                    shape = (
                        sorted(degree[v] for v in set_a) == want
                        and sorted(degree[v] for v in set_b) == want
                    )
                if shape:
                    for a in set_a:
                        for b in set_b:
                            has = (min(a, b), max(a, b)) in g.edges
                            if has != (degree[a] + degree[b] >= m + 1):
                                shape = False
                structure_ok = shape
                if structure_ok:
                    if min(comp) in set_a:
                        q1, q2 = id_a, id_b
                    else:
                        q1, q2 = id_b, id_a
                    degree_ok = True
                    for bid, bs in touching:
                        bmask = 0
                        for v in bs:
                            bmask |= 1 << v
                        for v in bs:
                            o = (t.rows[v] & bmask).bit_count()
                            need = o + 1 if _degree_adds_one(bid) else m - o
                            if degree[v] != need:
                                degree_ok = False
        comp_reports.append(
            SayarComponent(comp, q1, q2, half, structure_ok, degree_ok)
        )
        if not (structure_ok and degree_ok):
            comps_ok = False

    ok = ext_empty and trans_ok and comps_ok
    return SayarReport(ok, ext_empty, trans_ok, tuple(comp_reports))
