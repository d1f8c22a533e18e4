"""Constructions: the three odd critical families, the order-7 rotational
tournament and its 6-vertex cut, half graphs, an explicit two-parameter
block construction, and an assembler that realizes a block family spec
around a 3-cycle core.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as K
from .core import (
    Tournament,
    UndirectedGraph,
    canonical_code,
    dual,
    from_rows,
    graph_from_edges,
    subtournament,
)
from .decomposition import (
    _degree_adds_one,
    check_sayar,
    is_indecomposable,
)
from .errors import (
    AmbiguousSpec,
    BadParameters,
    BadSize,
    BudgetExceeded,
    InfeasibleSpec,
)


def gen_critical(family: str, size: int) -> Tournament:
    """Member of one of the three named critical families on an odd number
    of vertices.

    T: rotational, i beats the next (size-1)/2 vertices mod size.
    U: T with every arc inside the top half block {m+1..2m} reversed.
    W: an increasing total order on {0..2m-1} plus a top vertex beating
       exactly the even vertices.
    """
    if family not in ("T", "U", "W"):
        raise BadParameters(f"family must be one of T, U, W, got {family!r}")
    if not isinstance(size, int) or size < 5 or size % 2 == 0:
        raise BadSize(f"size must be odd and at least 5, got {size!r}")
    m = size // 2
    if family in ("T", "U"):
        rows = [0] * size
        for i in range(size):
            for d in range(1, m + 1):
                rows[i] |= 1 << ((i + d) % size)
        if family == "U":
            for i in range(m + 1, size):
                for j in range(i + 1, size):
                    # inside {m+1..2m} every forward arc flips
                    rows[i] &= ~(1 << j)
                    rows[j] |= 1 << i
        return Tournament(rows)
    k = size - 1
    rows = [0] * size
    for i in range(k):
        for j in range(i + 1, k):
            rows[i] |= 1 << j
    for v in range(k):
        if v % 2 == 0:
            rows[k] |= 1 << v
        else:
            rows[v] |= 1 << k
    return Tournament(rows)


def gen_paley7() -> Tournament:
    """Order-7 rotational tournament: i beats i+1, i+2, i+4 mod 7."""
    rows = [0] * 7
    for i in range(7):
        for d in (1, 2, 4):
            rows[i] |= 1 << ((i + d) % 7)
    return Tournament(rows)


def gen_b6() -> Tournament:
    """The 6-vertex tournament obtained by dropping the last vertex of
    gen_paley7()."""
    t, _ = subtournament(gen_paley7(), range(6))
    return t


def gen_g2n(n: int) -> UndirectedGraph:
    """Half graph on 2n vertices: x and y adjacent iff |y - x| >= n."""
    if not isinstance(n, int) or n < 1:
        raise BadSize(f"half size must be a positive integer, got {n!r}")
    edges = [(x, y) for x in range(n) for y in range(x + n, 2 * n)]
    return graph_from_edges(range(2 * n), edges)


def gen_h_figure3(k: int, n: int) -> Tournament:
    """Explicit member of the first block family on 2n+1 vertices, 2 <= k < n.

    Core 3-cycle on {0,1,2}.  Four blocks: A = {3..k+1} copies vertex 0 and
    loses to it, B = {k+2..2k} beats the core, C = {2k+1..n+k} loses to the
    core, D = {n+k+1..2n} copies vertex 1 and beats it.  A and D are
    decreasing chains, B and C increasing ones.  Inside the first component
    i in A beats j in B iff j - i >= k - 1; inside the second, i in C beats
    j in D iff j - i >= n - k.  Every A or B vertex beats every C or D one.
    """
    if not isinstance(k, int) or not isinstance(n, int) or k < 2 or n < k + 1:
        raise BadParameters(f"need integers 2 <= k < n, got k={k!r}, n={n!r}")
    size = 2 * n + 1
    blk_a = range(3, k + 2)
    blk_b = range(k + 2, 2 * k + 1)
    blk_c = range(2 * k + 1, n + k + 1)
    blk_d = range(n + k + 1, 2 * n + 1)
    rows = [0] * size

    def arc(a, b):
        rows[a] |= 1 << b

    arc(0, 1)
    arc(1, 2)
    arc(2, 0)
    for v in blk_a:
        arc(0, v)
        arc(v, 1)
        arc(2, v)
    for v in blk_b:
        arc(v, 0)
        arc(v, 1)
        arc(v, 2)
    for v in blk_c:
        arc(0, v)
        arc(1, v)
        arc(2, v)
    for v in blk_d:
        arc(v, 1)
        arc(v, 2)
        arc(0, v)
    for blk, descending in ((blk_a, True), (blk_b, False), (blk_c, False), (blk_d, True)):
        for i in blk:
            for j in blk:
                if i < j:
                    arc(j, i) if descending else arc(i, j)
    for i in blk_a:
        for j in blk_b:
            arc(i, j) if j - i >= k - 1 else arc(j, i)
    for i in blk_c:
        for j in blk_d:
            arc(i, j) if j - i >= n - k else arc(j, i)
    for v in list(blk_a) + list(blk_b):
        for w in list(blk_c) + list(blk_d):
            arc(v, w)
    return from_rows(rows)


FAMILIES = ("H", "I", "J", "Jdual", "K", "Kdual", "L", "Ldual")

# block identifiers per component, in construction order
_BULLETS = {
    "H": (("X+(0)", "X-"), ("X+", "X-(1)")),
    "I": (("X+(0)", "X+(2)"), ("X+(1)", "X-(0)")),
    "J": (("X+(1)", "X-"), ("X-(1)", "X-(0)")),
    "K": (("X+(1)", "X-"), ("X+(0)", "X-(2)")),
    "L": (("X+(1)", "X-"), ("X+(0)", "X-(2)"), ("X+", "X-(0)")),
}

_CORE_ARCS = ((0, 1), (1, 2), (2, 0))

# pair orientations that would blow up the backtracking product
_FREE_PAIR_CAP = 12


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for one family member.

    component_sizes lists the half-size m of each outside component in
    construction order (two components, or three for L and Ldual).
    chain_orders, when given, lists one tuple per block in construction
    order naming that block's vertices from the chain's source down to its
    sink; by default each chain runs in increasing label order.
    """

    family: str
    component_sizes: tuple
    chain_orders: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "component_sizes", tuple(self.component_sizes))
        if self.chain_orders is not None:
            object.__setattr__(
                self, "chain_orders", tuple(tuple(c) for c in self.chain_orders)
            )


def size_compositions(total: int, parts: int):
    """All ordered ways to write total as a sum of `parts` positive ints."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in size_compositions(total - first, parts - 1):
            yield (first,) + rest


def _block_u(block_id: str) -> Optional[int]:
    if "(" in block_id:
        return int(block_id[3:-1])
    return None


_PAIR_CACHE = {}


def _pair_indecomposable(bid_a: str, bid_b: str, a_beats_b: bool) -> bool:
    """Whether adding one vertex of each block type to the core, oriented as
    given, yields an indecomposable 5-vertex tournament.  Depends only on
    the block identifiers and the orientation."""
    key = (bid_a, bid_b, a_beats_b)
    got = _PAIR_CACHE.get(key)
    if got is not None:
        return got
    rows = [0] * 5
    for a, b in _CORE_ARCS:
        rows[a] |= 1 << b
    for v, bid in ((3, bid_a), (4, bid_b)):
        u = _block_u(bid)
        minus = bid.startswith("X-")
        if u is None:
            for w in range(3):
                if minus:
                    rows[v] |= 1 << w
                else:
                    rows[w] |= 1 << v
        else:
            if minus:
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
            for w in range(3):
                if w == u:
                    continue
                if rows[w] >> u & 1:
                    rows[w] |= 1 << v
                else:
                    rows[v] |= 1 << w
    if a_beats_b:
        rows[3] |= 1 << 4
    else:
        rows[4] |= 1 << 3
    got = bool(K.is_indecomposable_rows(5, np.array(rows, dtype=np.int64)))
    _PAIR_CACHE[key] = got
    return got


def assemble_family(spec: FamilySpec) -> Tournament:
    """Build the unique member matching a family spec.

    Vertices 0,1,2 carry the core 3-cycle; block vertices follow from 3
    upward, block by block in construction order.  Arcs forced by the block
    definitions, the chains, and the sandwich rules are laid down first;
    each remaining cross-block pair is oriented so that the corresponding
    5-vertex extension is indecomposable exactly when the pair must be an
    edge of the outside graph (an edge joins same-component vertices whose
    prescribed degrees sum past the half size).  Any still-undetermined
    pairs are resolved by exhaustive search; the results are verified
    against the structural test and must form a single isomorphy class.
    """
    fam = spec.family
    if fam not in FAMILIES:
        raise BadParameters(f"unknown family {fam!r}")
    if fam.endswith("dual"):
        base = FamilySpec(fam[0], spec.component_sizes, spec.chain_orders)
        return dual(assemble_family(base))
    bullets = _BULLETS[fam]
    sizes = spec.component_sizes
    if len(sizes) != len(bullets):
        raise BadParameters(
            f"family {fam} takes {len(bullets)} component sizes, got {len(sizes)}"
        )
    if not all(isinstance(m, int) and m >= 1 for m in sizes):
        raise BadParameters(f"component sizes must be positive integers, got {sizes}")

    verts = {}
    order = []
    nxt = 3
    for ci, pair in enumerate(bullets):
        for bid in pair:
            verts[bid] = tuple(range(nxt, nxt + sizes[ci]))
            nxt += sizes[ci]
            order.append(bid)
    n = nxt
    if n > 63:
        raise BudgetExceeded(f"assembled order {n} exceeds the 63-vertex cap")

    if spec.chain_orders is None:
        chains = {bid: verts[bid] for bid in order}
    else:
        if len(spec.chain_orders) != len(order):
            raise BadParameters(
                f"expected {len(order)} chain orders, got {len(spec.chain_orders)}"
            )
        chains = {}
        for bid, ch in zip(order, spec.chain_orders):
            if sorted(ch) != list(verts[bid]):
                raise BadParameters(
                    f"chain for block {bid} must permute {verts[bid]}, got {ch}"
                )
            chains[bid] = tuple(ch)

    rows = [0] * n

    def setarc(a, b):
        rows[a] |= 1 << b

    for a, b in _CORE_ARCS:
        setarc(a, b)
    for bid in order:
        u = _block_u(bid)
        minus = bid.startswith("X-")
        for v in verts[bid]:
            if u is None:
                for w in range(3):
                    setarc(v, w) if minus else setarc(w, v)
            else:
                setarc(v, u) if minus else setarc(u, v)
                for w in range(3):
                    if w == u:
                        continue
                    setarc(w, v) if rows[w] >> u & 1 else setarc(v, w)
    for bid in order:
        ch = chains[bid]
        for i in range(len(ch)):
            for j in range(i + 1, len(ch)):
                setarc(ch[i], ch[j])
    # every core vertex sits between the uniform blocks, and between the two
    # blocks copying it, so those block pairs are fully oriented
    if "X-" in verts and "X+" in verts:
        for v in verts["X-"]:
            for w in verts["X+"]:
                setarc(v, w)
    for u in range(3):
        lo, hi = f"X-({u})", f"X+({u})"
        if lo in verts and hi in verts:
            for v in verts[lo]:
                for w in verts[hi]:
                    setarc(v, w)

    block_of = {}
    comp_of = {}
    degree = {}
    for ci, pair in enumerate(bullets):
        m = sizes[ci]
        for bid in pair:
            ch = chains[bid]
            for pos, v in enumerate(ch):
                block_of[v] = bid
                comp_of[v] = ci
                o = m - 1 - pos
                degree[v] = o + 1 if _degree_adds_one(bid) else m - o

    free = []
    for a in range(3, n):
        for b in range(a + 1, n):
            if block_of[a] == block_of[b]:
                continue
            if rows[a] >> b & 1 or rows[b] >> a & 1:
                continue
            need_edge = (
                comp_of[a] == comp_of[b]
                and degree[a] + degree[b] >= sizes[comp_of[a]] + 1
            )
            fwd = _pair_indecomposable(block_of[a], block_of[b], True) == need_edge
            rev = _pair_indecomposable(block_of[a], block_of[b], False) == need_edge
            if fwd and rev:
                free.append((a, b))
            elif fwd:
                setarc(a, b)
            elif rev:
                setarc(b, a)
            else:
                raise InfeasibleSpec(
                    f"no orientation of {a},{b} fits the outside graph of {spec}"
                )
    if len(free) > _FREE_PAIR_CAP:
        raise BudgetExceeded(
            f"{len(free)} undetermined pairs is past the search cap for {spec}"
        )

    want_layout = sorted(
        ((frozenset(pair), sizes[ci]) for ci, pair in enumerate(bullets)),
        key=lambda x: (x[1], sorted(x[0])),
    )
    survivors = []
    for bits in range(1 << len(free)):
        cand = list(rows)
        for idx, (a, b) in enumerate(free):
            if bits >> idx & 1:
                cand[a] |= 1 << b
            else:
                cand[b] |= 1 << a
        t = from_rows(cand)
        if not is_indecomposable(t):
            continue
        rep = check_sayar(t, (0, 1, 2))
        if not rep.ok:
            continue
        layout = sorted(
            ((frozenset((c.q1, c.q2)), c.half_size) for c in rep.components),
            key=lambda x: (x[1], sorted(x[0])),
        )
        if layout != want_layout:
            continue
        survivors.append(t)
    if not survivors:
        raise InfeasibleSpec(f"no tournament realizes {spec}")
    if len({canonical_code(t) for t in survivors}) > 1:
        raise AmbiguousSpec(f"{spec} admits non-isomorphic realizations")
    return min(survivors, key=lambda t: t.rows)
