"""Five-vertex window analysis.

The window pattern is the 5-vertex tournament gen_critical("W", 5): a total
order on four vertices plus a top vertex beating exactly the even positions.
A vertex of t belongs to the window set when some 5-subset through it
induces that pattern.  Membership of the block families is equivalent to an
indecomposable tournament whose window set misses exactly two vertices; for
those, the component invariant is the least outside-component count over
admissible 3-cycle cores.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .core import Tournament, VertexSet, canonical_code, make_tournament, subtournament
from .decomposition import (
    connected_components,
    is_indecomposable,
    outside_graph,
    support,
)
from .errors import (
    BadSize,
    NoEligibleVertex,
    NotFamilyT,
    NotIndecomposable,
    SelfArc,
    VertexOutOfRange,
)
from .generators import gen_critical

_W5 = gen_critical("W", 5)
_C3 = make_tournament(3, ((0, 1), (1, 2), (2, 0)))
_C3_CODE = canonical_code(_C3)


def _pattern_keys(t: Tournament):
    bits = np.empty(10, dtype=np.uint8)
    K.min_colex_bits(5, t.np_rows(), bits)
    code10 = 0
    for i in range(10):
        code10 = code10 << 1 | int(bits[i])
    degpack = 0
    for i, d in enumerate(sorted(r.bit_count() for r in t.rows)):
        degpack |= d << (3 * i)
    return code10, degpack


_W5_CODE10, _W5_DEGPACK = _pattern_keys(_W5)


def embeds(pattern: Tournament, host: Tournament, with_witness: bool = False):
    """Whether host contains an induced copy of pattern.

    With with_witness=True returns (flag, vertex set of one copy or None).
    """
    vmap = np.empty(max(pattern.n, 1), dtype=np.int64)
    ok = bool(
        K.embed_map(pattern.n, pattern.np_rows(), host.n, host.np_rows(), vmap)
    )
    if not with_witness:
        return ok
    if not ok:
        return False, None
    return True, frozenset(int(vmap[i]) for i in range(pattern.n))


@dataclass(frozen=True)
class W5Report:
    """w5_vertices holds the window set; witness maps each member to the
    lexicographically first 5-subset through it inducing the pattern."""

    w5_vertices: VertexSet
    witness: dict


def w5_vertex_set(t: Tournament) -> W5Report:
    """Window set of t with one witness subset per member."""
    if t.n < 5:
        return W5Report(frozenset(), {})
    wit = np.full(t.n, -1, dtype=np.int64)
    wmask = int(K.w5_scan(t.n, t.np_rows(), _W5_CODE10, _W5_DEGPACK, wit))
    members = [v for v in range(t.n) if wmask >> v & 1]
    witness = {}
    for v in members:
        smask = int(wit[v])
        witness[v] = frozenset(x for x in range(t.n) if smask >> x & 1)
    return W5Report(frozenset(members), witness)


def is_family_T_member(t: Tournament) -> bool:
    """Indecomposable with exactly two vertices outside the window set."""
    if t.n < 3 or not is_indecomposable(t):
        return False
    return len(w5_vertex_set(t).w5_vertices) == t.n - 2


def c_invariant(t: Tournament) -> int:
    """Least outside-component count over cores sigma(t) + {x} inducing a
    3-cycle, x ranging over the window set."""
    if not is_family_T_member(t):
        raise NotFamilyT("the component invariant needs a family member")
    sig = support(t)
    best = None
    for x in sorted(w5_vertex_set(t).w5_vertices):
        core = sig | {x}
        if len(core) != 3:
            continue
        sub, _ = subtournament(t, core)
        if canonical_code(sub) != _C3_CODE:
            continue
        k = len(connected_components(outside_graph(t, core)))
        if best is None or k < best:
            best = k
    if best is None:
        raise NoEligibleVertex("no window vertex completes the support to a 3-cycle")
    return best


def is_minimal_for_pair(t: Tournament, x: int, y: int) -> bool:
    """No proper subset through both x and y of size at least 3 induces an
    indecomposable subtournament."""
    x, y = int(x), int(y)
    for v in (x, y):
        if not 0 <= v < t.n:
            raise VertexOutOfRange(f"vertex {v} out of range for order {t.n}")
    if x == y:
        raise SelfArc("a pair needs two distinct vertices")
    if t.n < 3:
        raise BadSize(f"minimality needs at least 3 vertices, got {t.n}")
    if not is_indecomposable(t):
        raise NotIndecomposable("minimality is defined on indecomposable tournaments")
    return bool(K.minimal_for_pair_rows(t.n, t.np_rows(), x, y))
