"""Hot loops over bitmask tournament representations.

A tournament enters a kernel as ``(n, rows)`` where ``rows`` is an int64 array
and bit ``j`` of ``rows[i]`` is set iff vertex ``i`` beats vertex ``j``.  All
kernels assume n <= 63 so every mask fits a signed 64-bit lane.  Scratch
arrays are passed in by the few callers that sit inside per-tournament loops;
everything else allocates locally.

Compiled with numba when available; the same source runs interpreted when
TOURNEY_JIT=0 (see _jit).
"""
from __future__ import annotations

import numpy as np

from ._jit import njit


@njit(cache=True)
def popcount64(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def is_interval_mask(n, rows, smask):
    # every outside vertex beats all of smask or none of it
    for x in range(n):
        if (smask >> x) & 1:
            continue
        inter = rows[x] & smask
        if inter != 0 and inter != smask:
            return False
    return True


@njit(cache=True)
def is_indecomposable_rows(n, rows):
    if n <= 2:
        return True
    full = (1 << n) - 1
    for sm in range(3, full):
        if sm & (sm - 1) == 0:
            continue
        if is_interval_mask(n, rows, sm):
            return False
    return True


@njit(cache=True)
def collect_interval_masks(n, rows, out):
    cnt = 0
    full = (1 << n) - 1
    for sm in range(3, full):
        if sm & (sm - 1) == 0:
            continue
        if is_interval_mask(n, rows, sm):
            out[cnt] = sm
            cnt += 1
    return cnt


@njit(cache=True)
def induce_rows(n, rows, smask, out):
    # relabel the members of smask to 0.. in ascending label order
    a = 0
    for v in range(n):
        if not (smask >> v) & 1:
            continue
        rv = rows[v]
        nr = 0
        b = 0
        for w in range(n):
            if not (smask >> w) & 1:
                continue
            if (rv >> w) & 1:
                nr |= 1 << b
            b += 1
        out[a] = nr
        a += 1
    return a


@njit(cache=True)
def own_colex_bits(n, rows, out):
    # pair (i, j), i < j, sits at position j*(j-1)/2 + i
    p = 0
    for j in range(1, n):
        for i in range(j):
            out[p] = (rows[i] >> j) & 1
            p += 1
    return p


@njit(cache=True)
def is_canonical_rows(n, rows):
    """True iff rows is the colex-lexicographically minimal labeling.

    Walks partial relabelings depth-first, keeping only branches whose bit
    blocks tie the tournament's own bits; any strictly smaller block settles
    the question immediately.
    """
    m = n * (n - 1) // 2
    own = np.empty(m, np.uint8)
    own_colex_bits(n, rows, own)
    perm = np.empty(n, np.int64)
    choice = np.empty(n, np.int64)
    used = 0
    d = 0
    choice[0] = -1
    while d >= 0:
        found = -1
        v = choice[d] + 1
        while v < n:
            if (used >> v) & 1 == 0:
                base = d * (d - 1) // 2
                ok = True
                for i in range(d):
                    cb = (rows[perm[i]] >> v) & 1
                    ob = own[base + i]
                    if cb < ob:
                        return False
                    if cb > ob:
                        ok = False
                        break
                if ok:
                    found = v
                    break
            v += 1
        if found >= 0:
            choice[d] = found
            perm[d] = found
            if d == n - 1:
                # complete tie: an automorphic relabeling, keep scanning
                continue
            used |= 1 << found
            d += 1
            choice[d] = -1
        else:
            d -= 1
            if d >= 0:
                used &= ~(1 << perm[d])
    return True


@njit(cache=True)
def _improve_colex(n, rows, best, cur, perm, choice):
    """One bounded search pass: overwrite best with any smaller string found."""
    used = 0
    d = 0
    choice[0] = -1
    while d >= 0:
        found = -1
        v = choice[d] + 1
        while v < n:
            if (used >> v) & 1 == 0:
                base = d * (d - 1) // 2
                state = 0
                for i in range(d):
                    cb = (rows[perm[i]] >> v) & 1
                    ob = best[base + i]
                    if cb != ob:
                        state = 1 if cb > ob else -1
                        break
                if state < 0:
                    # strictly smaller prefix: commit v, then finish greedily
                    perm[d] = v
                    used |= 1 << v
                    for i in range(d):
                        cur[base + i] = (rows[perm[i]] >> v) & 1
                    for dd in range(d + 1, n):
                        bestw = -1
                        for w in range(n):
                            if (used >> w) & 1:
                                continue
                            if bestw < 0:
                                bestw = w
                                continue
                            for i in range(dd):
                                aw = (rows[perm[i]] >> w) & 1
                                bw = (rows[perm[i]] >> bestw) & 1
                                if aw != bw:
                                    if aw < bw:
                                        bestw = w
                                    break
                        b2 = dd * (dd - 1) // 2
                        perm[dd] = bestw
                        used |= 1 << bestw
                        for i in range(dd):
                            cur[b2 + i] = (rows[perm[i]] >> bestw) & 1
                    # positions before this block already tie best exactly
                    mlen = n * (n - 1) // 2
                    for p in range(base, mlen):
                        best[p] = cur[p]
                    return True
                if state == 0:
                    found = v
                    break
            v += 1
        if found >= 0:
            choice[d] = found
            perm[d] = found
            if d == n - 1:
                continue
            used |= 1 << found
            d += 1
            choice[d] = -1
        else:
            d -= 1
            if d >= 0:
                used &= ~(1 << perm[d])
    return False


@njit(cache=True)
def min_colex_bits(n, rows, best):
    """Fill best (uint8, length n*(n-1)/2) with the minimal colex bitstring."""
    own_colex_bits(n, rows, best)
    m = n * (n - 1) // 2
    cur = np.empty(m if m > 0 else 1, np.uint8)
    perm = np.empty(n, np.int64)
    choice = np.empty(n, np.int64)
    while _improve_colex(n, rows, best, cur, perm, choice):
        pass


@njit(cache=True)
def extend_parent(npar, prow, kids):
    """Append a new top vertex in every orientation pattern; keep the
    patterns whose child labeling is canonical.  kids must hold
    2**npar * (npar+1) lanes; returns the accepted child count."""
    nc = npar + 1
    crows = np.empty(nc, np.int64)
    cnt = 0
    for pat in range(1 << npar):
        for i in range(npar):
            crows[i] = prow[i]
        crows[npar] = 0
        for i in range(npar):
            if (pat >> i) & 1:
                crows[i] |= 1 << npar
            else:
                crows[npar] |= 1 << i
        if is_canonical_rows(nc, crows):
            base = cnt * nc
            for i in range(nc):
                kids[base + i] = crows[i]
            cnt += 1
    return cnt


@njit(cache=True)
def support_mask_rows(n, rows):
    # x is non-critical iff the tournament minus x stays indecomposable
    sup = 0
    sub = np.empty(n, np.int64)
    full = (1 << n) - 1
    for x in range(n):
        ns = induce_rows(n, rows, full ^ (1 << x), sub)
        if is_indecomposable_rows(ns, sub):
            sup |= 1 << x
    return sup


@njit(cache=True)
def is_transitive_rows(n, rows):
    for a in range(n):
        for b in range(a + 1, n):
            x = (rows[a] >> b) & 1
            for c in range(b + 1, n):
                y = (rows[b] >> c) & 1
                z = (rows[c] >> a) & 1
                if x == y and y == z:
                    return False
    return True


@njit(cache=True)
def sub5_matches(rows, v0, v1, v2, v3, v4, code10, degpack, sub, vbuf):
    """Is the induced 5-subtournament isomorphic to the 10-bit target code?

    degpack packs the target's sorted out-degree sequence (3 bits a lane) and
    acts as a cheap prefilter; the exact test takes the minimum colex value
    over all 120 relabelings.
    """
    vbuf[0] = v0
    vbuf[1] = v1
    vbuf[2] = v2
    vbuf[3] = v3
    vbuf[4] = v4
    for p in range(5):
        rp = rows[vbuf[p]]
        r = 0
        for q in range(5):
            if q != p and (rp >> vbuf[q]) & 1:
                r |= 1 << q
        sub[p] = r
    # sorted out-degree prefilter
    d0 = popcount64(sub[0])
    d1 = popcount64(sub[1])
    d2 = popcount64(sub[2])
    d3 = popcount64(sub[3])
    d4 = popcount64(sub[4])
    # insertion sort of five small ints
    degs = vbuf  # reuse the scratch
    degs[0] = d0
    degs[1] = d1
    degs[2] = d2
    degs[3] = d3
    degs[4] = d4
    for i in range(1, 5):
        key = degs[i]
        j = i - 1
        while j >= 0 and degs[j] > key:
            degs[j + 1] = degs[j]
            j -= 1
        degs[j + 1] = key
    pk = 0
    for i in range(5):
        pk += degs[i] << (3 * i)
    if pk != degpack:
        return False
    best = 1 << 11
    for p0 in range(5):
        for p1 in range(5):
            if p1 == p0:
                continue
            a01 = (sub[p0] >> p1) & 1
            for p2 in range(5):
                if p2 == p0 or p2 == p1:
                    continue
                part2 = (
                    a01 * 512
                    + ((sub[p0] >> p2) & 1) * 256
                    + ((sub[p1] >> p2) & 1) * 128
                )
                for p3 in range(5):
                    if p3 == p0 or p3 == p1 or p3 == p2:
                        continue
                    p4 = 10 - p0 - p1 - p2 - p3
                    val = (
                        part2
                        + ((sub[p0] >> p3) & 1) * 64
                        + ((sub[p1] >> p3) & 1) * 32
                        + ((sub[p2] >> p3) & 1) * 16
                        + ((sub[p0] >> p4) & 1) * 8
                        + ((sub[p1] >> p4) & 1) * 4
                        + ((sub[p2] >> p4) & 1) * 2
                        + ((sub[p3] >> p4) & 1)
                    )
                    if val < best:
                        best = val
    return best == code10


@njit(cache=True)
def w5_scan(n, rows, code10, degpack, witness):
    """Mask of vertices covered by some 5-subset matching the target code.

    witness must come in filled with -1; each vertex keeps the subset mask of
    the lexicographically first 5-subset that covers it.
    """
    full = (1 << n) - 1
    wmask = 0
    sub = np.empty(5, np.int64)
    vbuf = np.empty(5, np.int64)
    for a in range(n - 4):
        for b in range(a + 1, n - 3):
            for c in range(b + 1, n - 2):
                for d in range(c + 1, n - 1):
                    for e in range(d + 1, n):
                        if sub5_matches(rows, a, b, c, d, e, code10, degpack, sub, vbuf):
                            sm = (1 << a) | (1 << b) | (1 << c) | (1 << d) | (1 << e)
                            if witness[a] < 0:
                                witness[a] = sm
                            if witness[b] < 0:
                                witness[b] = sm
                            if witness[c] < 0:
                                witness[c] = sm
                            if witness[d] < 0:
                                witness[d] = sm
                            if witness[e] < 0:
                                witness[e] = sm
                            wmask |= sm
                            if wmask == full:
                                return wmask
    return wmask


@njit(cache=True)
def embed_map(pn, prows, hn, hrows, out_map):
    """First arc-preserving injection of the pattern into the host, mapping
    pattern vertices in label order to ascending host candidates.  Returns
    True and fills out_map, or returns False."""
    if pn > hn:
        return False
    pout = np.empty(pn, np.int64)
    pin = np.empty(pn, np.int64)
    for i in range(pn):
        pout[i] = popcount64(prows[i])
        pin[i] = pn - 1 - pout[i]
    hout = np.empty(hn, np.int64)
    hin = np.empty(hn, np.int64)
    for i in range(hn):
        hout[i] = popcount64(hrows[i])
        hin[i] = hn - 1 - hout[i]
    choice = np.empty(pn, np.int64)
    used = 0
    d = 0
    choice[0] = -1
    while d >= 0:
        found = -1
        v = choice[d] + 1
        while v < hn:
            if (used >> v) & 1 == 0 and hout[v] >= pout[d] and hin[v] >= pin[d]:
                ok = True
                for i in range(d):
                    if ((prows[i] >> d) & 1) != ((hrows[out_map[i]] >> v) & 1):
                        ok = False
                        break
                if ok:
                    found = v
                    break
            v += 1
        if found >= 0:
            choice[d] = found
            out_map[d] = found
            if d == pn - 1:
                return True
            used |= 1 << found
            d += 1
            choice[d] = -1
        else:
            d -= 1
            if d >= 0:
                used &= ~(1 << out_map[d])
    return False


@njit(cache=True)
def minimal_for_pair_rows(n, rows, x, y):
    """No proper superset of {x, y} with at least 3 vertices induces an
    indecomposable subtournament."""
    full = (1 << n) - 1
    pairm = (1 << x) | (1 << y)
    if n > 3:
        # cyclic triangles first: they kill almost every pair cheaply
        for z in range(n):
            if (pairm >> z) & 1:
                continue
            axy = (rows[x] >> y) & 1
            ayz = (rows[y] >> z) & 1
            azx = (rows[z] >> x) & 1
            if axy == ayz and ayz == azx:
                return False
    sub = np.empty(n, np.int64)
    for sm in range(full):
        if sm & pairm != pairm:
            continue
        if popcount64(sm) < 4:
            continue
        ns = induce_rows(n, rows, sm, sub)
        if is_indecomposable_rows(ns, sub):
            return False
    return True


@njit(cache=True)
def classify_outside(n, rows, xmask, kind_out, u_out):
    """Sort each outside vertex into its slot relative to the core X.

    kind codes: -1 member of X, 0 ext, 1 beats all of X, 2 beaten by all of X,
    3 copies u's arcs and loses to u, 4 copies u's arcs and beats... the other
    way around: 3 means v -> u, 4 means u -> v.  u_out holds u or -1.
    """
    for v in range(n):
        if (xmask >> v) & 1:
            kind_out[v] = -1
            u_out[v] = -1
            continue
        beat = rows[v] & xmask
        if beat == xmask:
            kind_out[v] = 1
            u_out[v] = -1
        elif beat == 0:
            kind_out[v] = 2
            u_out[v] = -1
        else:
            kind_out[v] = 0
            u_out[v] = -1
            for u in range(n):
                if (xmask >> u) & 1 == 0:
                    continue
                ok = True
                for w in range(n):
                    if w == u or (xmask >> w) & 1 == 0:
                        continue
                    if ((rows[w] >> v) & 1) != ((rows[w] >> u) & 1):
                        ok = False
                        break
                if ok:
                    if (rows[u] >> v) & 1:
                        kind_out[v] = 4
                    else:
                        kind_out[v] = 3
                    u_out[v] = u
                    break


@njit(cache=True)
def outside_edges(n, rows, xmask, pairs_out):
    """Pairs {x, y} outside X whose 5-vertex extension T[X + {x,y}] is
    indecomposable.  Returns the pair count; pairs_out needs n*n lanes."""
    cnt = 0
    sub = np.empty(n, np.int64)
    for x in range(n):
        if (xmask >> x) & 1:
            continue
        for y in range(x + 1, n):
            if (xmask >> y) & 1:
                continue
            sm = xmask | (1 << x) | (1 << y)
            ns = induce_rows(n, rows, sm, sub)
            if is_indecomposable_rows(ns, sub):
                pairs_out[2 * cnt] = x
                pairs_out[2 * cnt + 1] = y
                cnt += 1
    return cnt


@njit(cache=True)
def census_flags(n, reps_flat, count, code10, degpack,
                 indec_out, suppsize_out, suppmask_out, w5mask_out, w5size_out):
    """Batch per-representative invariants for one enumeration level."""
    rows = np.empty(n, np.int64)
    wit = np.empty(n, np.int64)
    for r in range(count):
        base = r * n
        for i in range(n):
            rows[i] = reps_flat[base + i]
        ind = is_indecomposable_rows(n, rows)
        indec_out[r] = 1 if ind else 0
        if ind and n >= 3:
            sm = support_mask_rows(n, rows)
            suppmask_out[r] = sm
            suppsize_out[r] = popcount64(sm)
        else:
            suppmask_out[r] = -1
            suppsize_out[r] = -1
        if n >= 5:
            for i in range(n):
                wit[i] = -1
            wm = w5_scan(n, rows, code10, degpack, wit)
        else:
            wm = 0
        w5mask_out[r] = wm
        w5size_out[r] = popcount64(wm)


@njit(cache=True)
def own_codes(n, reps_flat, count, out):
    # out is (count, n*(n-1)/2) uint8; row r gets rep r's colex bits
    for r in range(count):
        base = r * n
        p = 0
        for j in range(1, n):
            for i in range(j):
                out[r, p] = (reps_flat[base + i] >> j) & 1
                p += 1
