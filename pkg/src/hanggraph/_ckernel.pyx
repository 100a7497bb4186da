# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; the semantics twin of ``_pykernel`` for n <= 64.

Adjacency lives in 64-bit masks, distances in signed bytes.  Every public
function takes and returns the same plain Python values as the pure backend;
``kernels`` routes to whichever fits.  Anything over 64 vertices raises here
and is the pure backend's job.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memset

cdef extern from *:
    """
    #include <stdint.h>
    static inline int hg_popcount(uint64_t x) { return __builtin_popcountll(x); }
    static inline int hg_ctz(uint64_t x) { return __builtin_ctzll(x); }
    """
    int hg_popcount(uint64_t x) nogil
    int hg_ctz(uint64_t x) nogil

BACKEND = "compiled"

DEF MAXN = 64
DEF MAXN2 = 4096  # MAXN * MAXN

F_CONNECTED = 1
F_HANGABLE = 2
F_HANGABLE_TRIPLES = 4
F_SELF_CENTERED = 8
F_BLOCK_GRAPH = 16
F_TREE = 32

VERIFY_OK = 0
VERIFY_DISTANCE = 1
VERIFY_ECCENTRICITY = 2
VERIFY_DIAMETER = 3
VERIFY_VERTEX_PERIPHERY = 4
VERIFY_GRAPH_PERIPHERY = 5
VERIFY_HANGABLE = 6


cdef int _load_masks(object masks, uint64_t* adj) except -1:
    cdef Py_ssize_t n = len(masks)
    cdef Py_ssize_t i
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    for i in range(n):
        adj[i] = masks[i]
    return <int> n


cdef int _load_dist(object dist, int n, signed char* out) except -1:
    cdef Py_ssize_t i
    if n < 0 or n * n != len(dist):
        raise ValueError("distance matrix length does not match n")
    for i in range(n * n):
        out[i] = dist[i]
    return 0


cdef void _apsp_core(const uint64_t* adj, int n, signed char* dist) nogil:
    cdef int s, v, d
    cdef uint64_t seen, frontier, nxt, f
    cdef signed char* row
    for s in range(n):
        row = dist + s * n
        for v in range(n):
            row[v] = -1
        row[s] = 0
        seen = (<uint64_t> 1) << s
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = hg_ctz(f)
                f &= f - 1
                nxt |= adj[v]
            nxt &= ~seen
            if nxt == 0:
                break
            d += 1
            f = nxt
            while f:
                v = hg_ctz(f)
                f &= f - 1
                row[v] = <signed char> d
            seen |= nxt
            frontier = nxt


cdef bint _connected_core(const uint64_t* adj, int n) nogil:
    cdef uint64_t seen, frontier, nxt, f
    cdef uint64_t full
    cdef int v
    if n <= 1:
        return True
    full = (<uint64_t> 0 - 1) if n == MAXN else (((<uint64_t> 1) << n) - 1)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = hg_ctz(f)
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


cdef void _ecc_core(const signed char* dist, int n, signed char* ecc) nogil:
    cdef int v, u
    cdef signed char best
    for v in range(n):
        best = 0
        for u in range(n):
            if dist[v * n + u] > best:
                best = dist[v * n + u]
        ecc[v] = best


cdef int _subset_core(const signed char* dist, int n,
                      const signed char* ecc, signed char diam,
                      int* wv, int* wu) nogil:
    # returns 1 when hangable, else 0 with the first witness in (wv, wu)
    cdef int v, u
    cdef signed char ev
    for v in range(n):
        ev = ecc[v]
        for u in range(n):
            if dist[v * n + u] == ev and ecc[u] != diam:
                wv[0] = v
                wu[0] = u
                return 0
    return 1


cdef long _triples_core(const signed char* dist, int n,
                        const signed char* ecc, signed char diam,
                        bint exhaustive, int* wv, int* wu, int* ww) nogil:
    # returns violation count (0 means hangable); first triple in (wv, wu, ww)
    cdef int v, u, w
    cdef signed char ev, eu
    cdef long count = 0
    wv[0] = -1
    for v in range(n):
        ev = ecc[v]
        for u in range(n):
            if dist[v * n + u] != ev:
                continue
            eu = ecc[u]
            if eu == diam:
                continue
            for w in range(n):
                if dist[u * n + w] == eu:
                    count += 1
                    if wv[0] < 0:
                        wv[0] = v
                        wu[0] = u
                        ww[0] = w
                        if not exhaustive:
                            return count
    return count


cdef bint _block_core(const uint64_t* adj, int n) nogil:
    # iterative lowpoint DFS; connected input assumed
    cdef int disc[MAXN]
    cdef int low[MAXN]
    cdef int parent[MAXN]
    cdef int vstack[MAXN]
    cdef int eu_stack[MAXN * 32]
    cdef int ev_stack[MAXN * 32]
    cdef uint64_t rem[MAXN]
    cdef int top, etop, timer, v, w, u, a, b, x
    cdef uint64_t lowbit, bmask, mm
    if n <= 2:
        return True
    for v in range(n):
        disc[v] = -1
        parent[v] = -1
        rem[v] = adj[v]
    top = 0
    etop = 0
    vstack[0] = 0
    disc[0] = 0
    low[0] = 0
    timer = 1
    while top >= 0:
        v = vstack[top]
        if rem[v]:
            lowbit = rem[v] & (0 - rem[v])
            rem[v] ^= lowbit
            w = hg_ctz(lowbit)
            if disc[w] == -1:
                parent[w] = v
                disc[w] = timer
                low[w] = timer
                timer += 1
                eu_stack[etop] = v
                ev_stack[etop] = w
                etop += 1
                top += 1
                vstack[top] = w
            elif w != parent[v] and disc[w] < disc[v]:
                eu_stack[etop] = v
                ev_stack[etop] = w
                etop += 1
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            top -= 1
            if top < 0:
                break
            u = vstack[top]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                bmask = 0
                while True:
                    etop -= 1
                    a = eu_stack[etop]
                    b = ev_stack[etop]
                    bmask |= ((<uint64_t> 1) << a) | ((<uint64_t> 1) << b)
                    if a == u and b == v:
                        break
                mm = bmask
                while mm:
                    lowbit = mm & (0 - mm)
                    mm ^= lowbit
                    x = hg_ctz(lowbit)
                    if (adj[x] & bmask) != (bmask ^ ((<uint64_t> 1) << x)):
                        return False
    return True


cdef int _kmin_core(const signed char* dist, int n) nogil:
    cdef signed char dk[MAXN2]
    cdef signed char ecc[MAXN]
    cdef signed char diam, dk_diam
    cdef int i, k, wv, wu
    diam = 0
    for i in range(n * n):
        if dist[i] > diam:
            diam = dist[i]
    if diam <= 1:
        return 1
    _ecc_core(dist, n, ecc)
    if _subset_core(dist, n, ecc, diam, &wv, &wu):
        return 1
    for k in range(2, diam + 1):
        for i in range(n * n):
            dk[i] = <signed char> ((dist[i] + k - 1) // k)
        _ecc_core(dk, n, ecc)
        dk_diam = 0
        for i in range(n):
            if ecc[i] > dk_diam:
                dk_diam = ecc[i]
        if _subset_core(dk, n, ecc, dk_diam, &wv, &wu):
            return k
    return diam  # unreachable: the power at k = diameter is complete


# --- public wrappers ---------------------------------------------------------


def apsp(masks):
    cdef uint64_t adj[MAXN]
    cdef signed char dist[MAXN2]
    cdef int n = _load_masks(masks, adj)
    cdef int i
    _apsp_core(adj, n, dist)
    return [dist[i] for i in range(n * n)]


def is_connected_masks(masks):
    cdef uint64_t adj[MAXN]
    cdef int n = _load_masks(masks, adj)
    return bool(_connected_core(adj, n))


def hangable_subset(dist, int n):
    cdef signed char d[MAXN2]
    cdef signed char ecc[MAXN]
    cdef signed char diam
    cdef int wv = -1, wu = -1, i
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    _load_dist(dist, n, d)
    _ecc_core(d, n, ecc)
    diam = 0
    for i in range(n):
        if ecc[i] > diam:
            diam = ecc[i]
    if _subset_core(d, n, ecc, diam, &wv, &wu):
        return (True, -1, -1)
    return (False, wv, wu)


def hangable_triples(dist, int n, exhaustive=False):
    cdef signed char d[MAXN2]
    cdef signed char ecc[MAXN]
    cdef signed char diam
    cdef int wv = -1, wu = -1, ww = -1, i
    cdef long count
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    _load_dist(dist, n, d)
    _ecc_core(d, n, ecc)
    diam = 0
    for i in range(n):
        if ecc[i] > diam:
            diam = ecc[i]
    count = _triples_core(d, n, ecc, diam, bool(exhaustive), &wv, &wu, &ww)
    if count == 0:
        return (True, -1, -1, -1, 0)
    return (False, wv, wu, ww, count)


def is_block_graph_masks(masks):
    cdef uint64_t adj[MAXN]
    cdef int n = _load_masks(masks, adj)
    return bool(_block_core(adj, n))


def smallest_power_k(dist, int n):
    cdef signed char d[MAXN2]
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    _load_dist(dist, n, d)
    return _kmin_core(d, n)


def classify_bits(int n, bits):
    """Mirror of the pure classify_bits; n is capped so bits fit a word."""
    cdef uint64_t adj[MAXN]
    cdef signed char dist[MAXN2]
    cdef signed char ecc[MAXN]
    cdef uint64_t b = bits
    cdef int i, j, k, flags, wv, wu, ww, m
    cdef signed char diam, radius
    if n > 11:
        raise ValueError("compiled classify_bits supports at most 11 vertices")
    memset(adj, 0, sizeof(adj))
    k = 0
    m = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (b >> k) & 1:
                adj[i] |= (<uint64_t> 1) << j
                adj[j] |= (<uint64_t> 1) << i
                m += 1
            k += 1
    if not _connected_core(adj, n):
        return (0, -1, -1, -1)
    _apsp_core(adj, n, dist)
    _ecc_core(dist, n, ecc)
    diam = 0
    radius = 127
    for i in range(n):
        if ecc[i] > diam:
            diam = ecc[i]
        if ecc[i] < radius:
            radius = ecc[i]
    flags = F_CONNECTED
    if _subset_core(dist, n, ecc, diam, &wv, &wu):
        flags |= F_HANGABLE
    if _triples_core(dist, n, ecc, diam, False, &wv, &wu, &ww) == 0:
        flags |= F_HANGABLE_TRIPLES
    if radius == diam:
        flags |= F_SELF_CENTERED
    if _block_core(adj, n):
        flags |= F_BLOCK_GRAPH
    if m == n - 1:
        flags |= F_TREE
    return (flags, <int> diam, <int> radius, _kmin_core(dist, n))


def corona_verify(masks_g, dist_g, masks_h):
    """Mirror of the pure corona_verify."""
    cdef uint64_t adjg[MAXN]
    cdef uint64_t adjh[MAXN]
    cdef uint64_t adjc[MAXN]
    cdef signed char dg[MAXN2]
    cdef signed char dc[MAXN2]
    cdef signed char eccg[MAXN]
    cdef signed char eccc[MAXN]
    cdef int ng = _load_masks(masks_g, adjg)
    cdef int nh = _load_masks(masks_h, adjh)
    cdef int nc = ng * (1 + nh)
    cdef int u, v, x, y, p, q, want, got, base_u
    cdef signed char diam_g, diam_c, ecc_u
    cdef uint64_t expected, actual, hfull
    cdef int hang_c, hang_g, wv, wu
    if nc > MAXN:
        raise ValueError("corona too large for compiled kernel")
    _load_dist(dist_g, ng, dg)
    hfull = (((<uint64_t> 1) << nh) - 1) if nh < MAXN else (<uint64_t> 0 - 1)
    for v in range(ng):
        adjc[v] = adjg[v] | (hfull << (ng + v * nh))
        for x in range(nh):
            adjc[ng + v * nh + x] = ((<uint64_t> 1) << v) | (adjh[x] << (ng + v * nh))
    _apsp_core(adjc, nc, dc)

    diam_g = 0
    for u in range(ng * ng):
        if dg[u] > diam_g:
            diam_g = dg[u]

    for u in range(ng):
        for v in range(ng):
            want = dg[u * ng + v]
            if dc[u * nc + v] != want:
                return VERIFY_DISTANCE
            for y in range(nh):
                if dc[u * nc + (ng + v * nh + y)] != want + 1:
                    return VERIFY_DISTANCE
            for x in range(nh):
                p = ng + u * nh + x
                for y in range(nh):
                    q = ng + v * nh + y
                    got = dc[p * nc + q]
                    if u != v:
                        if got != want + 2:
                            return VERIFY_DISTANCE
                    elif x == y:
                        if got != 0:
                            return VERIFY_DISTANCE
                    elif (adjh[x] >> y) & 1:
                        if got != 1:
                            return VERIFY_DISTANCE
                    elif got != 2:
                        return VERIFY_DISTANCE

    _ecc_core(dc, nc, eccc)
    diam_c = 0
    for p in range(nc):
        if eccc[p] > diam_c:
            diam_c = eccc[p]
    if diam_c != diam_g + 2:
        return VERIFY_DIAMETER

    _ecc_core(dg, ng, eccg)
    for p in range(nc):
        base_u = p if p < ng else (p - ng) // nh
        ecc_u = eccg[base_u]
        expected = 0
        for v in range(ng):
            if dg[base_u * ng + v] == ecc_u:
                expected |= hfull << (ng + v * nh)
        actual = 0
        for q in range(nc):
            if dc[p * nc + q] == eccc[p]:
                actual |= (<uint64_t> 1) << q
        if actual != expected:
            return VERIFY_VERTEX_PERIPHERY

    expected = 0
    for v in range(ng):
        if eccg[v] == diam_g:
            expected |= hfull << (ng + v * nh)
    actual = 0
    for q in range(nc):
        if eccc[q] == diam_c:
            actual |= (<uint64_t> 1) << q
    if actual != expected:
        return VERIFY_GRAPH_PERIPHERY

    hang_c = _subset_core(dc, nc, eccc, diam_c, &wv, &wu)
    _ecc_core(dg, ng, eccg)
    hang_g = _subset_core(dg, ng, eccg, diam_g, &wv, &wu)
    if hang_c != hang_g:
        return VERIFY_HANGABLE
    return VERIFY_OK


def cartesian_verify(masks_g, dist_g, masks_h, dist_h):
    """Mirror of the pure cartesian_verify."""
    cdef uint64_t adjg[MAXN]
    cdef uint64_t adjh[MAXN]
    cdef uint64_t adjp[MAXN]
    cdef uint64_t spread[MAXN]
    cdef signed char dg[MAXN2]
    cdef signed char dh[MAXN2]
    cdef signed char dp[MAXN2]
    cdef signed char eccg[MAXN]
    cdef signed char ecch[MAXN]
    cdef signed char eccp[MAXN]
    cdef int ng = _load_masks(masks_g, adjg)
    cdef int nh = _load_masks(masks_h, adjh)
    cdef int np = ng * nh
    cdef int a, b, c, d, p, q, v
    cdef uint64_t f, lowbit, expected, actual
    cdef signed char diam_g, diam_h
    cdef int hup, hg, hh, wv, wu
    if np > MAXN:
        raise ValueError("box product too large for compiled kernel")
    _load_dist(dist_g, ng, dg)
    _load_dist(dist_h, nh, dh)
    for a in range(ng):
        f = adjg[a]
        spread[a] = 0
        while f:
            lowbit = f & (0 - f)
            f ^= lowbit
            spread[a] |= (<uint64_t> 1) << (hg_ctz(lowbit) * nh)
    for a in range(ng):
        for b in range(nh):
            adjp[a * nh + b] = (adjh[b] << (a * nh)) | (spread[a] << b)
    _apsp_core(adjp, np, dp)

    for a in range(ng):
        for b in range(nh):
            p = a * nh + b
            for c in range(ng):
                for d in range(nh):
                    if dp[p * np + c * nh + d] != dg[a * ng + c] + dh[b * nh + d]:
                        return VERIFY_DISTANCE

    _ecc_core(dg, ng, eccg)
    _ecc_core(dh, nh, ecch)
    _ecc_core(dp, np, eccp)
    for a in range(ng):
        for b in range(nh):
            if eccp[a * nh + b] != eccg[a] + ecch[b]:
                return VERIFY_ECCENTRICITY

    diam_g = 0
    for a in range(ng):
        if eccg[a] > diam_g:
            diam_g = eccg[a]
    diam_h = 0
    for b in range(nh):
        if ecch[b] > diam_h:
            diam_h = ecch[b]
    for p in range(np):
        if eccp[p] > diam_g + diam_h:
            return VERIFY_DIAMETER
    actual = 0
    for p in range(np):
        if eccp[p] == diam_g + diam_h:
            actual = 1
            break
    if actual == 0:
        return VERIFY_DIAMETER

    for a in range(ng):
        for b in range(nh):
            p = a * nh + b
            expected = 0
            for c in range(ng):
                if dg[a * ng + c] != eccg[a]:
                    continue
                for d in range(nh):
                    if dh[b * nh + d] == ecch[b]:
                        expected |= (<uint64_t> 1) << (c * nh + d)
            actual = 0
            for q in range(np):
                if dp[p * np + q] == eccp[p]:
                    actual |= (<uint64_t> 1) << q
            if actual != expected:
                return VERIFY_VERTEX_PERIPHERY

    expected = 0
    for c in range(ng):
        if eccg[c] != diam_g:
            continue
        for d in range(nh):
            if ecch[d] == diam_h:
                expected |= (<uint64_t> 1) << (c * nh + d)
    actual = 0
    for q in range(np):
        if eccp[q] == diam_g + diam_h:
            actual |= (<uint64_t> 1) << q
    if actual != expected:
        return VERIFY_GRAPH_PERIPHERY

    hup = _subset_core(dp, np, eccp, diam_g + diam_h, &wv, &wu)
    hg = _subset_core(dg, ng, eccg, diam_g, &wv, &wu)
    hh = _subset_core(dh, nh, ecch, diam_h, &wv, &wu)
    if hup != (hg and hh):
        return VERIFY_HANGABLE
    return VERIFY_OK


def join_verify(masks_g, masks_h):
    """Mirror of the pure join_verify."""
    cdef uint64_t adjg[MAXN]
    cdef uint64_t adjh[MAXN]
    cdef uint64_t adjj[MAXN]
    cdef signed char dj[MAXN2]
    cdef signed char eccj[MAXN]
    cdef int ng = _load_masks(masks_g, adjg)
    cdef int nh = _load_masks(masks_h, adjh)
    cdef int nj = ng + nh
    cdef uint64_t gfull, hfull, full
    cdef int i, universal, wv, wu
    cdef bint complete, predicted, actual
    cdef signed char diam
    if nj > MAXN:
        raise ValueError("join too large for compiled kernel")
    gfull = (((<uint64_t> 1) << ng) - 1) if ng < MAXN else (<uint64_t> 0 - 1)
    hfull = (((<uint64_t> 1) << nh) - 1) if nh < MAXN else (<uint64_t> 0 - 1)
    full = (((<uint64_t> 1) << nj) - 1) if nj < MAXN else (<uint64_t> 0 - 1)
    for i in range(ng):
        adjj[i] = adjg[i] | (hfull << ng)
    for i in range(nh):
        adjj[ng + i] = (adjh[i] << ng) | gfull
    universal = 0
    for i in range(nj):
        if adjj[i] == (full ^ ((<uint64_t> 1) << i)):
            universal += 1
    complete = universal == nj
    predicted = complete or universal <= 1
    _apsp_core(adjj, nj, dj)
    _ecc_core(dj, nj, eccj)
    diam = 0
    for i in range(nj):
        if eccj[i] > diam:
            diam = eccj[i]
    actual = _subset_core(dj, nj, eccj, diam, &wv, &wu)
    return VERIFY_OK if predicted == actual else VERIFY_HANGABLE
