"""Pure-Python kernels over bitmask adjacency.

A graph on n vertices is a sequence ``masks`` of n ints where bit j of
``masks[i]`` is set iff ij is an edge.  Distance matrices are flat row-major
lists of length n*n with -1 for unreachable pairs.  Everything here is plain
data in and plain data out so the compiled twin in ``_ckernel`` can mirror the
signatures exactly; ``kernels`` picks between the two.

Python ints double as unbounded bitsets, so this backend has no vertex limit.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "pure"

# classify_bits flag bits
F_CONNECTED = 1
F_HANGABLE = 2
F_HANGABLE_TRIPLES = 4
F_SELF_CENTERED = 8
F_BLOCK_GRAPH = 16
F_TREE = 32

# corona_verify / cartesian_verify failure codes, 0 = all statements hold
VERIFY_OK = 0
VERIFY_DISTANCE = 1
VERIFY_ECCENTRICITY = 2
VERIFY_DIAMETER = 3
VERIFY_VERTEX_PERIPHERY = 4
VERIFY_GRAPH_PERIPHERY = 5
VERIFY_HANGABLE = 6


def masks_from_bits(n: int, bits: int) -> list[int]:
    """Decode an edge-subset index into adjacency masks.

    Bit k of ``bits`` is the k-th vertex pair in the order
    (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
    """
    masks = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (bits >> k) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return masks


def bits_from_masks(masks: Sequence[int]) -> int:
    n = len(masks)
    bits = 0
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (masks[i] >> j) & 1:
                bits |= 1 << k
            k += 1
    return bits


def is_connected_masks(masks: Sequence[int]) -> bool:
    n = len(masks)
    if n <= 1:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def apsp(masks: Sequence[int]) -> list[int]:
    """All-pairs BFS distances, flat row-major, -1 where unreachable."""
    n = len(masks)
    dist = [-1] * (n * n)
    for s in range(n):
        base = s * n
        dist[base + s] = 0
        seen = frontier = 1 << s
        d = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                break
            d += 1
            f = nxt
            while f:
                low = f & -f
                dist[base + low.bit_length() - 1] = d
                f ^= low
            seen |= nxt
            frontier = nxt
    return dist


def _eccentricities(dist: Sequence[int], n: int) -> list[int]:
    return [max(dist[i * n:(i + 1) * n]) for i in range(n)]


def hangable_subset(dist: Sequence[int], n: int) -> tuple[bool, int, int]:
    """Peripheral-containment check on a connected distance matrix.

    Returns (True, -1, -1), or (False, v, u) for the lexicographically first
    pair where u attains v's eccentricity but not the diameter.
    """
    ecc = _eccentricities(dist, n)
    diam = max(ecc)
    for v in range(n):
        base = v * n
        ev = ecc[v]
        for u in range(n):
            if dist[base + u] == ev and ecc[u] != diam:
                return (False, v, u)
    return (True, -1, -1)


def hangable_triples(dist: Sequence[int], n: int,
                     exhaustive: bool = False) -> tuple[bool, int, int, int, int]:
    """Farthest-of-farthest check on a connected distance matrix.

    A violation is a triple (v, u, w) with u farthest from v, w farthest from
    u, and d(u, w) below the diameter.  Returns
    (ok, v, u, w, violations) with the lexicographically first triple and, in
    exhaustive mode, the total violation count (otherwise the scan stops at
    the first hit and reports 1).
    """
    ecc = _eccentricities(dist, n)
    diam = max(ecc)
    first = None
    count = 0
    for v in range(n):
        base = v * n
        ev = ecc[v]
        for u in range(n):
            if dist[base + u] != ev:
                continue
            eu = ecc[u]
            if eu == diam:
                continue
            ubase = u * n
            for w in range(n):
                if dist[ubase + w] == eu:
                    count += 1
                    if first is None:
                        first = (v, u, w)
                        if not exhaustive:
                            return (False, v, u, w, count)
    if first is None:
        return (True, -1, -1, -1, 0)
    return (False, first[0], first[1], first[2], count)


def is_block_graph_masks(masks: Sequence[int]) -> bool:
    """True iff every biconnected block is a clique.  Requires connected input."""
    n = len(masks)
    if n <= 2:
        return True
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    rem = list(masks)
    estack: list[tuple[int, int]] = []
    stack = [0]
    disc[0] = low[0] = 0
    timer = 1
    while stack:
        v = stack[-1]
        if rem[v]:
            lowbit = rem[v] & -rem[v]
            rem[v] ^= lowbit
            w = lowbit.bit_length() - 1
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                estack.append((v, w))
                stack.append(w)
            elif w != parent[v] and disc[w] < disc[v]:
                estack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if not stack:
                break
            u = stack[-1]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                bmask = 0
                while True:
                    a, b = estack.pop()
                    bmask |= (1 << a) | (1 << b)
                    if (a, b) == (u, v):
                        break
                mm = bmask
                while mm:
                    lb = mm & -mm
                    mm ^= lb
                    x = lb.bit_length() - 1
                    if masks[x] & bmask != bmask ^ (1 << x):
                        return False
    return True


def smallest_power_k(dist: Sequence[int], n: int) -> int:
    """Least k for which the ceil(d/k) distance transform is hangable.

    For a connected graph the k-th power has d_{G^k}(u, v) = ceil(d_G(u, v)/k),
    so powers never need rebuilding here.  Always terminates by k = diameter,
    where the power is complete.
    """
    diam = max(dist)
    if diam <= 1:
        return 1
    if hangable_subset(dist, n)[0]:
        return 1
    for k in range(2, diam + 1):
        dk = [(d + k - 1) // k for d in dist]
        if hangable_subset(dk, n)[0]:
            return k
    raise AssertionError("power at k = diameter is complete, hence hangable")


def classify_bits(n: int, bits: int) -> tuple[int, int, int, int]:
    """One-shot classification of the edge subset ``bits`` on n vertices.

    Returns (flags, diameter, radius, smallest_hangable_power); the last three
    are -1 when the graph is disconnected (flags then carries no other bits).
    """
    masks = masks_from_bits(n, bits)
    if not is_connected_masks(masks):
        return (0, -1, -1, -1)
    dist = apsp(masks)
    ecc = _eccentricities(dist, n)
    diam = max(ecc)
    radius = min(ecc)
    flags = F_CONNECTED
    if hangable_subset(dist, n)[0]:
        flags |= F_HANGABLE
    if hangable_triples(dist, n)[0]:
        flags |= F_HANGABLE_TRIPLES
    if radius == diam:
        flags |= F_SELF_CENTERED
    if is_block_graph_masks(masks):
        flags |= F_BLOCK_GRAPH
    m = sum(mask.bit_count() for mask in masks) // 2
    if m == n - 1:
        flags |= F_TREE
    return (flags, diam, radius, smallest_power_k(dist, n))


def _corona_masks(masks_g: Sequence[int], masks_h: Sequence[int]) -> list[int]:
    ng = len(masks_g)
    nh = len(masks_h)
    out = list(masks_g)
    hfull = (1 << nh) - 1
    for v in range(ng):
        off = ng + v * nh
        out[v] |= hfull << off
        for x in range(nh):
            out.append((1 << v) | (masks_h[x] << off))
    return out


def corona_verify(masks_g: Sequence[int], dist_g: Sequence[int],
                  masks_h: Sequence[int]) -> int:
    """BFS on the corona versus its closed forms; 0 iff every statement holds.

    Requires the base graph connected with at least 2 vertices.  Vertex v of
    the base keeps id v; copy x attached to v gets id ng + v*nh + x.  Checked
    in order: pairwise distances (including copies sharing a base), diameter,
    every vertex periphery, the graph periphery, and agreement of the two
    hangability verdicts (corona versus base).
    """
    ng = len(masks_g)
    nh = len(masks_h)
    nc = ng * (1 + nh)
    cmasks = _corona_masks(masks_g, masks_h)
    dist_c = apsp(cmasks)

    def cid(v: int, x: int) -> int:
        return ng + v * nh + x

    diam_g = max(dist_g)
    for u in range(ng):
        for v in range(ng):
            duv = dist_g[u * ng + v]
            if dist_c[u * nc + v] != duv:
                return VERIFY_DISTANCE
            for y in range(nh):
                if dist_c[u * nc + cid(v, y)] != duv + 1:
                    return VERIFY_DISTANCE
            for x in range(nh):
                for y in range(nh):
                    got = dist_c[cid(u, x) * nc + cid(v, y)]
                    if u != v:
                        want = duv + 2
                    elif x == y:
                        want = 0
                    elif (masks_h[x] >> y) & 1:
                        want = 1
                    else:
                        want = 2
                    if got != want:
                        return VERIFY_DISTANCE

    ecc_c = _eccentricities(dist_c, nc)
    diam_c = max(ecc_c)
    if diam_c != diam_g + 2:
        return VERIFY_DIAMETER

    ecc_g = _eccentricities(dist_g, ng)
    pg = [v for v in range(ng) if ecc_g[v] == diam_g]

    # every product vertex with base u has periphery P_G(u) x V_H
    for p in range(nc):
        u = p if p < ng else (p - ng) // nh
        expected = {cid(v, y)
                    for v in range(ng) if dist_g[u * ng + v] == ecc_g[u]
                    for y in range(nh)}
        actual = {q for q in range(nc) if dist_c[p * nc + q] == ecc_c[p]}
        if actual != expected:
            return VERIFY_VERTEX_PERIPHERY

    expected_gp = {cid(v, y) for v in pg for y in range(nh)}
    actual_gp = {q for q in range(nc) if ecc_c[q] == diam_c}
    if actual_gp != expected_gp:
        return VERIFY_GRAPH_PERIPHERY

    if hangable_subset(dist_c, nc)[0] != hangable_subset(dist_g, ng)[0]:
        return VERIFY_HANGABLE
    return VERIFY_OK


def _cartesian_masks(masks_g: Sequence[int], masks_h: Sequence[int]) -> list[int]:
    ng = len(masks_g)
    nh = len(masks_h)
    spread = []
    for a in range(ng):
        s = 0
        f = masks_g[a]
        while f:
            low = f & -f
            s |= 1 << ((low.bit_length() - 1) * nh)
            f ^= low
        spread.append(s)
    out = []
    for a in range(ng):
        for b in range(nh):
            out.append((masks_h[b] << (a * nh)) | (spread[a] << b))
    return out


def cartesian_verify(masks_g: Sequence[int], dist_g: Sequence[int],
                     masks_h: Sequence[int], dist_h: Sequence[int]) -> int:
    """BFS on the box product versus its closed forms; 0 iff all hold.

    Both factors must be connected.  Vertex (a, b) gets id a*nh + b.  Checked
    in order: distance sums, eccentricity sums, diameter sum, vertex
    peripheries as products, graph periphery as a product, and the
    hangability biconditional (product hangable iff both factors are).
    """
    ng = len(masks_g)
    nh = len(masks_h)
    np_ = ng * nh
    pmasks = _cartesian_masks(masks_g, masks_h)
    dist_p = apsp(pmasks)

    for a in range(ng):
        for b in range(nh):
            p = a * nh + b
            for c in range(ng):
                dac = dist_g[a * ng + c]
                for d in range(nh):
                    if dist_p[p * np_ + c * nh + d] != dac + dist_h[b * nh + d]:
                        return VERIFY_DISTANCE

    ecc_g = _eccentricities(dist_g, ng)
    ecc_h = _eccentricities(dist_h, nh)
    ecc_p = _eccentricities(dist_p, np_)
    for a in range(ng):
        for b in range(nh):
            if ecc_p[a * nh + b] != ecc_g[a] + ecc_h[b]:
                return VERIFY_ECCENTRICITY

    diam_g = max(ecc_g)
    diam_h = max(ecc_h)
    if max(ecc_p) != diam_g + diam_h:
        return VERIFY_DIAMETER

    for a in range(ng):
        pga = {c for c in range(ng) if dist_g[a * ng + c] == ecc_g[a]}
        for b in range(nh):
            phb = {d for d in range(nh) if dist_h[b * nh + d] == ecc_h[b]}
            p = a * nh + b
            expected = {c * nh + d for c in pga for d in phb}
            actual = {q for q in range(np_)
                      if dist_p[p * np_ + q] == ecc_p[p]}
            if actual != expected:
                return VERIFY_VERTEX_PERIPHERY

    expected_gp = {c * nh + d
                   for c in range(ng) if ecc_g[c] == diam_g
                   for d in range(nh) if ecc_h[d] == diam_h}
    actual_gp = {q for q in range(np_) if ecc_p[q] == diam_g + diam_h}
    if actual_gp != expected_gp:
        return VERIFY_GRAPH_PERIPHERY

    both = hangable_subset(dist_g, ng)[0] and hangable_subset(dist_h, nh)[0]
    if hangable_subset(dist_p, np_)[0] != both:
        return VERIFY_HANGABLE
    return VERIFY_OK


def join_verify(masks_g: Sequence[int], masks_h: Sequence[int]) -> int:
    """Join hangability rule versus brute force; 0 iff they agree.

    The rule: the join is hangable iff it is complete or has at most one
    universal vertex.  Factors may be disconnected; the join never is.
    """
    ng = len(masks_g)
    nh = len(masks_h)
    nj = ng + nh
    gfull = (1 << ng) - 1
    hfull = (1 << nh) - 1
    jmasks = [masks_g[v] | (hfull << ng) for v in range(ng)]
    jmasks += [(masks_h[x] << ng) | gfull for x in range(nh)]
    full = (1 << nj) - 1
    universal = sum(1 for i in range(nj) if jmasks[i] == full ^ (1 << i))
    complete = universal == nj
    predicted = complete or universal <= 1
    actual = hangable_subset(apsp(jmasks), nj)[0]
    return VERIFY_OK if predicted == actual else VERIFY_HANGABLE
