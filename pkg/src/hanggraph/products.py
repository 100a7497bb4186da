"""Corona, box (cartesian) product, and join, with closed-form metric oracles.

Each construction fixes a vertex numbering and returns it as a
ProductVertexMap alongside the graph:

  corona(g, h)     base vertex v keeps id v; copy x of h attached to v gets
                   id ng + v*nh + x (copies grouped by base, h-order within)
  cartesian(g, h)  pair (a, b) gets id a*nh + b (row-major)
  join(g, h)       g's vertices first, then h's shifted by ng

The oracles restate the product metrics purely in factor terms, without
running BFS on the product; they exist to be checked against the BFS route.
For the corona (base connected, at least 2 vertices; copies nonempty):
distances gain +1 per copy endpoint (same-base copies: 1 if the copy factor
has that edge, else 2), the diameter is the base diameter +2, and every
periphery is P_base x V_copy.  For the box product of connected factors,
distances, eccentricities and the diameter add, and peripheries multiply.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphInputError, _build
from .metrics import DistanceMatrix, MetricProfile, all_pairs_distances, metric_profile


@dataclass(frozen=True)
class ProductVertexMap:
    """Vertex numbering of a product; entries[i] tags product vertex i.

    Tags: ("g", v) original vertex of the first factor, ("h", x) of the
    second, ("gh", v, x) a pair.
    """
    kind: str  # "corona" | "cartesian" | "join"
    g_n: int
    h_n: int
    entries: tuple[tuple, ...]

    def corona_base_id(self, v: int) -> int:
        return v

    def corona_copy_id(self, v: int, x: int) -> int:
        return self.g_n + v * self.h_n + x

    def cartesian_id(self, a: int, b: int) -> int:
        return a * self.h_n + b

    def join_g_id(self, v: int) -> int:
        return v

    def join_h_id(self, x: int) -> int:
        return self.g_n + x

    def describe(self, i: int, g: Graph | None = None, h: Graph | None = None) -> str:
        def gl(v: int) -> str:
            return g.label_of(v) if g is not None else str(v)

        def hl(x: int) -> str:
            return h.label_of(x) if h is not None else str(x)

        entry = self.entries[i]
        if entry[0] == "g":
            return gl(entry[1])
        if entry[0] == "h":
            return hl(entry[1])
        return f"({gl(entry[1])},{hl(entry[2])})"

    def to_text(self, g: Graph | None = None, h: Graph | None = None) -> str:
        lines = [f"{i} ↦ {self.describe(i, g, h)}"
                 for i in range(len(self.entries))]
        return "\n".join(lines) + "\n"


def _unique_or_none(labels: list[str]) -> tuple[str, ...] | None:
    return tuple(labels) if len(set(labels)) == len(labels) else None


def corona(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """g plus one fresh copy of h per base vertex, each copy joined to its base.

    The construction is unconstrained; the metric oracles below add the
    connectivity and size preconditions they need.
    """
    ng, nh = g.n, h.n
    edges = list(g.edges())
    entries: list[tuple] = [("g", v) for v in range(ng)]
    for v in range(ng):
        off = ng + v * nh
        for x in range(nh):
            edges.append((v, off + x))
            entries.append(("gh", v, x))
        edges += [(off + x, off + y) for x, y in h.edges()]
    labels = [g.label_of(v) for v in range(ng)]
    labels += [f"({g.label_of(v)},{h.label_of(x)})"
               for v in range(ng) for x in range(nh)]
    vmap = ProductVertexMap("corona", ng, nh, tuple(entries))
    return _build(ng * (1 + nh), edges, _unique_or_none(labels)), vmap


def cartesian(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Box product: (a, b) ~ (c, d) iff a = c, bd an h-edge or b = d, ac a g-edge."""
    ng, nh = g.n, h.n
    edges = []
    for a in range(ng):
        base = a * nh
        edges += [(base + x, base + y) for x, y in h.edges()]
    for a, c in g.edges():
        edges += [(a * nh + b, c * nh + b) for b in range(nh)]
    entries = tuple(("gh", a, b) for a in range(ng) for b in range(nh))
    labels = [f"({g.label_of(a)},{h.label_of(b)})"
              for a in range(ng) for b in range(nh)]
    vmap = ProductVertexMap("cartesian", ng, nh, entries)
    return _build(ng * nh, edges, _unique_or_none(labels)), vmap


def join(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Disjoint union plus every edge between the two sides."""
    ng, nh = g.n, h.n
    edges = list(g.edges())
    edges += [(ng + x, ng + y) for x, y in h.edges()]
    edges += [(v, ng + x) for v in range(ng) for x in range(nh)]
    entries = tuple([("g", v) for v in range(ng)] + [("h", x) for x in range(nh)])
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = _unique_or_none(list(g.labels + h.labels))
    vmap = ProductVertexMap("join", ng, nh, entries)
    return _build(ng + nh, edges, labels), vmap


# --- closed-form oracles -----------------------------------------------------


def _corona_decode(ng: int, nh: int, p: int) -> tuple[int, int]:
    """(base, copy index) with copy index -1 for base vertices."""
    if p < ng:
        return p, -1
    q, x = divmod(p - ng, nh)
    return q, x


def corona_distance_oracle(dist_g: DistanceMatrix, h: Graph, p: int, q: int) -> int:
    """Distance between corona vertices p, q from base distances alone.

    ``dist_g`` is the base matrix; ``h`` is the copy factor (its edges decide
    the distance between two copies over the same base vertex).  The base
    graph must have at least 2 vertices for these forms to hold.
    """
    ng, nh = dist_g.n, h.n
    if ng < 2:
        raise GraphInputError("corona distance forms need a base with at least 2 vertices")
    total = ng * (1 + nh)
    if not (0 <= p < total and 0 <= q < total):
        raise GraphInputError(f"product vertex outside 0..{total - 1}")
    u, x = _corona_decode(ng, nh, p)
    v, y = _corona_decode(ng, nh, q)
    base = dist_g.dist(u, v)
    if x < 0 and y < 0:
        return base
    if x < 0 or y < 0:
        return base + 1
    if u != v:
        return base + 2
    if x == y:
        return 0
    return 1 if h.has_edge(x, y) else 2


@dataclass(frozen=True)
class CoronaMetrics:
    diameter: int
    vertex_periphery: tuple[frozenset[int], ...]
    graph_periphery: frozenset[int]


def corona_metric_oracle(g: Graph, h: Graph,
                         g_profile: MetricProfile | None = None) -> CoronaMetrics:
    """Corona metrics in product ids, computed from the base profile only.

    Diameter is the base diameter +2; the periphery of any product vertex
    with base u is P_base(u) x V_copy; the graph periphery is
    P(base) x V_copy.  Requires the base connected with at least 2 vertices
    and a nonempty copy factor.
    """
    if g.n < 2:
        raise GraphInputError("corona metric forms need a base with at least 2 vertices")
    if h.n < 1:
        raise GraphInputError("corona metric forms need a nonempty copy factor")
    if g_profile is None:
        g_profile = metric_profile(g)  # raises when g is disconnected
    ng, nh = g.n, h.n

    def copies(base_set: frozenset[int]) -> frozenset[int]:
        return frozenset(ng + v * nh + x for v in base_set for x in range(nh))

    vp = []
    for p in range(ng * (1 + nh)):
        u = p if p < ng else (p - ng) // nh
        vp.append(copies(g_profile.vertex_periphery[u]))
    return CoronaMetrics(
        diameter=g_profile.diameter + 2,
        vertex_periphery=tuple(vp),
        graph_periphery=copies(g_profile.graph_periphery))


@dataclass(frozen=True)
class CartesianMetrics:
    eccentricity: tuple[int, ...]
    diameter: int
    vertex_periphery: tuple[frozenset[int], ...]
    graph_periphery: frozenset[int]
    _dist_g: DistanceMatrix
    _dist_h: DistanceMatrix

    def distance(self, p: int, q: int) -> int:
        nh = self._dist_h.n
        return (self._dist_g.dist(p // nh, q // nh)
                + self._dist_h.dist(p % nh, q % nh))


def cartesian_metric_oracle(g: Graph, h: Graph,
                            g_profile: MetricProfile | None = None,
                            h_profile: MetricProfile | None = None) -> CartesianMetrics:
    """Box-product metrics from factor metrics only: everything adds.

    distance((a,b),(c,d)) = d_g(a,c) + d_h(b,d); eccentricities and the
    diameter add; the periphery of (a, b) is P_g(a) x P_h(b) and the graph
    periphery is P(g) x P(h).  Both factors must be connected and nonempty.
    """
    if g.n < 1 or h.n < 1:
        raise GraphInputError("box product metric forms need nonempty factors")
    dist_g = all_pairs_distances(g)
    dist_h = all_pairs_distances(h)
    if g_profile is None:
        g_profile = metric_profile(g, dist_g)
    if h_profile is None:
        h_profile = metric_profile(h, dist_h)
    nh = h.n
    ecc = tuple(g_profile.eccentricity[a] + h_profile.eccentricity[b]
                for a in range(g.n) for b in range(nh))
    vp = tuple(frozenset(c * nh + d
                         for c in g_profile.vertex_periphery[a]
                         for d in h_profile.vertex_periphery[b])
               for a in range(g.n) for b in range(nh))
    gp = frozenset(c * nh + d
                   for c in g_profile.graph_periphery
                   for d in h_profile.graph_periphery)
    return CartesianMetrics(
        eccentricity=ecc,
        diameter=g_profile.diameter + h_profile.diameter,
        vertex_periphery=vp,
        graph_periphery=gp,
        _dist_g=dist_g,
        _dist_h=dist_h)


def universal_vertices(g: Graph) -> frozenset[int]:
    """Vertices adjacent to every other vertex."""
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def join_hangability_predicate(g: Graph, h: Graph) -> bool:
    """Hangability of join(g, h) without any metric computation.

    The join of nonempty graphs has diameter at most 2, and it is hangable
    exactly when it is complete or has at most one universal vertex.
    """
    jg, _ = join(g, h)
    if jg.m == jg.n * (jg.n - 1) // 2:
        return True
    return len(universal_vertices(jg)) <= 1
