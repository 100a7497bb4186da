"""Generators for the named graph families.

Each returns a plain Graph; the grid carries "(i,j)" labels so that it is
equal, labels included, to the box product of two paths under the shared
row-major vertex convention.
"""

from __future__ import annotations

import re

from .graph import Graph, GraphInputError, _build


def path(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"path needs at least 1 vertex, got {n}")
    return _build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs at least 3 vertices, got {n}")
    return _build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"complete graph needs at least 1 vertex, got {n}")
    return _build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphInputError(f"complete bipartite parts must be at least 1, got {a}, {b}")
    return _build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    """d-cube on 2^d vertices; u ~ v iff they differ in exactly one bit."""
    if d < 1:
        raise GraphInputError(f"hypercube dimension must be at least 1, got {d}")
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    return _build(n, edges)


def grid(rows: int, cols: int) -> Graph:
    """rows x cols grid, vertex (i, j) at id i*cols + j, labels "(i,j)"."""
    if rows < 1 or cols < 1:
        raise GraphInputError(f"grid sides must be at least 1, got {rows}, {cols}")
    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((i * cols + j, i * cols + j + 1))
            if i + 1 < rows:
                edges.append((i * cols + j, (i + 1) * cols + j))
    labels = [f"({i},{j})" for i in range(rows) for j in range(cols)]
    return _build(rows * cols, edges, labels)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "grid": (grid, 2),
}

_EXPR = re.compile(r"^([a-z_]+):(\d+(?:x\d+)*)$")


def generate(family: str, params: list[int]) -> Graph:
    if family not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise GraphInputError(f"unknown family {family!r} (known: {known})")
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise GraphInputError(
            f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def looks_like_expression(text: str) -> bool:
    m = _EXPR.match(text)
    return bool(m) and m.group(1) in FAMILIES


def from_expression(expr: str) -> Graph:
    """Parse "family:size" or "family:AxB", e.g. "cycle:7" or "grid:3x4"."""
    m = _EXPR.match(expr)
    if not m:
        raise GraphInputError(
            f"bad generator expression {expr!r} (expected like 'cycle:7' or 'grid:3x4')")
    return generate(m.group(1), [int(p) for p in m.group(2).split("x")])
