"""Shared fixtures: the two worked-example graphs and corpus helpers.

``fig_g`` is the 5-vertex graph with edges ab, ad, bd, bc, cd, ce; it is
hangable.  ``fig_h`` is the same graph without e; it is the smallest kind of
counterexample the checkers must catch (two vertices of full degree).  Their
metric values are pinned in test_metrics as computed goldens.
"""

from __future__ import annotations

import pytest

from hanggraph import Graph, from_edge_list

FIG_G_EDGES = [(0, 1), (0, 3), (1, 3), (1, 2), (2, 3), (2, 4)]
FIG_H_EDGES = [(0, 1), (0, 3), (1, 3), (1, 2), (2, 3)]
ABCDE = ("a", "b", "c", "d", "e")


@pytest.fixture
def fig_g() -> Graph:
    return from_edge_list(5, FIG_G_EDGES, labels=ABCDE)


@pytest.fixture
def fig_h() -> Graph:
    return from_edge_list(4, FIG_H_EDGES, labels=ABCDE[:4])


def connected_graphs(max_n: int, min_n: int = 1):
    """All connected labeled graphs with min_n <= n <= max_n."""
    from hanggraph.corpus import iter_graphs

    for n in range(min_n, max_n + 1):
        yield from iter_graphs(n, connected_only=True)


def all_graphs(max_n: int, min_n: int = 1):
    from hanggraph.corpus import iter_graphs

    for n in range(min_n, max_n + 1):
        yield from iter_graphs(n)
