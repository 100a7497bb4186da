"""Core graph type: construction, validation, basic ops, text round-trips."""

from __future__ import annotations

import pytest

from hanggraph import (
    DisconnectedGraphError,
    Graph,
    GraphInputError,
    complement,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    power,
    to_edge_list,
)
from hanggraph.graph import first_unreached


def test_from_edge_list_basic(fig_g):
    assert fig_g.n == 5
    assert fig_g.m == 6
    assert fig_g.has_edge(0, 1)
    assert fig_g.has_edge(1, 0)
    assert not fig_g.has_edge(0, 2)
    assert fig_g.degree(2) == 3
    assert fig_g.adj[0] == (1, 3)


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.m == 2


def test_edges_sorted_pairs(fig_g):
    es = list(fig_g.edges())
    assert es == sorted(es)
    assert all(u < v for u, v in es)
    assert len(es) == fig_g.m


def test_rejects_self_loop():
    with pytest.raises(GraphInputError):
        from_edge_list(3, [(1, 1)])


def test_rejects_out_of_range_endpoint():
    with pytest.raises(GraphInputError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphInputError):
        from_edge_list(3, [(-1, 0)])


def test_rejects_negative_n():
    with pytest.raises(GraphInputError):
        from_edge_list(-1, [])


def test_rejects_duplicate_labels():
    with pytest.raises(GraphInputError):
        from_edge_list(2, [(0, 1)], labels=("x", "x"))


def test_rejects_label_count_mismatch():
    with pytest.raises(GraphInputError):
        from_edge_list(2, [(0, 1)], labels=("x",))


def test_labels_default_to_ids():
    g = from_edge_list(2, [(0, 1)])
    assert g.label_of(0) == "0"
    g2 = from_edge_list(2, [(0, 1)], labels=("u", "v"))
    assert g2.label_of(1) == "v"


def test_empty_graph_allowed():
    g = from_edge_list(0, [])
    assert g.n == 0 and g.m == 0
    assert is_connected(g)


def test_neighbor_masks(fig_g):
    masks = fig_g.neighbor_masks()
    assert masks[0] == (1 << 1) | (1 << 3)
    assert masks[4] == 1 << 2


def test_is_connected():
    assert is_connected(from_edge_list(1, []))
    assert is_connected(from_edge_list(3, [(0, 1), (1, 2)]))
    assert not is_connected(from_edge_list(3, [(0, 1)]))
    assert not is_connected(from_edge_list(2, []))


def test_first_unreached_names_a_vertex():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    v = first_unreached(g)
    assert v in (2, 3)


def test_complement():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    c = complement(g)
    assert c.m == 6 - 2
    assert not c.has_edge(0, 1)
    assert c.has_edge(0, 2)
    cc = complement(c)
    assert cc.adj == g.adj


def test_complement_keeps_labels():
    g = from_edge_list(2, [], labels=("u", "v"))
    assert complement(g).labels == ("u", "v")


def test_power_of_path():
    p5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    p2 = power(p5, 2)
    assert p2.has_edge(0, 2)
    assert not p2.has_edge(0, 3)
    p4 = power(p5, 4)
    assert p4.m == 10  # complete at k = diameter


def test_power_k1_is_identity(fig_g):
    assert power(fig_g, 1).adj == fig_g.adj


def test_power_rejects_bad_k(fig_g):
    with pytest.raises(GraphInputError):
        power(fig_g, 0)


def test_power_rejects_disconnected():
    g = from_edge_list(3, [(0, 1)])
    with pytest.raises(DisconnectedGraphError):
        power(g, 2)


def test_induced_subgraph(fig_g):
    # vertices a, b, d form a triangle in the example graph
    sub = induced_subgraph(fig_g, [0, 1, 3])
    assert sub.n == 3
    assert sub.m == 3
    assert sub.labels == ("a", "b", "d")


def test_induced_subgraph_rejects_bad_vertex(fig_g):
    with pytest.raises(GraphInputError):
        induced_subgraph(fig_g, [0, 9])


def test_disjoint_union():
    g = from_edge_list(2, [(0, 1)])
    h = from_edge_list(3, [(0, 1), (1, 2)])
    u = disjoint_union(g, h)
    assert u.n == 5
    assert u.m == 3
    assert u.has_edge(0, 1)
    assert u.has_edge(2, 3) and u.has_edge(3, 4)
    assert not u.has_edge(1, 2)


def test_parse_edge_list_round_trip(fig_g):
    text = to_edge_list(fig_g)
    g2 = parse_edge_list(text)
    assert g2.n == fig_g.n
    assert g2.adj == fig_g.adj


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# a comment\n\n3 2\n0 1\n\n1 2\n")
    assert g.n == 3 and g.m == 2


def test_parse_edge_list_errors_carry_line_numbers():
    with pytest.raises(GraphInputError) as exc:
        parse_edge_list("3 2\n0 1\nbogus x\n")
    assert "line 3" in str(exc.value)


def test_parse_edge_list_wrong_edge_count():
    with pytest.raises(GraphInputError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphInputError):
        parse_edge_list("3 1\n0 1\n1 2\n")


def test_parse_edge_list_missing_header():
    with pytest.raises(GraphInputError):
        parse_edge_list("")


def test_graph_is_hashable_and_frozen(fig_g):
    with pytest.raises(Exception):
        fig_g.n = 7  # type: ignore[misc]
