"""Blow-up recursion: components of the zero locus of Z, multiplicity trees."""

from __future__ import annotations

import json

import pytest

from ratsurf.blowup import (
    MultiplicityTree,
    NotApplicableError,
    blowup_components,
    multiplicity_tree,
)
from ratsurf.resgraph import (
    NotRationalError,
    fundamental_cycle,
    intersection_matrix,
    is_negative_definite,
    is_rational,
    multiplicity,
    parse_graph,
)


def graph_json(vertices, edges):
    return json.dumps(
        {
            "vertices": [{"id": vid, "b": b} for vid, b in vertices],
            "edges": [list(e) for e in edges],
        }
    )


CONE = graph_json([("E0", 5)], [])
STAR = graph_json(
    [("C", 3), ("L1", 3), ("L2", 3), ("L3", 3)],
    [("C", "L1"), ("C", "L2"), ("C", "L3")],
)
CHAIN = graph_json([("E1", 3), ("E2", 2), ("E3", 3)], [("E1", "E2"), ("E2", "E3")])
D4 = graph_json(
    [("C", 2), ("L1", 2), ("L2", 2), ("L3", 2)],
    [("C", "L1"), ("C", "L2"), ("C", "L3")],
)


def family_json(k, arm_order=None):
    # center b=2 meeting three b=k arms, each arm carrying k-2 b=2 leaves
    arms = arm_order or ["K1", "K2", "K3"]
    vertices = [("C", 2)] + [(a, k) for a in arms]
    edges = [("C", a) for a in arms]
    for a in arms:
        for j in range(1, k - 1):
            vertices.append(("%sL%d" % (a, j), 2))
            edges.append((a, "%sL%d" % (a, j)))
    return graph_json(vertices, edges)


def test_cone_has_no_components():
    g = parse_graph(CONE)
    assert blowup_components(g, fundamental_cycle(g)) == []


def test_star_component_is_the_center():
    g = parse_graph(STAR)
    comps = blowup_components(g, fundamental_cycle(g))
    assert len(comps) == 1
    assert comps[0].ids == ("C",)
    assert comps[0].b == (3,)


def test_chain_component_is_the_middle_double_point():
    g = parse_graph(CHAIN)
    comps = blowup_components(g, fundamental_cycle(g))
    assert len(comps) == 1
    assert comps[0].ids == ("E2",)
    assert multiplicity(comps[0]) == 2


def test_components_inherit_weights_and_edges():
    g = parse_graph(
        graph_json(
            [("E1", 3), ("E2", 2), ("E3", 2), ("E4", 3)],
            [("E1", "E2"), ("E2", "E3"), ("E3", "E4")],
        )
    )
    comps = blowup_components(g, fundamental_cycle(g))
    assert len(comps) == 1
    c = comps[0]
    assert c.ids == ("E2", "E3")
    assert c.b == (2, 2)
    assert c.neighbors(0) == {1: 1}


def test_components_come_back_sorted_by_smallest_id():
    g = parse_graph(family_json(3, arm_order=["K3", "K2", "K1"]))
    comps = blowup_components(g, fundamental_cycle(g))
    assert [c.ids for c in comps] == [("K1",), ("K2",), ("K3",)]


def test_components_reject_foreign_cycles():
    g = parse_graph(CONE)
    other = parse_graph(CONE)
    with pytest.raises(ValueError):
        blowup_components(g, fundamental_cycle(other))


def test_cone_tree_is_a_single_node():
    for d in range(3, 9):
        t = multiplicity_tree(parse_graph(graph_json([("E0", d)], [])))
        assert t.multiplicities() == [d]
        assert t.children == []
        assert t.dropped_rdp_count == 0
        assert t.reduced and t.reduced_everywhere()


def test_star_tree():
    t = multiplicity_tree(parse_graph(STAR))
    assert t.multiplicities() == [6, 3]
    assert t.reduced_everywhere()
    assert t.dropped_rdp_count == 0


def test_chain_tree_prunes_the_double_point():
    t = multiplicity_tree(parse_graph(CHAIN))
    assert t.multiplicities() == [4]
    assert t.children == []
    assert t.dropped_rdp_count == 1
    # pruned double points do not spoil exactness of the cycle record
    assert t.reduced and t.reduced_everywhere()


def test_family_trees():
    for k in (3, 4, 5):
        t = multiplicity_tree(parse_graph(family_json(k)))
        assert t.mult == 3 * k - 4
        assert [c.mult for c in t.children] == [k, k, k]
        assert not t.reduced
        assert all(c.reduced for c in t.children)
        assert not t.reduced_everywhere()
        assert t.multiplicities() == [3 * k - 4, k, k, k]


def test_preorder_traversal_lists_parent_before_children():
    t = multiplicity_tree(parse_graph(family_json(3)))
    nodes = list(t.iter_nodes())
    assert nodes[0] is t
    assert nodes[1:] == t.children


def test_vertex_count_strictly_decreases_down_the_tree():
    for text in (CONE, STAR, CHAIN, family_json(3), family_json(4)):
        t = multiplicity_tree(parse_graph(text))
        for node in t.iter_nodes():
            for child in node.children:
                assert child.graph.n < node.graph.n


def test_every_node_is_rational_negative_definite_and_big_enough():
    for text in (STAR, CHAIN, family_json(3), family_json(5)):
        t = multiplicity_tree(parse_graph(text))
        for node in t.iter_nodes():
            assert is_rational(node.graph)
            assert is_negative_definite(intersection_matrix(node.graph))
            assert node.mult >= 3
            assert node.mult == multiplicity(node.graph)
            assert node.cycle.graph is node.graph


def test_tree_rejects_non_rational_input():
    bumpy = graph_json(
        [("C", 2), ("L1", 3), ("L2", 3), ("L3", 3), ("L4", 3)],
        [("C", "L1"), ("C", "L2"), ("C", "L3"), ("C", "L4")],
    )
    with pytest.raises(NotRationalError):
        multiplicity_tree(parse_graph(bumpy))


def test_tree_rejects_double_points():
    with pytest.raises(NotApplicableError):
        multiplicity_tree(parse_graph(D4))
    a1 = graph_json([("E0", 2)], [])
    with pytest.raises(NotApplicableError):
        multiplicity_tree(parse_graph(a1))


def test_tree_repr_mentions_the_shape():
    t = multiplicity_tree(parse_graph(CHAIN))
    assert repr(t) == "MultiplicityTree(mult=4, children=0, dropped=1)"
    assert isinstance(t, MultiplicityTree)
