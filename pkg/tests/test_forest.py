import random

import pytest

from middlelevels.dyck import enumerate_dyck, is_dyck
from middlelevels.errors import StructuralError
from middlelevels.forest import (
    AuxGraph,
    Move,
    apply_moves,
    build_aux_graph,
    canonical_representative,
    path_to_star,
    rotation_orbit,
    spanning_tree,
    star,
)
from middlelevels.gadgets import make_pair
from oracles import rotation_orbits


@pytest.mark.parametrize(
    "x, orbit",
    [("1100", ["1100", "1010"]), ("111000", ["111000", "110010", "101100"]), ("10", ["10"])],
)
def test_rotation_orbit(x, orbit):
    assert rotation_orbit(x) == orbit


@pytest.mark.parametrize("x, c", [("1100", "1010"), ("111000", "101100"), ("10", "10")])
def test_canonical_representative(x, c):
    assert canonical_representative(x) == c


def test_star():
    assert [star(n) for n in (2, 3, 4)] == ["1100", "110100", "11010100"]
    assert all(is_dyck(star(n)) for n in range(1, 10))


@pytest.mark.parametrize("n", range(1, 8))
def test_orbits_partition(n):
    g = build_aux_graph(n)
    oracle = rotation_orbits(n)
    assert {frozenset(c.orbit) for c in g.nodes.values()} == set(oracle)
    assert sum(len(c.orbit) for c in g.nodes.values()) == len(enumerate_dyck(n))


def test_orbit_counts():
    assert [len(build_aux_graph(n).nodes) for n in range(1, 8)] == [1, 1, 2, 3, 6, 14, 34]


def test_aux_graph_small():
    g2 = build_aux_graph(2)
    assert len(g2.nodes) == 1 and len(g2.edges) == 1 and g2.loops == 1
    g3 = build_aux_graph(3)
    assert len(g3.nodes) == 2 and len(g3.edges) == 3 and g3.loops == 0
    assert len(build_aux_graph(4).nodes) == 3


def test_spanning_tree_examples():
    assert spanning_tree(build_aux_graph(2)) == []
    assert [(p.x, p.y) for p in spanning_tree(build_aux_graph(3))] == [("110010", "101010")]


@pytest.mark.parametrize("n", range(1, 9))
def test_spanning_tree_size_and_determinism(n):
    g = build_aux_graph(n)
    t = spanning_tree(g)
    assert len(t) == len(g.nodes) - 1
    assert all(g.class_of[p.x] != g.class_of[p.y] for p in t)
    shuffled = list(g.edges)
    random.Random(n).shuffle(shuffled)
    g2 = AuxGraph(g.n, g.nodes, shuffled, g.class_of)
    assert spanning_tree(g2) == t


def test_spanning_tree_disconnected():
    g = build_aux_graph(4)
    g.edges = [e for e in g.edges if e[0] == e[1]]
    with pytest.raises(StructuralError):
        spanning_tree(g)


def test_path_to_star_examples():
    assert path_to_star(star(4)) == []
    assert path_to_star("1010") == [Move("rotate")]
    assert path_to_star("101100") == [Move("rotate"), Move("pull", 2)]


def _depth_sum(x):
    h, total = 0, 0
    for c in x:
        if c == "1":
            h += 1
            total += h
        else:
            h -= 1
    return total


@pytest.mark.parametrize("n", range(1, 8))
def test_path_to_star_reaches_star(n):
    for x in enumerate_dyck(n):
        moves = path_to_star(x)
        assert apply_moves(x, moves) == star(n)
        assert len(moves) <= len(rotation_orbit(x)) + n * n
        y = x
        for m in moves:
            nxt = m.apply(y)
            if m.kind == "pull":
                make_pair(y, m.a)  # raises unless flippable
                assert _depth_sum(nxt) < _depth_sum(y)
            y = nxt


def test_dot_output():
    dot = build_aux_graph(3).to_dot()
    assert dot.startswith("digraph H {")
    assert '"101100" -> "101010" [label="110010->101010"];' in dot
    assert dot.count("label=") == 3
    assert 'label="1100->1010"' in build_aux_graph(2).to_dot()
