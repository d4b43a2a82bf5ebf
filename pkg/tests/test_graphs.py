import itertools
import math

import numpy as np
import pytest

from mixedwalk.errors import InvalidGraphError
from mixedwalk.graphs import (
    ArcIndex,
    MixedGraph,
    build_cycle,
    build_path,
    from_json_dict,
    random_mixed_cycle,
    random_mixed_graph,
    random_mixed_tree,
    to_json_dict,
)


def brute_force_girth(graph):
    """Independent oracle: try every vertex subset of every size as a cycle."""
    n = graph.n_vertices
    edges = set(graph.edges)

    def adjacent(u, v):
        return (min(u, v), max(u, v)) in edges

    for k in range(3, n + 1):
        for subset in itertools.combinations(range(n), k):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                ring = (first,) + perm
                if all(adjacent(ring[i], ring[(i + 1) % k]) for i in range(k)):
                    return k
    return math.inf


def test_build_cycle_type_three():
    g = build_cycle(8, 3)
    assert g.one_directional == ((0, 1), (1, 2), (2, 3))
    assert len(g.digons) == 5
    assert g.degrees == (2,) * 8


def test_build_cycle_all_digons_is_undirected():
    g = build_cycle(6, 0)
    assert g.one_directional == ()
    assert len(g.digons) == 6
    assert g == g.underlying()


def test_build_cycle_fully_directed_counts():
    g = build_cycle(4, 4)
    assert len(g.one_directional) == 4
    assert g.digons == ()
    assert len(g.symmetric_arcs) == 8


def test_build_cycle_rejects_bad_input():
    with pytest.raises(InvalidGraphError):
        build_cycle(2, 0)
    with pytest.raises(InvalidGraphError):
        build_cycle(5, 6)
    with pytest.raises(InvalidGraphError):
        build_cycle(5, -1)


def test_build_path_variants():
    g = build_path(2, ["digon"])
    assert len(g.symmetric_arcs) == 2

    g = build_path(3, ["forward", "backward"])
    assert g.arcs == ((0, 1), (2, 1))

    g = build_path(5, ["digon"] * 4)
    assert len(g.symmetric_arcs) == 8
    with pytest.raises(InvalidGraphError):
        build_path(4, ["digon"])
    with pytest.raises(InvalidGraphError):
        build_path(1, [])


def test_underlying_symmetrizes_and_is_idempotent():
    g = build_cycle(8, 3)
    assert g.underlying() == build_cycle(8, 0)
    assert g.underlying().underlying() == g.underlying()
    mixed = build_path(3, ["forward", "backward"])
    assert mixed.underlying() == build_path(3, ["digon", "digon"])
    assert set(mixed.underlying().arcs) >= set(mixed.arcs)


def test_girth_cycle_and_tree():
    assert build_cycle(7, 2).girth() == 7
    assert build_path(6, ["forward"] * 5).girth() == math.inf


def test_girth_cycle_with_chord():
    arcs = list(build_cycle(5, 0).arcs) + [(0, 2), (2, 0)]
    g = MixedGraph(5, tuple(arcs))
    assert g.girth() == 3
    assert g.girth() == brute_force_girth(g)


def test_girth_matches_brute_force_on_random_graphs():
    rng = np.random.default_rng(7)
    for _ in range(25):
        g = random_mixed_graph(int(rng.integers(3, 8)), rng)
        assert g.girth() == brute_force_girth(g)


def test_degree_examples():
    cycle = build_cycle(6, 2)
    assert all(cycle.degree(x) == 2 for x in range(6))
    path = build_path(5, ["digon"] * 4)
    assert path.degree(0) == 1 and path.degree(4) == 1
    assert path.degree(2) == 2
    with pytest.raises(InvalidGraphError):
        path.degree(5)


def test_graph_validation():
    with pytest.raises(InvalidGraphError):
        MixedGraph(3, ((0, 0),))
    with pytest.raises(InvalidGraphError):
        MixedGraph(3, ((0, 3),))
    with pytest.raises(InvalidGraphError):
        MixedGraph(4, ((0, 1), (1, 0), (2, 3), (3, 2)))  # disconnected


def test_arc_index_is_fixed_point_free_involution():
    rng = np.random.default_rng(11)
    for _ in range(20):
        g = random_mixed_graph(int(rng.integers(2, 9)), rng)
        index = ArcIndex(g)
        assert len(index) == 2 * len(g.edges)
        for i in range(len(index)):
            assert index.inverse(i) != i
            assert index.inverse(index.inverse(i)) == i
            o, t = index.arcs[i]
            assert index.arcs[index.inverse(i)] == (t, o)
        assert list(index.arcs) == sorted(index.arcs)


def test_json_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = random_mixed_tree(int(rng.integers(2, 9)), rng)
        assert from_json_dict(to_json_dict(g)) == g
    g = build_cycle(5, 2)
    assert from_json_dict(to_json_dict(g)) == g


def test_json_loader_rejects_bad_input():
    with pytest.raises(InvalidGraphError):
        from_json_dict({"n": 2, "edges": [[0, 0]]})
    with pytest.raises(InvalidGraphError):
        from_json_dict({"n": 2, "arcs": [[0, 1]], "edges": [[0, 1]]})
    with pytest.raises(InvalidGraphError):
        from_json_dict({"n": 2, "arcs": [[0, 1], [0, 1]]})
    with pytest.raises(InvalidGraphError):
        from_json_dict({"arcs": [[0, 1]]})


def test_cycle_girth_is_length_for_every_type():
    for n in range(3, 9):
        for j in range(n + 1):
            assert build_cycle(n, j).girth() == n


def test_cycle_arc_and_digon_counts():
    for n in range(3, 9):
        for j in range(n + 1):
            g = build_cycle(n, j)
            assert len(g.one_directional) == j
            assert len(g.digons) == n - j


def test_random_cycle_is_cycle():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = random_mixed_cycle(int(rng.integers(3, 10)), rng)
        assert g.is_cycle_graph()
        assert not g.is_path_graph()
