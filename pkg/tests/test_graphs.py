"""Graph core: bipartiteness, complements, chordality, cycle search, enumeration."""

import itertools
import random

import pytest

from edgereg.graphs import (
    Bipartition,
    Graph,
    are_isomorphic,
    bipartite_complement,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_connected_bipartite,
    enumerate_graphs,
    find_induced_cycle_geq,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_chordal_bipartite,
    path_graph,
)


def brute_force_has_chordless_cycle_geq(g, k):
    # Oracle: check every vertex subset of size >= k for inducing a cycle.
    for size in range(k, g.n + 1):
        for verts in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, verts)
            if all(sub.degree(v) == 2 for v in range(sub.n)) and sub.is_connected():
                return True
    return False


def random_graph(rng, n, p=0.5):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


class TestGraphBasics:
    def test_rejects_loops_and_bad_endpoints(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_multi_edges_collapse(self):
        g = Graph(2, [(0, 1), (1, 0)])
        assert g.edge_count() == 1

    def test_immutability(self, c4):
        with pytest.raises(AttributeError):
            c4.n = 5


class TestBipartite:
    def test_c4(self, c4):
        b = is_bipartite(c4)
        assert (b.left, b.right) == (frozenset({0, 2}), frozenset({1, 3}))

    def test_triangle(self, k3):
        assert is_bipartite(k3) is None

    def test_path(self, p4):
        b = is_bipartite(p4)
        assert (b.left, b.right) == (frozenset({0, 2}), frozenset({1, 3}))

    def test_disconnected_lowest_index_left(self):
        g = Graph(4, [(0, 1), (2, 3)])
        b = is_bipartite(g)
        assert 0 in b.left and 2 in b.left

    def test_odd_cycles_rejected(self):
        for k in (3, 5, 7):
            assert is_bipartite(cycle_graph(k)) is None
            assert is_bipartite(cycle_graph(k + 1)) is not None

    def test_validate_rejects_bad_bipartition(self, c4):
        bad = Bipartition(frozenset({0, 1}), frozenset({2, 3}))
        with pytest.raises(ValueError):
            bad.validate(c4)


class TestComplement:
    def test_c4_complement_is_perfect_matching(self, c4):
        assert sorted(complement(c4).edges) == [(0, 2), (1, 3)]

    def test_empty_graph_complement_complete(self):
        assert complement(empty_graph(5)) == complete_graph(5)

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 8))
            assert complement(complement(g)) == g

    def test_bipartite_complement_c6(self, c6):
        b = is_bipartite(c6)
        bc = bipartite_complement(c6, b)
        assert sorted(bc.edges) == [(0, 3), (1, 4), (2, 5)]

    def test_bipartite_complement_complete_bipartite(self):
        g = complete_bipartite(2, 3)
        bc = bipartite_complement(g, is_bipartite(g))
        assert bc.edge_count() == 0

    def test_bipartite_complement_involution(self):
        rng = random.Random(11)
        for _ in range(40):
            a, b = rng.randint(1, 3), rng.randint(1, 4)
            edges = [
                (i, a + j)
                for i in range(a)
                for j in range(b)
                if rng.random() < 0.5
            ]
            g = Graph(a + b, edges)
            bip = Bipartition(frozenset(range(a)), frozenset(range(a, a + b)))
            assert bipartite_complement(bipartite_complement(g, bip), bip) == g


class TestInducedSubgraph:
    def test_c4_three_vertices_is_path(self, c4):
        sub, vmap = induced_subgraph(c4, [0, 1, 2])
        assert vmap == (0, 1, 2)
        assert are_isomorphic(sub, path_graph(3))

    def test_full_vertex_set_identity(self, c6):
        sub, _ = induced_subgraph(c6, range(6))
        assert sub == c6

    def test_one_side_is_edgeless(self, c6):
        sub, _ = induced_subgraph(c6, [0, 2, 4])
        assert sub.edge_count() == 0

    def test_out_of_range_rejected(self, c4):
        with pytest.raises(ValueError):
            induced_subgraph(c4, [0, 9])


class TestChordal:
    def test_trees_are_chordal(self):
        for g in (path_graph(6), complete_bipartite(1, 5)):
            ok, wit = is_chordal(g)
            assert ok and wit is None

    def test_c4_not_chordal_with_witness(self, c4):
        ok, wit = is_chordal(c4)
        assert not ok
        assert len(wit) >= 4
        wit.validate(c4)

    def test_k4_minus_edge_chordal(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert is_chordal(g)[0]
        assert not brute_force_has_chordless_cycle_geq(g, 4)

    def test_agrees_with_cycle_search_small_classes(self):
        for n in range(1, 8):
            for g in enumerate_graphs(n):
                assert is_chordal(g)[0] == (find_induced_cycle_geq(g, 4) is None)

    def test_agrees_with_cycle_search_random_big(self):
        rng = random.Random(23)
        for _ in range(120):
            g = random_graph(rng, 8, rng.choice([0.2, 0.4, 0.6]))
            assert is_chordal(g)[0] == (find_induced_cycle_geq(g, 4) is None)


class TestInducedCycleSearch:
    def test_rejects_small_k(self, c4):
        with pytest.raises(ValueError):
            find_induced_cycle_geq(c4, 3)

    def test_c6_len6(self, c6):
        wit = find_induced_cycle_geq(c6, 6)
        assert tuple(wit.vertices) == (0, 1, 2, 3, 4, 5)

    def test_c6_with_long_chord_has_none(self, c6):
        chorded = Graph(6, list(c6.edges) + [(0, 3)])
        assert find_induced_cycle_geq(chorded, 6) is None
        assert not brute_force_has_chordless_cycle_geq(chorded, 6)

    def test_complement_of_c6_has_square(self, c6):
        wit = find_induced_cycle_geq(complement(c6), 4)
        assert wit is not None and len(wit) == 4
        wit.validate(complement(c6))

    def test_every_witness_chordless(self):
        rng = random.Random(31)
        for _ in range(150):
            g = random_graph(rng, rng.randint(4, 8), 0.45)
            for k in (4, 5, 6):
                wit = find_induced_cycle_geq(g, k)
                if wit is not None:
                    assert len(wit) >= k
                    wit.validate(g)
                else:
                    assert not brute_force_has_chordless_cycle_geq(g, k)

    def test_bipartite_complement_never_has_long_induced_cycle(self):
        # For any bipartite graph the complement has no induced cycle >= 5.
        for n in range(2, 8):
            for g in enumerate_connected_bipartite(n):
                assert find_induced_cycle_geq(complement(g), 5) is None


class TestChordalBipartite:
    def test_c6_false(self, c6):
        assert not is_chordal_bipartite(c6)

    def test_c4_true(self, c4):
        assert is_chordal_bipartite(c4)

    def test_matching_true(self):
        assert is_chordal_bipartite(Graph(6, [(0, 3), (1, 4), (2, 5)]))

    def test_non_bipartite_rejected(self, k3):
        with pytest.raises(ValueError):
            is_chordal_bipartite(k3)


class TestEnumeration:
    def test_connected_bipartite_counts(self):
        expected = {2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44}
        for n, count in expected.items():
            assert len(list(enumerate_connected_bipartite(n))) == count

    def test_range_enforced(self):
        with pytest.raises(ValueError):
            list(enumerate_connected_bipartite(1))
        with pytest.raises(ValueError):
            list(enumerate_connected_bipartite(9))

    def test_n4_classes(self):
        reps = list(enumerate_connected_bipartite(4))
        expected = [path_graph(4), complete_bipartite(1, 3), cycle_graph(4)]
        for target in expected:
            assert sum(are_isomorphic(g, target) for g in reps) == 1

    def test_pairwise_non_isomorphic(self):
        for n in range(2, 7):
            reps = list(enumerate_connected_bipartite(n))
            for a, b in itertools.combinations(reps, 2):
                assert not are_isomorphic(a, b)

    def test_all_connected_and_bipartite(self):
        for n in range(2, 8):
            for g in enumerate_connected_bipartite(n):
                assert g.is_connected()
                assert is_bipartite(g) is not None

    def test_all_graph_classes_counts(self):
        expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
        connected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n in (1, 2, 3, 4, 5, 6, 7):
            assert len(enumerate_graphs(n)) == expected[n]
            assert len(enumerate_graphs(n, connected_only=True)) == connected[n]
