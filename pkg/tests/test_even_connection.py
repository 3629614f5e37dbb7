"""Even-connection search, colon graphs, and the dual-oracle comparisons."""

import itertools
import random

import pytest

from edgereg.even_connection import (
    ColonCheck,
    EvenConnectionWitness,
    colon_graph,
    connection_ideal,
    even_connected_targets,
    find_even_connection,
    validate_witness,
    verify_colon_generators,
    verify_connection_monotonicity,
    verify_iterated_colon,
)
from edgereg.graphs import Graph, enumerate_connected_bipartite, is_bipartite
from edgereg.monomials import (
    Monomial,
    SFoldProduct,
    colon_by_monomial,
    edge_ideal,
    ideal_equals,
    power,
)


def random_graph(rng, n, p=0.5):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


class TestFindEvenConnection:
    def test_p4_through_middle_edge(self, p4):
        product = SFoldProduct.of(p4, [(1, 2)])
        witness = find_even_connection(p4, product, 0, 3)
        assert witness.path == (0, 1, 2, 3)
        assert witness.factor_assignment == (0,)

    def test_bipartite_no_self_connection(self, p4):
        product = SFoldProduct.of(p4, [(1, 2)])
        for v in range(4):
            assert find_even_connection(p4, product, v, v) is None

    def test_k3_self_connection(self, k3):
        product = SFoldProduct.of(k3, [(1, 2)])
        witness = find_even_connection(k3, product, 0, 0)
        assert witness.path == (0, 1, 2, 0)
        # direct monomial oracle: x0^2 * x1 * x2 is a two-edge product
        assert power(edge_ideal(k3), 2).contains(Monomial((2, 1, 1)))

    def test_walks_may_repeat_vertices(self, k3):
        product = SFoldProduct.of(k3, [(1, 2)])
        witness = find_even_connection(k3, product, 0, 1)
        validate_witness(k3, product, witness, 0, 1)

    def test_factor_must_be_edge(self, p4):
        with pytest.raises(ValueError):
            SFoldProduct.of(p4, [(0, 3)])

    def test_returned_witness_is_shortest_and_lex_least(self, c6):
        product = SFoldProduct.of(c6, [(0, 1), (2, 3)])
        witness = find_even_connection(c6, product, 5, 2)
        assert witness.k == 1
        assert witness.path == (5, 0, 1, 2)


class TestWitnessValidation:
    def test_rejects_wrong_endpoints(self, p4):
        product = SFoldProduct.of(p4, [(1, 2)])
        w = EvenConnectionWitness((0, 1, 2, 3), (0,))
        with pytest.raises(ValueError):
            validate_witness(p4, product, w, 0, 2)

    def test_rejects_non_factor_interior(self, p4):
        product = SFoldProduct.of(p4, [(0, 1)])
        w = EvenConnectionWitness((0, 1, 2, 3), (0,))
        with pytest.raises(ValueError):
            validate_witness(p4, product, w, 0, 3)

    def test_rejects_budget_overrun(self, c6):
        product = SFoldProduct.of(c6, [(0, 1)])
        w = EvenConnectionWitness((5, 0, 1, 0, 1, 2), (0, 0))
        with pytest.raises(ValueError):
            validate_witness(c6, product, w, 5, 2)

    def test_rejects_non_walk(self, p4):
        product = SFoldProduct.of(p4, [(1, 2)])
        w = EvenConnectionWitness((0, 2, 1, 3), (0,))
        with pytest.raises(ValueError):
            validate_witness(p4, product, w, 0, 3)

    def test_every_found_witness_validates(self):
        rng = random.Random(47)
        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 7), 0.5)
            edges = sorted(g.edges)
            if not edges:
                continue
            factors = [rng.choice(edges) for _ in range(rng.randint(1, 3))]
            product = SFoldProduct.of(g, factors)
            u, v = rng.randrange(g.n), rng.randrange(g.n)
            witness = find_even_connection(g, product, u, v)
            if witness is not None:
                validate_witness(g, product, witness, u, v)
            # the sweep and the single-pair search must agree
            assert (witness is not None) == (
                v in even_connected_targets(g, product, u)
            )


class TestColonGraph:
    def test_p4_becomes_c4(self, p4):
        result = colon_graph(p4, SFoldProduct.of(p4, [(1, 2)]))
        assert result.new_edges == frozenset({(0, 3)})
        assert not result.extra_squares
        assert result.graph.edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})

    def test_c6_single_edge_adds_one_chord(self, c6):
        # e = {0,1}: the only even-connected pair is {2,5}; verified against
        # the division oracle below.
        result = colon_graph(c6, SFoldProduct.of(c6, [(0, 1)]))
        assert result.new_edges == frozenset({(2, 5)})
        colon = colon_by_monomial(
            power(edge_ideal(c6), 2), Monomial((1, 1, 0, 0, 0, 0))
        )
        assert ideal_equals(connection_ideal(c6, SFoldProduct.of(c6, [(0, 1)])), colon)

    def test_star_pendant_repetitions_add_nothing(self, star3):
        product = SFoldProduct.of(star3, [(0, 1), (0, 1)])
        result = colon_graph(star3, product)
        assert not result.new_edges and not result.extra_squares

    def test_k3_square_recorded(self, k3):
        result = colon_graph(k3, SFoldProduct.of(k3, [(1, 2)]))
        assert 0 in result.extra_squares

    def test_bipartite_result_same_bipartition(self):
        rng = random.Random(53)
        for g in enumerate_connected_bipartite(6):
            edges = sorted(g.edges)
            product = SFoldProduct.of(
                g, [rng.choice(edges) for _ in range(rng.randint(1, 2))]
            )
            result = colon_graph(g, product)
            assert not result.extra_squares
            bip = is_bipartite(g)
            for u, v in result.graph.edges:
                assert bip.side_of(u) != bip.side_of(v)


class TestColonTheorem:
    def test_p4(self, p4):
        assert verify_colon_generators(p4, SFoldProduct.of(p4, [(1, 2)])).ok

    def test_k3_square_on_both_sides(self, k3):
        product = SFoldProduct.of(k3, [(1, 2)])
        check = verify_colon_generators(k3, product)
        assert check.ok
        assert connection_ideal(k3, product).contains(Monomial((2, 0, 0)))

    def test_c6_all_pairs_exhaustive(self, c6):
        ideal = edge_ideal(c6)
        edges = sorted(c6.edges)
        for s in (1, 2):
            target = power(ideal, s + 1)
            for combo in itertools.combinations_with_replacement(edges, s):
                check = verify_colon_generators(
                    c6, SFoldProduct.of(c6, combo), target
                )
                assert check.ok, (combo, check.to_json())

    def test_random_graphs_sampled(self):
        rng = random.Random(59)
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 6), 0.5)
            edges = sorted(g.edges)
            if not edges:
                continue
            s = rng.randint(1, 3)
            product = SFoldProduct.of(
                g, tuple(rng.choice(edges) for _ in range(s))
            )
            assert verify_colon_generators(g, product).ok

    def test_check_json_fields(self, p4):
        check = verify_colon_generators(p4, SFoldProduct.of(p4, [(1, 2)]))
        doc = check.to_json()
        assert doc == {"ok": True, "only_left": [], "only_right": []}

    def test_mismatch_reporting_shape(self):
        check = ColonCheck(False, (Monomial((1, 1)),), ())
        doc = check.to_json()
        assert doc["only_left"] == ["x0*x1"] and doc["ok"] is False


class TestIteratedColon:
    def test_p4_repeated_middle_edge(self, p4):
        product = SFoldProduct.of(p4, [(1, 2), (1, 2)])
        assert verify_iterated_colon(p4, product, 0)
        assert verify_iterated_colon(p4, product, 1)
        # both sides equal the C4 edge ideal on a,b,c,d
        lhs = colon_by_monomial(power(edge_ideal(p4), 3), product.product)
        c4_ideal = edge_ideal(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
        assert ideal_equals(lhs, c4_ideal)

    def test_s1_trivial(self, c6):
        assert verify_iterated_colon(c6, SFoldProduct.of(c6, [(2, 3)]), 0)

    def test_c6_random_pairs(self, c6):
        rng = random.Random(61)
        edges = sorted(c6.edges)
        for _ in range(10):
            combo = (rng.choice(edges), rng.choice(edges))
            product = SFoldProduct.of(c6, combo)
            assert verify_iterated_colon(c6, product, rng.randint(0, 1))

    def test_rejects_non_bipartite(self, k3):
        with pytest.raises(ValueError):
            verify_iterated_colon(k3, SFoldProduct.of(k3, [(0, 1)]), 0)


class TestMonotonicity:
    def test_same_witness_survives(self, p4):
        sub = SFoldProduct.of(p4, [(1, 2)])
        sup = SFoldProduct.of(p4, [(1, 2), (0, 1)])
        assert verify_connection_monotonicity(p4, sub, sup, 0, 3)

    def test_containment_enforced(self, p4):
        sub = SFoldProduct.of(p4, [(1, 2)])
        sup = SFoldProduct.of(p4, [(0, 1)])
        with pytest.raises(ValueError):
            verify_connection_monotonicity(p4, sub, sup, 0, 3)

    def test_thousand_random_trials(self):
        rng = random.Random(67)
        trials = 0
        while trials < 1000:
            g = random_graph(rng, rng.randint(3, 6), 0.5)
            edges = sorted(g.edges)
            if not edges:
                continue
            trials += 1
            sub_factors = [rng.choice(edges) for _ in range(rng.randint(1, 2))]
            sup_factors = sub_factors + [
                rng.choice(edges) for _ in range(rng.randint(0, 2))
            ]
            u, v = rng.randrange(g.n), rng.randrange(g.n)
            assert verify_connection_monotonicity(
                g,
                SFoldProduct.of(g, sub_factors),
                SFoldProduct.of(g, sup_factors),
                u,
                v,
            )
