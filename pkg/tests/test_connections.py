"""Even-connections and colon structure of consecutive bounded powers."""

import random
from itertools import combinations, permutations

import pytest

from boundedpowers import (
    Graph,
    SearchCapExceeded,
    bounded_power,
    bounded_power_chain,
    colon_generated_in_degree_two,
    colon_mono,
    colon_quadrics,
    complete_graph,
    cycle_graph,
    degree,
    edge_factorization,
    even_connected_targets,
    find_even_connection,
    has_colon_splitting_order,
    is_valid_even_connection,
    path_graph,
)


def random_graph(rng, n):
    edges = [(i, j) for i, j in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


def random_edge_multiset(rng, g, size):
    edges = g.sorted_edges()
    return [edges[rng.randrange(len(edges))] for _ in range(size)] if edges else []


class TestFindEvenConnection:
    def test_path_endpoints(self):
        conn = find_even_connection(path_graph(4), [(2, 3)], 1, 4)
        assert conn is not None
        assert conn.path == (1, 2, 3, 4)
        assert conn.r == 1
        assert is_valid_even_connection(path_graph(4), [(2, 3)], 1, 4, conn)

    def test_empty_multiset(self):
        assert find_even_connection(path_graph(4), [], 1, 4) is None

    def test_adjacent_without_usable_interior(self):
        assert find_even_connection(path_graph(4), [(3, 4)], 1, 2) is None

    def test_self_connection(self):
        # 1,2,1,2: the interior pair is the queried edge itself
        conn = find_even_connection(complete_graph(2), [(1, 2)], 1, 2)
        assert conn is not None and conn.path == (1, 2, 1, 2)
        # in K2 odd positions always sit at the other endpoint: no loop at 1
        assert find_even_connection(complete_graph(2), [(1, 2)], 1, 1) is None
        # the triangle walk 1,2,3,1 realizes x1^2 in the colon
        loop = find_even_connection(complete_graph(3), [(2, 3)], 1, 1)
        assert loop is not None and loop.path == (1, 2, 3, 1)
        assert is_valid_even_connection(complete_graph(3), [(2, 3)], 1, 1, loop)

    def test_multiplicity_capacity(self):
        # walking 1..6 needs the interior edges (2,3) and (4,5); one copy of
        # (2,3) cannot serve twice
        g = path_graph(6)
        assert find_even_connection(g, [(2, 3), (4, 5)], 1, 6) is not None
        assert find_even_connection(g, [(2, 3)], 1, 6) is None
        assert find_even_connection(g, [(2, 3), (2, 3)], 1, 6) is None

    def test_unknown_vertex(self):
        with pytest.raises(ValueError):
            find_even_connection(path_graph(3), [(1, 2)], 1, 9)
        with pytest.raises(ValueError):
            find_even_connection(path_graph(3), [(1, 3)], 1, 2)

    def test_symmetry_and_witness_validity(self):
        rng = random.Random(53)
        for _ in range(150):
            g = random_graph(rng, rng.randint(2, 6))
            if not g.edges:
                continue
            edges = random_edge_multiset(rng, g, rng.randint(1, 3))
            a = rng.randint(1, g.n)
            b = rng.randint(1, g.n)
            forward = find_even_connection(g, edges, a, b)
            backward = find_even_connection(g, edges, b, a)
            assert (forward is None) == (backward is None)
            for conn, (x, y) in ((forward, (a, b)), (backward, (b, a))):
                if conn is not None:
                    assert is_valid_even_connection(g, edges, x, y, conn)

    def test_targets_match_pairwise_queries(self):
        rng = random.Random(59)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 5))
            if not g.edges:
                continue
            edges = random_edge_multiset(rng, g, rng.randint(1, 2))
            for a in g.vertices():
                targets = even_connected_targets(g, edges, a)
                for b in g.vertices():
                    assert (b in targets) == (
                        find_even_connection(g, edges, a, b) is not None
                    )


class TestEdgeFactorization:
    def test_lexicographically_smallest(self):
        g = cycle_graph(4)
        u = (1, 1, 1, 1)
        assert edge_factorization(g, 2, u) == ((1, 2), (3, 4))

    def test_repeated_edge(self):
        g = complete_graph(2)
        assert edge_factorization(g, 2, (2, 2)) == ((1, 2), (1, 2))

    def test_no_factorization(self):
        assert edge_factorization(path_graph(3), 1, (1, 0, 1)) is None


class TestColonQuadrics:
    def test_path_instance(self):
        result = colon_quadrics(path_graph(4), 1, (1, 1, 1, 1), (0, 1, 1, 0))
        assert result.gens == ((1, 0, 0, 1),)

    def test_triangle_top_degenerates_to_zero(self):
        assert colon_quadrics(complete_graph(3), 1, (1, 1, 1), (1, 1, 0)).is_zero()

    def test_rejects_non_generator(self):
        with pytest.raises(ValueError):
            colon_quadrics(complete_graph(2), 2, (1, 1), (1, 1))
        with pytest.raises(ValueError):
            colon_quadrics(path_graph(4), 1, (1, 1, 1, 1), (1, 0, 1, 0))

    def test_equals_direct_colon_randomized(self):
        rng = random.Random(61)
        checked = 0
        while checked < 40:
            g = random_graph(rng, rng.randint(3, 5))
            c = tuple(rng.randint(1, 2) for _ in range(g.n))
            chain = bounded_power_chain(g.edge_ideal(), c)
            if len(chain) < 2:
                continue
            s = rng.randint(1, len(chain) - 1)
            for u in chain[s - 1].gens:
                assert colon_quadrics(g, s, c, u) == chain[s].colon(u)
            checked += 1

    def test_factorization_independence(self):
        g = cycle_graph(4)
        c = (1, 1, 1, 1)
        u = (1, 1, 1, 1)
        chain = bounded_power_chain(g.edge_ideal(), c)
        assert len(chain) == 2  # u generates the top power; colon is vacuous there
        c = (2, 2, 2, 2)
        first = colon_quadrics(g, 2, c, u, factorization=[(1, 2), (3, 4)])
        second = colon_quadrics(g, 2, c, u, factorization=[(1, 4), (2, 3)])
        assert first == second
        assert first == bounded_power(g.edge_ideal(), 3, c).colon(u)

    def test_independence_over_all_factorizations(self):
        def all_factorizations(g, s, u):
            edges = g.sorted_edges()

            def extend(start, remaining, depth):
                if depth == 0:
                    if not any(remaining):
                        yield ()
                    return
                for k in range(start, len(edges)):
                    i, j = edges[k]
                    if remaining[i - 1] > 0 and remaining[j - 1] > 0:
                        remaining[i - 1] -= 1
                        remaining[j - 1] -= 1
                        for tail in extend(k, remaining, depth - 1):
                            yield (edges[k],) + tail
                        remaining[i - 1] += 1
                        remaining[j - 1] += 1

            return list(extend(0, list(u), s))

        rng = random.Random(79)
        multi_seen = 0
        while multi_seen < 10:
            g = random_graph(rng, rng.randint(3, 5))
            c = tuple(rng.randint(1, 2) for _ in range(g.n))
            chain = bounded_power_chain(g.edge_ideal(), c)
            if len(chain) < 2:
                continue
            s = rng.randint(1, len(chain) - 1)
            for u in chain[s - 1].gens:
                factorizations = all_factorizations(g, s, u)
                if len(factorizations) < 2:
                    continue
                expected = chain[s].colon(u)
                for fact in factorizations:
                    assert colon_quadrics(g, s, c, u, factorization=fact) == expected
                multi_seen += 1

    def test_bad_factorization_rejected(self):
        with pytest.raises(ValueError):
            colon_quadrics(
                cycle_graph(4), 2, (2, 2, 2, 2), (1, 1, 1, 1), factorization=[(1, 2), (1, 2)]
            )


class TestDegreeTwo:
    def test_path_instance(self):
        assert colon_generated_in_degree_two(path_graph(4), 1, (1, 1, 1, 1))

    def test_range_violation(self):
        with pytest.raises(ValueError):
            colon_generated_in_degree_two(complete_graph(2), 1, (1, 1))
        with pytest.raises(ValueError):
            colon_generated_in_degree_two(path_graph(4), 0, (1, 1, 1, 1))

    def test_randomized(self):
        rng = random.Random(67)
        checked = 0
        while checked < 30:
            g = random_graph(rng, rng.randint(3, 5))
            c = tuple(rng.randint(1, 2) for _ in range(g.n))
            chain = bounded_power_chain(g.edge_ideal(), c)
            if len(chain) < 2:
                continue
            for s in range(1, len(chain)):
                assert colon_generated_in_degree_two(g, s, c)
            checked += 1


def brute_force_splitting_labeling(gens, colon_ideals) -> bool:
    """Permutations oracle: check the pairwise condition on every labeling."""

    def pair_ok(order, pos):
        i = order[pos]
        for j in order[:pos]:
            w = colon_mono(gens[j], gens[i])
            if colon_ideals[i].contains(w):
                continue
            if any(
                degree(colon_mono(gens[r], gens[i])) == 1
                and all(
                    a >= b
                    for a, b in zip(w, colon_mono(gens[r], gens[i]))
                )
                for r in order[:pos]
            ):
                continue
            return False
        return True

    m = len(gens)
    return any(
        all(pair_ok(order, pos) for pos in range(m)) for order in permutations(range(m))
    )


class TestSplittingOrder:
    def test_single_generator(self):
        assert has_colon_splitting_order(complete_graph(2), 1, (2, 2))

    def test_cap_refusal(self):
        g = complete_graph(5)
        with pytest.raises(SearchCapExceeded):
            has_colon_splitting_order(g, 1, (2,) * 5, max_generators=3)

    def test_range_violation(self):
        with pytest.raises(ValueError):
            has_colon_splitting_order(complete_graph(2), 1, (1, 1))

    def test_agrees_with_permutation_oracle(self):
        rng = random.Random(71)
        checked = 0
        while checked < 25:
            g = random_graph(rng, rng.randint(3, 5))
            c = tuple(rng.randint(1, 2) for _ in range(g.n))
            chain = bounded_power_chain(g.edge_ideal(), c)
            if len(chain) < 2 or len(chain[0].gens) > 6:
                continue
            s = 1
            gens = chain[s - 1].gens
            colon_ideals = [chain[s].colon(u) for u in gens]
            expected = brute_force_splitting_labeling(gens, colon_ideals)
            assert has_colon_splitting_order(g, s, c) == expected
            checked += 1

    def test_randomized_always_exists(self):
        rng = random.Random(73)
        checked = 0
        while checked < 30:
            g = random_graph(rng, rng.randint(3, 5))
            c = tuple(rng.randint(1, 2) for _ in range(g.n))
            chain = bounded_power_chain(g.edge_ideal(), c)
            if len(chain) < 2:
                continue
            for s in range(1, len(chain)):
                try:
                    assert has_colon_splitting_order(g, s, c, max_generators=12)
                except SearchCapExceeded:
                    pass
            checked += 1
