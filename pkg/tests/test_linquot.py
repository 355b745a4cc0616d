"""Linear quotients recognition, complete search, and restriction inheritance."""

import random
from itertools import combinations, permutations

import pytest

from boundedpowers import (
    LQOrdering,
    SearchCapExceeded,
    all_bounded_powers_lq,
    colon_mono,
    cycle_graph,
    degree,
    enumerate_labeled_graphs,
    find_lq_ordering,
    is_lq_ordering,
    minimalize,
    path_graph,
    restrict_lq_ordering,
)

REMARK_IDEAL = minimalize(5, [(1, 1, 1, 0, 0), (1, 0, 0, 1, 1)])


def brute_force_has_lq(ideal) -> bool:
    """Try every permutation, unfolding the definition directly."""
    m = len(ideal.gens)
    for order in permutations(range(m)):
        if is_lq_ordering(ideal, order):
            return True
    return False


def random_ideal(rng, nmax=4, max_gens=5, max_exp=2):
    n = rng.randint(1, nmax)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(g):
            gens.append(g)
    return minimalize(n, gens or [(1,) + (0,) * (n - 1)])


class TestIsLQOrdering:
    def test_single_generator_vacuous(self):
        assert is_lq_ordering(minimalize(2, [(1, 1)]), (0,))
        assert is_lq_ordering(minimalize(2, []), ())

    def test_path_both_orders(self):
        ideal = path_graph(3).edge_ideal()
        assert is_lq_ordering(ideal, (0, 1))
        assert is_lq_ordering(ideal, (1, 0))

    def test_remark_ideal_fails_both_orders(self):
        assert not is_lq_ordering(REMARK_IDEAL, (0, 1))
        assert not is_lq_ordering(REMARK_IDEAL, (1, 0))

    def test_not_a_permutation(self):
        ideal = path_graph(3).edge_ideal()
        with pytest.raises(ValueError):
            is_lq_ordering(ideal, (0, 0))
        with pytest.raises(ValueError):
            is_lq_ordering(ideal, (0,))

    def test_order_sensitivity(self):
        # gens sort to (x2^2, x1x2, x1^2); starting x1^2, x2^2 leaves a
        # degree-2 prefix colon with no variable to cover it
        ideal = minimalize(2, [(2, 0), (1, 1), (0, 2)])
        assert is_lq_ordering(ideal, (0, 1, 2))
        assert not is_lq_ordering(ideal, (2, 0, 1))


class TestFindLQOrdering:
    def test_remark_ideal_has_none(self):
        assert find_lq_ordering(REMARK_IDEAL) is None

    def test_principal(self):
        ordering = find_lq_ordering(minimalize(3, [(1, 2, 0)]))
        assert ordering is not None and ordering.order == (0,) and ordering.valid

    def test_zero_ideal(self):
        ordering = find_lq_ordering(minimalize(2, []))
        assert ordering is not None and ordering.order == ()

    def test_chordal_complement_edge_ideals_found(self):
        for n in range(2, 5):
            for g in enumerate_labeled_graphs(n):
                if g.complement().is_chordal() and g.edges:
                    assert find_lq_ordering(g.edge_ideal()) is not None

    def test_agrees_with_permutation_brute_force(self):
        rng = random.Random(23)
        for _ in range(120):
            ideal = random_ideal(rng)
            if len(ideal.gens) > 6:
                continue
            found = find_lq_ordering(ideal)
            assert (found is not None) == brute_force_has_lq(ideal)
            if found is not None:
                assert is_lq_ordering(ideal, found.order)

    def test_cap_refusal(self):
        gens = [tuple(1 if k in pair else 0 for k in range(6)) for pair in combinations(range(6), 2)]
        big = minimalize(6, gens)
        with pytest.raises(SearchCapExceeded):
            find_lq_ordering(big, max_generators=5)

    def test_deterministic_tie_break(self):
        ideal = path_graph(3).edge_ideal()
        assert find_lq_ordering(ideal).order == (0, 1)


class TestRestrictOrdering:
    def test_full_bound_keeps_ordering(self):
        ideal = path_graph(4).edge_ideal()
        ordering = find_lq_ordering(ideal)
        induced = restrict_lq_ordering(ideal, ordering, (2,) * 4)
        assert induced.ideal == ideal
        assert induced.order == ordering.order
        assert induced.valid

    def test_single_survivor(self):
        ideal = minimalize(2, [(2, 0), (1, 1), (0, 2)])
        ordering = LQOrdering(ideal, (0, 1, 2), valid=is_lq_ordering(ideal, (0, 1, 2)))
        induced = restrict_lq_ordering(ideal, ordering, (1, 1))
        assert induced.ideal.gens == ((1, 1),)
        assert induced.order == (0,)
        assert induced.valid

    def test_invalid_input_rejected(self):
        ideal = minimalize(2, [(2, 0), (1, 1), (0, 2)])
        bad = LQOrdering(ideal, (2, 0, 1), valid=False)
        with pytest.raises(ValueError):
            restrict_lq_ordering(ideal, bad, (1, 1))

    def test_inheritance_on_random_ideals(self):
        rng = random.Random(29)
        checked = 0
        while checked < 60:
            ideal = random_ideal(rng, nmax=4, max_gens=5)
            ordering = find_lq_ordering(ideal)
            if ordering is None:
                continue
            for _ in range(3):
                c = tuple(rng.randint(0, 3) for _ in range(ideal.n))
                induced = restrict_lq_ordering(ideal, ordering, c)
                assert induced.valid, (ideal, c)
            checked += 1

    def test_persistence_under_smaller_bounds(self):
        rng = random.Random(31)
        checked = 0
        while checked < 40:
            ideal = random_ideal(rng, nmax=4, max_gens=5)
            if find_lq_ordering(ideal) is None:
                continue
            c = tuple(rng.randint(0, 3) for _ in range(ideal.n))
            smaller = tuple(rng.randint(0, x) for x in c)
            if find_lq_ordering(ideal.restrict(c)) is not None:
                assert find_lq_ordering(ideal.restrict(smaller)) is not None
            checked += 1


class TestAllBoundedPowersLQ:
    def test_c4_true(self):
        assert all_bounded_powers_lq(cycle_graph(4), (1, 1, 1, 1))

    def test_c5_false(self):
        assert not all_bounded_powers_lq(cycle_graph(5), (1,) * 5)
        assert not cycle_graph(5).complement().is_chordal()

    def test_zero_component_rejected(self):
        with pytest.raises(ValueError):
            all_bounded_powers_lq(path_graph(3), (1, 0, 1))

    def test_equivalence_with_chordal_complement(self):
        for n in range(1, 5):
            for g in enumerate_labeled_graphs(n):
                expected = g.complement().is_chordal()
                assert all_bounded_powers_lq(g, (1,) * n) == expected
                assert all_bounded_powers_lq(g, (2,) * n) == expected
