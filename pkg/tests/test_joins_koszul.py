"""Join-based scaffolds in any dimension, the Koszul Betti oracle and grid dispatch."""

import numpy as np
import pytest

from poset_scaffolds.cli.generators import random_grid_interval, random_upset
from poset_scaffolds.exceptions import IntervalError
from poset_scaffolds.posets import GridInterval
from poset_scaffolds.scaffolds import (
    betti1_support,
    brute_force_essential,
    essential_points_grid,
    final_scaffold_grid,
    initial_scaffold_grid,
    koszul_beta1,
    koszul_beta1_support,
    scaffold_joins_nd,
    upset_family_essential,
    upset_family_u_k,
    upset_scaffold_joins,
    verify_scaffold,
)
from poset_scaffolds.scaffolds.grid import resolve_algorithm
from poset_scaffolds.scaffolds.joins import pairwise_joins


class TestKoszul:
    def test_two_variables(self):
        support = koszul_beta1_support([(1, 0), (0, 1)])
        assert support.beta1 == ((1, 1),)
        assert support.beta1_values == {(1, 1): 1}

    def test_single_generator(self):
        assert koszul_beta1_support([(2, 3, 1)]).beta1 == ()

    def test_beta0_is_pruned(self):
        assert koszul_beta1_support([(1, 1), (2, 2), (0, 3)]).beta0 == ((0, 3), (1, 1))

    def test_three_generators_at_one_join(self):
        gens = np.array([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        # At (1,1,1) every pair of vertices is joined by an edge.
        assert koszul_beta1((1, 1, 1), gens) == 0
        assert koszul_beta1((1, 1, 0), gens) == 1

    def test_not_a_join(self):
        gens = np.array([(2, 0), (0, 2)])
        assert koszul_beta1((3, 3), gens) == 0

    def test_support_is_disjoint_from_generators(self):
        U = random_upset(np.random.default_rng(3), 4, 12)
        support = koszul_beta1_support(U.minima)
        assert not set(support.beta0) & set(support.beta1)


class TestFamilyU:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_essential_count(self, k):
        minima = upset_family_u_k(k)
        essential = upset_scaffold_joins(minima)
        assert set(essential) == set(upset_family_essential(k))
        assert len(essential) == (k + 1) ** 2 + 2 * k

    def test_cross_points_for_k2(self):
        essential = upset_scaffold_joins(upset_family_u_k(2))
        for i in range(3):
            for j in range(3):
                assert (i, 2 - i, j, 2 - j) in essential

    def test_koszul_agrees(self):
        minima = upset_family_u_k(2)
        assert set(koszul_beta1_support(minima).beta1) == set(upset_family_essential(2))

    def test_family_starts_at_one(self):
        with pytest.raises(ValueError):
            upset_family_u_k(0)


class TestJoins:
    def test_pairwise_joins_exclude_minima(self):
        assert pairwise_joins(((0, 1), (1, 0))) == [(1, 1)]

    def test_one_minimum(self):
        P = scaffold_joins_nd(GridInterval(5, ((1, 2, 3, 4, 5),)))
        assert P.elements == ((1, 2, 3, 4, 5),)
        assert P.relations == ()

    def test_chain_in_one_dimension(self):
        Q = GridInterval(1, ((3,),), maxima=((7,),))
        P = initial_scaffold_grid(Q)
        assert P.elements == ((3,),)
        assert verify_scaffold(P, Q.to_poset())

    @pytest.mark.parametrize("seed", range(8))
    def test_random_upsets_in_four_dimensions(self, seed):
        U = random_upset(np.random.default_rng(seed), 4, 10)
        joins = upset_scaffold_joins(U.minima)
        assert set(joins) == set(koszul_beta1_support(U.minima).beta1)
        for p, reps in joins.items():
            assert len(reps) >= 2
            assert all(m in U.minima for m in reps)

    @pytest.mark.parametrize("seed", range(4))
    def test_random_intervals_in_four_dimensions(self, seed):
        Q = random_grid_interval(np.random.default_rng(seed), 4, 4, height=1)
        P = scaffold_joins_nd(Q)
        assert set(P.elements) == essential_points_grid(Q)
        assert verify_scaffold(P, Q.to_poset())


class TestDispatch:
    def test_resolve(self):
        assert resolve_algorithm(2) == "sweep"
        assert resolve_algorithm(3) == "sweep"
        assert resolve_algorithm(4) == "joins"
        assert resolve_algorithm(3, "joins") == "joins"

    def test_sweep_needs_low_dimension(self):
        with pytest.raises(IntervalError):
            resolve_algorithm(4, "sweep")

    def test_unknown_algorithm(self):
        with pytest.raises(IntervalError):
            resolve_algorithm(2, "magic")

    def test_final_scaffold_of_box(self):
        Q = GridInterval.from_extrema([(0, 3), (1, 1), (3, 0)], [(2, 5), (4, 3), (5, 1)])
        P = final_scaffold_grid(Q)
        assert P.direction == "final"
        assert set(P.elements) == {(2, 5), (4, 3), (5, 1), (2, 3), (4, 1)}
        assert verify_scaffold(P, Q.to_poset())

    def test_initial_scaffold_of_box(self):
        Q = GridInterval.from_extrema([(0, 3), (1, 1), (3, 0)], [(2, 5), (4, 3), (5, 1)])
        for algo in ("sweep", "joins"):
            P = initial_scaffold_grid(Q, algo)
            assert P.elements == ((0, 3), (1, 1), (1, 3), (3, 0), (3, 1))
            assert verify_scaffold(P, Q.to_poset())

    def test_betti1_support_algorithms_agree(self, sweep_generators):
        assert betti1_support(sweep_generators, "sweep") == betti1_support(sweep_generators, "joins")

    def test_betti1_support_of_planar_ideal(self):
        assert betti1_support([(0, 2), (1, 0)]) == ((1, 2),)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("seed", range(50))
def test_random_intervals_against_brute_force(d, seed):
    rng = np.random.default_rng(1000 * d + seed)
    if d == 4:
        Q = random_grid_interval(rng, 4, int(rng.integers(1, 6)), height=1)
    else:
        Q = random_grid_interval(rng, d, int(rng.integers(1, 9)))
    materialized = Q.to_poset()
    expected = brute_force_essential(materialized)
    assert essential_points_grid(Q) == expected
    for algo in ("joins", "sweep") if d in (2, 3) else ("joins",):
        P = initial_scaffold_grid(Q, algo)
        assert set(P.elements) == expected
        assert verify_scaffold(P, materialized)
    final = final_scaffold_grid(Q)
    assert set(final.elements) == brute_force_essential(materialized.opposite())
    assert verify_scaffold(final, materialized)
