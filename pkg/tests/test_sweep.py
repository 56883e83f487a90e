"""Slice sweep for intervals in N^2 and N^3."""

import numpy as np
import pytest

from poset_scaffolds.cli.generators import random_grid_interval, random_upset
from poset_scaffolds.exceptions import IntervalError
from poset_scaffolds.posets import GridInterval
from poset_scaffolds.scaffolds import (
    koszul_beta1_support,
    scaffold_joins_nd,
    scaffold_sweep_3d,
    sweep_upset_scaffold,
    upset_scaffold_joins,
    verify_scaffold,
)


@pytest.fixture
def sweep(sweep_generators):
    return sweep_upset_scaffold(sweep_generators)


class TestWorkedUpset:
    def test_levels(self, sweep):
        assert [level.z for level in sweep.levels] == [0, 1]

    def test_first_level(self, sweep):
        level = sweep.levels[0]
        assert set(level.w_points) == {(1, 6, 0), (3, 5, 0), (4, 4, 0), (5, 2, 0)}
        assert level.x_points == ()

    def test_second_level(self, sweep):
        level = sweep.levels[1]
        assert set(level.w_points) == {(2, 3, 1), (4, 2, 1), (5, 1, 1)}
        assert set(level.x_points) == {(1, 5, 1), (3, 4, 1), (4, 2, 1)}
        assert level.frontier_size == 5

    def test_w_relations(self, sweep):
        assert sweep.relations[(1, 6, 0)] == ((0, 6, 0), (1, 5, 0))
        assert sweep.relations[(5, 1, 1)] == ((4, 1, 1), (5, 0, 0))

    def test_x_relations(self, sweep):
        assert sweep.relations[(1, 5, 1)] == ((1, 3, 1), (1, 5, 0))
        assert sweep.relations[(3, 4, 1)] == ((2, 2, 1), (3, 4, 0))

    def test_point_in_both_w_and_x(self, sweep):
        assert sweep.relations[(4, 2, 1)] == ((2, 2, 1), (4, 1, 1), (4, 2, 0))

    def test_sizes(self, sweep):
        assert len(sweep.essential) == 9
        assert len(sweep.elements) == 17

    def test_agrees_with_joins(self, sweep, sweep_generators):
        assert set(sweep.essential) == set(upset_scaffold_joins(tuple(sweep_generators)))

    def test_agrees_with_koszul(self, sweep, sweep_generators):
        assert set(sweep.essential) == set(koszul_beta1_support(sweep_generators).beta1)

    def test_verifies_on_a_box(self, sweep_generators):
        Q = GridInterval.from_extrema(sweep_generators, [(7, 7, 2)])
        P = scaffold_sweep_3d(Q)
        assert len(P) == 17
        assert verify_scaffold(P, Q.to_poset())


def test_join_kept_when_only_one_new_endpoint_is_clear():
    # (3,5,1) evicts (5,5,0), which blocks the row check; the column check of
    # (7,2,1) still passes, so the join (7,5,1) is essential.
    generators = [(5, 5, 0), (3, 5, 1), (7, 2, 1)]
    sweep = sweep_upset_scaffold(generators)
    assert set(sweep.essential) == {(5, 5, 1), (7, 5, 1)}
    assert sweep.relations[(7, 5, 1)] == ((3, 5, 1), (7, 2, 1))
    assert sweep.relations[(5, 5, 1)] == ((3, 5, 1), (5, 5, 0))
    assert set(sweep.essential) == set(koszul_beta1_support(generators).beta1)


class TestPlanar:
    def test_two_minima(self):
        Q = GridInterval(2, ((0, 2), (1, 0)))
        P = scaffold_sweep_3d(Q)
        assert P.elements == ((0, 2), (1, 0), (1, 2))
        assert P.relations == (((0, 2), (1, 2)), ((1, 0), (1, 2)))

    def test_single_minimum(self):
        P = scaffold_sweep_3d(GridInterval(2, ((3, 3),)))
        assert P.elements == ((3, 3),)
        assert P.relations == ()

    def test_cogenerator_removes_join(self):
        Q = GridInterval(2, ((0, 2), (1, 0)), cogenerators=((1, 2),))
        assert scaffold_sweep_3d(Q).elements == ((0, 2), (1, 0))


class TestGuards:
    def test_dimension(self):
        with pytest.raises(IntervalError):
            scaffold_sweep_3d(GridInterval(4, ((0, 0, 0, 0),)))

    def test_levels_must_increase(self):
        from poset_scaffolds.scaffolds import SweepState

        state = SweepState()
        state.advance(1, [(0, 0)], {})
        with pytest.raises(ValueError):
            state.advance(1, [(1, 1)], {})

    def test_frontier_stays_an_antichain(self, sweep_generators):
        from poset_scaffolds.scaffolds import SweepState

        state = SweepState()
        state.advance(0, [p[:2] for p in sweep_generators[:5]], {})
        state.advance(1, [p[:2] for p in sweep_generators[5:]], {})
        assert state.is_antichain()
        assert len(state) == 5


@pytest.mark.parametrize("seed", range(10))
def test_random_upsets_match_joins(seed):
    rng = np.random.default_rng(seed)
    U = random_upset(rng, 3, int(rng.integers(3, 40)))
    sweep = sweep_upset_scaffold(U.minima)
    joins = upset_scaffold_joins(U.minima)
    assert set(sweep.essential) == set(joins)
    assert set(sweep.essential) == set(koszul_beta1_support(U.minima).beta1)


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("seed", range(6))
def test_random_intervals_verify(d, seed):
    rng = np.random.default_rng(100 * d + seed)
    Q = random_grid_interval(rng, d, int(rng.integers(2, 9)))
    sweep = scaffold_sweep_3d(Q)
    joins = scaffold_joins_nd(Q)
    materialized = Q.to_poset()
    assert set(sweep.elements) == set(joins.elements)
    assert verify_scaffold(sweep, materialized)
    assert verify_scaffold(joins, materialized)
