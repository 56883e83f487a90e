"""Grid intervals, staircases and materialization."""

import numpy as np
import pytest

from poset_scaffolds.exceptions import IntervalError, MaterializationError
from poset_scaffolds.posets import GridInterval, Staircase
from poset_scaffolds.posets.grid import (
    grid_interval_to_poset,
    grid_leq,
    join,
    membership,
    prune_maximal,
    prune_minimal,
)

BOX_MINIMA = [(0, 3), (1, 1), (3, 0)]
BOX_MAXIMA = [(2, 5), (4, 3), (5, 1)]


@pytest.fixture
def box2d() -> GridInterval:
    return GridInterval.from_extrema(BOX_MINIMA, BOX_MAXIMA)


class TestPoints:
    def test_join(self):
        assert join((1, 4, 0), (3, 2, 0)) == (3, 4, 0)

    def test_prune_minimal(self):
        assert prune_minimal([(2, 2), (1, 3), (1, 1), (4, 0)]) == ((1, 1), (4, 0))

    def test_prune_maximal(self):
        assert prune_maximal([(2, 2), (1, 3), (1, 1)]) == ((1, 3), (2, 2))

    def test_mixed_dimension(self):
        with pytest.raises(IntervalError):
            prune_minimal([(1, 2), (1, 2, 3)])


class TestConstruction:
    def test_needs_a_minimum(self):
        with pytest.raises(IntervalError):
            GridInterval(2, ())

    def test_negative_coordinate(self):
        with pytest.raises(IntervalError):
            GridInterval(2, ((0, -1),))

    def test_form(self, box2d):
        assert box2d.form == "extrema"
        assert GridInterval(2, ((0, 0),)).form == "upset"


class TestValidate:
    def test_box_is_valid(self, box2d):
        box2d.validate()
        assert box2d.is_connected()

    def test_disconnected(self):
        Q = GridInterval.from_extrema([(0, 2), (2, 0)], [(0, 3), (3, 0)])
        with pytest.raises(IntervalError, match="disconnected"):
            Q.validate()

    def test_minimum_above_cogenerator(self):
        Q = GridInterval(2, ((0, 2), (2, 0)), cogenerators=((0, 1),))
        with pytest.raises(IntervalError):
            Q.validate()

    def test_unreached_maximum(self):
        Q = GridInterval(2, ((1, 1),), maxima=((0, 5), (3, 3)))
        with pytest.raises(IntervalError, match="above no minimum"):
            Q.validate()


class TestMembership:
    def test_contains(self, box2d):
        assert (1, 3) in box2d
        assert (3, 4) not in box2d
        assert (0, 0) not in box2d

    def test_contains_many(self, box2d):
        mask = box2d.contains_many(np.array([[1, 3], [3, 4], [5, 1]]))
        assert mask.tolist() == [True, False, True]

    def test_upset_form(self):
        Q = GridInterval(2, ((0, 0),), cogenerators=((2, 2),))
        assert (5, 1) in Q and (2, 2) not in Q

    def test_membership_function(self, box2d):
        assert membership(box2d, (4, 2))
        assert not membership(box2d, (5, 2))
        with pytest.raises(IntervalError):
            membership(box2d, (1, 1, 1))

    def test_truncated_upset_as_poset(self):
        Q = GridInterval(2, ((0, 1), (1, 0)))
        P = grid_interval_to_poset(Q, bound=(1, 1))
        assert set(P.elements) == {(0, 1), (1, 0), (1, 1)}
        assert P.minima() == ((0, 1), (1, 0))
        assert P.maxima() == ((1, 1),)


class TestFiniteness:
    def test_extrema_are_finite(self, box2d):
        assert box2d.is_finite()

    def test_free_upset(self):
        assert not GridInterval(2, ((0, 0),)).is_finite()

    def test_cogenerators_on_every_axis(self):
        assert GridInterval(2, ((0, 0),), cogenerators=((3, 0), (0, 3))).is_finite()

    def test_one_axis_escapes(self):
        assert not GridInterval(2, ((0, 0),), cogenerators=((3, 0),)).is_finite()

    def test_infinite_points_need_bound(self):
        Q = GridInterval(2, ((0, 0),))
        with pytest.raises(MaterializationError):
            Q.points()
        assert len(Q.points(bound=(2, 2))) == 9

    def test_cap(self, box2d):
        with pytest.raises(MaterializationError):
            box2d.points(cap=3)


class TestMaterialization:
    def test_points_are_convex(self, box2d):
        points = box2d.points()
        assert all(p in box2d for p in points)
        brute = [(x, y) for x in range(6) for y in range(6) if (x, y) in box2d]
        assert points == sorted(brute)

    def test_to_poset_order(self, box2d):
        Q = box2d.to_poset()
        for a in Q.elements[:6]:
            for b in Q.elements:
                assert Q.leq(a, b) == grid_leq(a, b)

    def test_round_trip_presentations(self, box2d):
        upset = box2d.to_upset_presentation()
        assert upset.form == "upset"
        assert upset.points() == box2d.points()
        assert upset.to_extrema().maxima == box2d.maxima

    def test_reflect(self, box2d):
        reflected, box = box2d.reflect()
        assert box == (5, 5)
        assert set(reflected.minima) == {(3, 0), (1, 2), (0, 4)}
        assert set(reflected.maxima) == {(5, 2), (4, 4), (2, 5)}


class TestStaircase:
    def test_insert_evicts_dominated(self):
        s = Staircase()
        assert s.insert(0, 6) == []
        assert s.insert(3, 4) == []
        assert s.insert(4, 2) == []
        evicted = s.insert(1, 3, payload="new")
        assert [(x, y) for x, y, _ in evicted] == [(3, 4)]
        assert [(x, y) for x, y, _ in s] == [(0, 6), (1, 3), (4, 2)]

    def test_covered_insert_is_ignored(self):
        s = Staircase()
        s.insert(1, 1)
        assert s.insert(2, 2) is None
        assert len(s) == 1

    def test_covers(self):
        s = Staircase()
        s.insert(0, 5)
        s.insert(3, 1)
        assert s.covers(3, 1) and s.covers(1, 5) and s.covers(7, 2)
        assert not s.covers(2, 4)

    def test_neighbours(self):
        s = Staircase()
        for x, y in [(0, 6), (2, 3), (5, 0)]:
            s.insert(x, y)
        assert s.floor(2)[:2] == (2, 3)
        assert s.lower(2)[:2] == (0, 6)
        assert s.lower(0) is None
        assert s.position(5) == 2
        assert s.at(1)[:2] == (2, 3)
