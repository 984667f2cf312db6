"""Exact circle interval unions: canonical form, boolean algebra, measure."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groshevlab.circle import CircleIntervalUnion

F = Fraction

rationals = st.fractions(min_value=0, max_value=1, max_denominator=64)
radii = st.fractions(min_value=0, max_value=F(7, 16), max_denominator=64)
arc_lists = st.lists(st.tuples(rationals, radii), max_size=6)


def from_arcs(arcs):
    return CircleIntervalUnion.from_arcs([(c % 1, r) for c, r in arcs])


class TestConstruction:
    def test_empty_and_full(self):
        assert CircleIntervalUnion.empty().measure == 0
        assert CircleIntervalUnion.full().measure == 1
        assert CircleIntervalUnion.empty().pieces == ()

    def test_zero_radius_vanishes(self):
        assert from_arcs([(F(1, 3), F(0))]).measure == 0

    def test_radius_half_rejected(self):
        with pytest.raises(ValueError):
            CircleIntervalUnion.from_arcs([(F(0), F(1, 2))])

    def test_wraparound_split(self):
        u = from_arcs([(F(0), F(1, 8))])
        assert u.measure == F(1, 4)
        assert len(u.pieces) == 2  # [0, 1/8) and [7/8, 1)

    def test_merge_overlapping(self):
        u = from_arcs([(F(1, 4), F(1, 8)), (F(3, 8), F(1, 8))])
        assert u.measure == F(3, 8)
        assert len(u.pieces) == 1

    def test_canonical_ordering(self):
        a = from_arcs([(F(1, 4), F(1, 16)), (F(3, 4), F(1, 16))])
        b = from_arcs([(F(3, 4), F(1, 16)), (F(1, 4), F(1, 16))])
        assert a.pieces == b.pieces


class TestAlgebra:
    @given(arc_lists, arc_lists)
    @settings(max_examples=200)
    def test_union_intersection_measures(self, xs, ys):
        a, b = from_arcs(xs), from_arcs(ys)
        u, i = a.union(b), a.intersect(b)
        # inclusion-exclusion is exact
        assert u.measure + i.measure == a.measure + b.measure
        assert i.measure <= min(a.measure, b.measure)
        assert u.measure >= max(a.measure, b.measure)

    @given(arc_lists, arc_lists)
    @settings(max_examples=150)
    def test_commutativity(self, xs, ys):
        a, b = from_arcs(xs), from_arcs(ys)
        assert a.union(b).pieces == b.union(a).pieces
        assert a.intersect(b).pieces == b.intersect(a).pieces

    @given(arc_lists)
    @settings(max_examples=150)
    def test_complement(self, xs):
        a = from_arcs(xs)
        c = a.complement()
        assert a.measure + c.measure == 1
        assert a.intersect(c).measure == 0
        assert a.union(c).measure == 1

    @given(arc_lists, rationals)
    @settings(max_examples=150)
    def test_rotation_preserves_measure(self, xs, t):
        a = from_arcs(xs)
        assert a.rotate(t).measure == a.measure
        assert a.rotate(t).rotate(-t).pieces == a.pieces

    @given(arc_lists, rationals)
    @settings(max_examples=150)
    def test_contains_consistent_with_pieces(self, xs, x):
        a = from_arcs(xs)
        xm = x % 1
        inside = any(lo <= xm < hi for lo, hi in a.pieces)
        assert a.contains(x) == inside


class TestSerialization:
    def test_endpoint_strings(self):
        u = from_arcs([(F(1, 3), F(1, 12))])
        assert u.endpoint_strings() == ["1/4", "5/12"]

    def test_intersect_hand_case(self):
        a = from_arcs([(F(0), F(1, 8))])
        b = from_arcs([(F(1, 16), F(1, 16))])
        assert a.intersect(b).measure == F(1, 16) + F(1, 16) - F(0)  # [0, 1/8)
