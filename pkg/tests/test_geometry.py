"""Tests for the geometric intersection oracle on the planar cover."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzelhfk.curves import CurveKind, GradedCurve, ReducedSlope, pretzel_tangle_curves
from pretzelhfk.geometry import (
    GeometryError,
    closure_curve,
    det_pair_count,
    enumerate_geometric_pairing,
)
from pretzelhfk.pairing import pair_curve, reduce_generator_pairs


class TestDetPairCount:
    def test_values(self):
        assert det_pair_count(ReducedSlope(1, 3), ReducedSlope(-1, 2)) == 5
        assert det_pair_count(ReducedSlope(1, 3), ReducedSlope(1, 2)) == 1
        assert det_pair_count(ReducedSlope(-1, 5), ReducedSlope(-3, 10)) == 5

    def test_antisymmetric_inputs_give_the_same_count(self):
        a, b = ReducedSlope(1, 3), ReducedSlope(-3, 10)
        assert det_pair_count(a, b) == det_pair_count(b, a)

    def test_parallel_slopes_rejected(self):
        with pytest.raises(GeometryError):
            det_pair_count(ReducedSlope(1, 2), ReducedSlope(1, 2))


class TestClosureCurve:
    def test_sign_convention(self):
        pos = closure_curve(2, "+")
        assert (pos.slope.numerator, pos.slope.denominator) == (-1, 5)
        assert (pos.m, pos.M) == (-5, 5)
        neg = closure_curve(2, "-")
        assert (neg.slope.numerator, neg.slope.denominator) == (1, 5)


class TestGeometricPairing:
    def test_rejects_special_curves(self):
        with pytest.raises(GeometryError):
            enumerate_geometric_pairing(
                closure_curve(1, "-"), GradedCurve.special14(1, 0, 4)
            )

    def test_unreduced_count_is_twice_the_determinant(self):
        red = closure_curve(2, "-")
        blue = GradedCurve.rational(-1, 4, -4, 4)
        gens = enumerate_geometric_pairing(red, blue)
        assert gens.total_rank == 2 * det_pair_count(red.slope, blue.slope)

    @given(
        st.integers(1, 4),
        st.integers(1, 4),
        st.integers(1, 4),
        st.sampled_from(["+", "-"]),
    )
    @settings(max_examples=25, deadline=None)
    def test_matches_closed_form_pairings(self, a, b, c, sign):
        red = closure_curve(c, sign)
        for blue in pretzel_tangle_curves(a, b):
            if blue.kind is not CurveKind.RATIONAL:
                continue
            geometric = reduce_generator_pairs(enumerate_geometric_pairing(red, blue))
            assert geometric.generators == pair_curve(sign, c, blue).generators

    def test_gradings_on_a_specific_pairing(self):
        # r(1/3) closure against r(-1/2): the (2,-5)-torus knot pattern
        red = closure_curve(1, "-")
        blue = GradedCurve.rational(-1, 2, -2, 2)
        reduced = reduce_generator_pairs(enumerate_geometric_pairing(red, blue))
        assert reduced.generators == pair_curve("-", 1, blue).generators
        assert reduced.total_rank == 5
