"""Tests for the Fox-calculus Alexander polynomial oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzelhfk.alexander import (
    DiagramError,
    build_pretzel_diagram,
    fox_alexander,
    pretzel_determinant,
)
from pretzelhfk.algebra import LaurentPolynomial

# odd twist counts, mixed signs; (p,q,r) is a knot iff at most one is even
odd = st.integers(min_value=-4, max_value=4).map(lambda k: 2 * k + 1)
even_nonzero = st.sampled_from([-6, -4, -2, 2, 4, 6])


def test_unsupported_inputs_are_rejected():
    with pytest.raises(DiagramError):
        build_pretzel_diagram(2, 4, 3)
    with pytest.raises(DiagramError):
        build_pretzel_diagram(2, -4, 6)
    with pytest.raises(DiagramError):
        build_pretzel_diagram(0, 3, 5)
    # all-odd triples are knots too, but this builder handles only the
    # exactly-one-even-band shape that the pretzel family here needs
    with pytest.raises(DiagramError):
        build_pretzel_diagram(1, 1, 1)


def test_trefoil():
    # P(2,-1,-1) is a trefoil
    poly = fox_alexander(build_pretzel_diagram(2, -1, -1))
    assert poly == LaurentPolynomial({1: -1, 0: 1, -1: -1}) * -1


def test_known_pretzel_polynomial():
    poly = fox_alexander(build_pretzel_diagram(6, -3, 5))
    assert poly == LaurentPolynomial({3: 1, 2: -2, 0: 3, -2: -2, -3: 1})


def test_figure_eight_like_family():
    # P(2,-3,-3) has determinant |(-6) + 9 + (-6)| = 3
    poly = fox_alexander(build_pretzel_diagram(2, -3, -3))
    assert abs(poly.eval_at_unit(at_minus_one=True)) == 3


@given(even_nonzero, odd, odd)
@settings(max_examples=60, deadline=None)
def test_output_is_conway_normalized(p, q, r):
    poly = fox_alexander(build_pretzel_diagram(p, q, r))
    assert poly.eval_at_unit() == 1
    assert poly == poly.reciprocal()


@given(even_nonzero, odd, odd)
@settings(max_examples=60, deadline=None)
def test_determinant_law(p, q, r):
    poly = fox_alexander(build_pretzel_diagram(p, q, r))
    assert abs(poly.eval_at_unit(at_minus_one=True)) == pretzel_determinant(p, q, r)


@given(even_nonzero, odd, odd)
@settings(max_examples=30, deadline=None)
def test_band_order_is_irrelevant(p, q, r):
    base = fox_alexander(build_pretzel_diagram(p, q, r))
    assert fox_alexander(build_pretzel_diagram(q, r, p)) == base
    assert fox_alexander(build_pretzel_diagram(r, p, q)) == base


def test_pretzel_determinant_formula():
    assert pretzel_determinant(2, -3, 5) == 11
    assert pretzel_determinant(2, -5, 5) == 25
    assert pretzel_determinant(6, -3, 5) == 3
