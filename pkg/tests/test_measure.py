from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kacreturn import (
    EmptySpace,
    NegativeWeight,
    ParseError,
    SpaceMismatch,
    complement,
    intersect,
    make_space,
    measure,
    parse_rational,
    point_set,
    render_rational,
    set_algebra,
    union,
    uniform_space,
)

from conftest import systems_with_set


def test_make_space_uniform():
    space = make_space(["1/5"] * 5)
    assert space.size == 5
    assert space.total == 1


def test_make_space_exact_total():
    assert make_space(["1/2", "1/3"]).total == Fraction(5, 6)


def test_make_space_errors():
    with pytest.raises(NegativeWeight):
        make_space(["-1/2", "1/2"])
    with pytest.raises(EmptySpace):
        make_space([])


def test_zero_weights_allowed():
    assert make_space(["0", "0"]).total == 0


@pytest.mark.parametrize(
    "points, expected",
    [([0, 2], Fraction(2, 5)), ([], Fraction(0)), ([0, 1, 2, 3, 4], Fraction(1))],
)
def test_measure(points, expected):
    space = uniform_space(5)
    assert measure(space, point_set(points, 5)) == expected


def test_measure_space_mismatch():
    with pytest.raises(SpaceMismatch):
        measure(uniform_space(5), point_set([0], 4))


def test_set_algebra_examples():
    A = point_set([0, 2], 5)
    assert set_algebra("complement", A).indices == (1, 3, 4)
    assert set_algebra("union", A, point_set([2, 4], 5)).indices == (0, 2, 4)
    assert set_algebra("intersect", A, point_set([1, 3], 5)).indices == ()
    assert set_algebra("difference", A, point_set([2], 5)).indices == (0,)


def test_set_algebra_mismatch_and_arity():
    with pytest.raises(SpaceMismatch):
        union(point_set([0], 5), point_set([0], 6))
    with pytest.raises(TypeError):
        set_algebra("union", point_set([0], 5))
    with pytest.raises(ValueError):
        set_algebra("xor", point_set([0], 5), point_set([1], 5))


def test_point_set_is_canonical():
    A = point_set([3, 1, 3, 0], 5)
    assert A.indices == (0, 1, 3)
    assert 1 in A and 2 not in A
    assert A.indicator(3) == 1 and A.indicator(4) == 0
    with pytest.raises(ValueError):
        point_set([5], 5)


@pytest.mark.parametrize("text", ["1/2", "-3/4", "7", "0", "-12"])
def test_parse_render_examples(text):
    assert render_rational(parse_rational(text)) == text


def test_parse_canonicalizes():
    assert parse_rational("2/4") == Fraction(1, 2)
    assert render_rational(parse_rational("6/3")) == "2"


@pytest.mark.parametrize("bad", ["1/0", "0.5", "1e3", " 1/2", "1/-2", "", "a/b", "+1"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(st.fractions())
def test_rational_round_trip(r):
    assert parse_rational(render_rational(r)) == r


@given(systems_with_set())
def test_measure_plus_complement_is_total(sys_set):
    space, _, A = sys_set
    assert measure(space, A) + measure(space, complement(A)) == space.total


@given(systems_with_set(), st.data())
def test_finite_additivity_and_monotonicity(sys_set, data):
    space, _, A = sys_set
    B = point_set(data.draw(st.sets(st.integers(0, space.size - 1))), space.size)
    if not intersect(A, B).indices:
        assert measure(space, union(A, B)) == measure(space, A) + measure(space, B)
    assert measure(space, intersect(A, B)) <= measure(space, A) <= measure(space, union(A, B))


def test_mass_mixed_denominators():
    space = make_space(["1/2", "1/3", "1/6", "5/7"])
    assert space.total == Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 6) + Fraction(5, 7)
    assert space.mass([0, 1, 3], [2, 3, 7]) == 1 + 1 + 5
