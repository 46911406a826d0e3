import itertools

import pytest
from hypothesis import given, strategies as st

from monideal import (
    DimensionMismatch,
    MonomialIdeal,
    ZeroIdeal,
    box_enumerate,
    contains_monomial,
    format_ideal,
    format_vector,
    le_pr,
    minimalize,
    parse_ideal,
    parse_vector,
)

small_vec = st.lists(st.integers(0, 6), min_size=1, max_size=4).map(tuple)
vec3 = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


def test_componentwise_order_examples():
    assert le_pr((1, 2), (2, 2))
    assert not le_pr((2, 1), (1, 2))
    assert le_pr((0, 0), (0, 0))


def test_componentwise_order_rejects_mixed_dimensions():
    with pytest.raises(DimensionMismatch):
        le_pr((1,), (1, 2))


@given(vec3, vec3)
def test_componentwise_order_is_a_partial_order(a, b):
    assert le_pr(a, a)
    if le_pr(a, b) and le_pr(b, a):
        assert a == b


def test_minimalize_examples():
    assert minimalize([(2, 0), (1, 1), (2, 1)]) == ((2, 0), (1, 1))
    assert minimalize([]) == ()
    assert minimalize([(3, 5)]) == ((3, 5),)
    # duplicates collapse
    assert minimalize([(1, 1), (1, 1)]) == ((1, 1),)


def test_minimalize_output_is_descending_lex():
    out = minimalize([(0, 2), (2, 0), (1, 1)])
    assert out == ((2, 0), (1, 1), (0, 2))
    assert list(out) == sorted(out, reverse=True)


@given(st.lists(vec3, max_size=12))
def test_minimalize_yields_an_antichain_and_is_idempotent(points):
    out = minimalize(points)
    assert minimalize(out) == out
    for a, b in itertools.combinations(out, 2):
        assert not le_pr(a, b) and not le_pr(b, a)


@given(st.lists(vec3, min_size=1, max_size=10))
def test_minimalize_preserves_up_closure(points):
    out = minimalize(points)
    for probe in itertools.product(range(6), repeat=3):
        before = any(le_pr(p, probe) for p in points)
        after = any(le_pr(p, probe) for p in out)
        assert before == after


def test_ideal_contains_examples():
    ideal = MonomialIdeal(2, [(2, 0), (0, 2)])
    assert ideal.contains((2, 1))
    assert not ideal.contains((1, 1))
    unit = MonomialIdeal(2, [(0, 0)])
    assert unit.contains((0, 0)) and unit.contains((5, 3))
    assert contains_monomial(ideal, (3, 0))


@given(vec3, vec3)
def test_ideal_membership_is_up_closed(a, shift):
    ideal = MonomialIdeal(3, [(2, 0, 0), (0, 1, 3), (1, 1, 1)])
    if ideal.contains(a):
        assert ideal.contains(tuple(x + y for x, y in zip(a, shift)))


def test_ideal_constructor_minimalizes_and_orders():
    ideal = MonomialIdeal(2, [(2, 1), (2, 0), (0, 2), (3, 3)])
    assert ideal.generators == ((2, 0), (0, 2))


def test_ideal_rejects_bad_input():
    with pytest.raises(ZeroIdeal):
        MonomialIdeal(2, [])
    with pytest.raises(DimensionMismatch):
        MonomialIdeal(2, [(1, 2, 3)])
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(-1, 0)])
    with pytest.raises(ValueError):
        MonomialIdeal(0, [()])
    with pytest.raises(DimensionMismatch):
        MonomialIdeal(2, [(1, 0)]).contains((1, 0, 0))


def test_ideal_is_immutable_and_hashable():
    ideal = MonomialIdeal(2, [(1, 0)])
    with pytest.raises(AttributeError):
        ideal.dim = 3
    assert ideal == MonomialIdeal(2, [(1, 0), (2, 2)])
    assert hash(ideal) == hash(MonomialIdeal(2, [(1, 0)]))


def test_box_enumerate_order_and_contents():
    assert list(box_enumerate((1, 1))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(box_enumerate((0, 0))) == [(0, 0)]
    pts = list(box_enumerate((2, 2), lambda a: a[0] + a[1] >= 2))
    assert len(pts) == 6
    assert pts[0] == (0, 2)
    assert pts == sorted(pts)


def test_box_enumerate_rejects_negative_bounds():
    with pytest.raises(ValueError):
        list(box_enumerate((2, -1)))


@given(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3)))
def test_box_enumerate_count_matches_product(bounds):
    count = sum(1 for _ in box_enumerate(bounds))
    expected = 1
    for b in bounds:
        expected *= b + 1
    assert count == expected


def test_vector_parse_and_format():
    assert parse_vector("2,0,1") == (2, 0, 1)
    assert parse_vector(" 2 , 0 ") == (2, 0)
    assert format_vector((2, 0, 1)) == "2,0,1"
    for bad in ("", "2,,1", "2,x", "2;1"):
        with pytest.raises(ValueError):
            parse_vector(bad)


def test_ideal_parse_and_format_round_trip():
    ideal = parse_ideal("2,0;1,1;0,2")
    assert format_ideal(ideal) == "2,0;1,1;0,2"
    # parsing minimalizes non-antichain input
    assert format_ideal(parse_ideal("2,1;2,0")) == "2,0"
    with pytest.raises(ZeroIdeal):
        parse_ideal(" ; ")
    with pytest.raises(DimensionMismatch):
        parse_ideal("1,0;1,0,0")
    with pytest.raises(ValueError):
        parse_ideal("1,-2")


@given(small_vec)
def test_vector_round_trip(v):
    assert parse_vector(format_vector(v)) == v
