from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cutinterdict.instance import (
    Edge, InstanceError, InterdictionInstance, format_instance, integer_scale, parse_instance,
    set_cost, set_weight, truncate_weights,
)


def test_rational_identities():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    r = Fraction(4, 6)
    assert (r.numerator, r.denominator) == (2, 3)
    assert Fraction(7, 3) == Fraction(21, 9)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / Fraction(0)


@given(st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100),
       st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100))
def test_rational_order_matches_float(a, b):
    assert a.denominator > 0
    if abs(float(a) - float(b)) > 1e-9:
        assert (a < b) == (float(a) < float(b))


def test_truncate_weights_examples(t1):
    assert truncate_weights(t1, 0) == [0, 0, 0]
    assert truncate_weights(t1, 3) == [4, 3, 5]  # 3 >= max ratio
    assert truncate_weights(t1, 2) == [4, 2, 5]
    with pytest.raises(ValueError):
        truncate_weights(t1, Fraction(-1, 2))


def test_set_weight_and_cost(t1):
    w = t1.weights
    assert set_weight(t1, (), w) == 0
    assert set_weight(t1, (0, 1), w) == 7
    assert set_cost(t1, (0, 1)) == 3
    assert set_weight(t1, (0, 1, 2), w) == 12
    with pytest.raises(IndexError):
        set_cost(t1, (3,))


lams = st.fractions(min_value=0, max_value=20, max_denominator=30)


@given(lams, lams)
def test_truncation_monotone_and_concave(l1, l2):
    inst = InterdictionInstance.from_tuples(4, [(0, 1, 4, 2), (1, 2, 3, 1), (2, 3, 7, 3), (0, 3, 0, 5)], 1)
    lo, hi = sorted((l1, l2))
    a, b = truncate_weights(inst, lo), truncate_weights(inst, hi)
    mid = truncate_weights(inst, (lo + hi) / 2)
    for e in range(inst.m):
        assert a[e] <= b[e]
        assert mid[e] >= (a[e] + b[e]) / 2
        assert b[e] <= inst.weights[e] and b[e] <= hi * inst.costs[e]


def test_parse_round_trip(t1):
    text = format_instance(t1, comment="T1")
    assert text.splitlines()[1:] == ["3 3 2", "1 2 4 2", "2 3 3 1", "1 3 5 3"]
    assert parse_instance(text) == t1


@pytest.mark.parametrize("text, line", [
    ("3 1 2\n1 2 x 3\n", 2),
    ("3 1 2\n1 1 4 2\n", 2),
    ("3 1 2\n1 2 4 0\n", 2),
    ("3 1 2\n1 4 4 2\n", 2),
    ("3 2 2\n1 2 4 2\n", 1),
    ("3 1\n", 1),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(InstanceError) as info:
        parse_instance(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_multi_edges_keep_ids():
    inst = parse_instance("# parallel\n2 3 0\n1 2 1 1\n1 2 2 1\n\n2 1 3 1\n")
    assert [e.id for e in inst.edges] == [0, 1, 2]
    assert inst.weights == (1, 2, 3)


def test_edge_validation():
    with pytest.raises(InstanceError):
        Edge(0, 1, 1, 1, 1)
    with pytest.raises(InstanceError):
        InterdictionInstance.from_tuples(1, [], 0)


def test_integer_scale():
    ints, den = integer_scale([Fraction(1, 2), Fraction(2, 3), Fraction(5)])
    assert den == 6 and ints == [3, 4, 30]
