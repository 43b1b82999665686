import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbcalc import ordinal as O
from cbcalc.errors import DegreeOfZero, ParseError
from cbcalc.ordinal import OMEGA, ONE, ZERO, Ordinal, add, degree, natural_sum, omega_power, reduce

from strategies import finite_ordinals, ordinals, small_ordinals

W = OMEGA


@given(ordinals, ordinals)
def test_natural_sum_commutes(a, b):
    assert natural_sum(a, b) == natural_sum(b, a)


@given(ordinals, ordinals, ordinals)
def test_associativity(a, b, c):
    assert natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c))
    assert add(add(a, b), c) == add(a, add(b, c))


@given(ordinals)
def test_zero_identity(a):
    for op in (add, natural_sum):
        assert op(a, ZERO) == a == op(ZERO, a)


@given(ordinals, ordinals, ordinals)
def test_monotone(a, b, c):
    if a < b:
        assert natural_sum(a, c) < natural_sum(b, c)
        assert add(c, a) < add(c, b)


@given(ordinals, ordinals)
def test_absorption(a, b):
    if not b.is_zero() and O.compare(a, omega_power(degree(b))) < 0:
        assert add(a, b) == b


@given(ordinals)
def test_reduce_reconstructs(a):
    q, r = reduce(a)
    assert isinstance(r, int) and r >= 0
    assert add(O.omega_times(q), Ordinal.from_int(r)) == a


@given(ordinals)
def test_reduce_fixed_points(alpha):
    if alpha >= W:
        x = omega_power(alpha)
        assert reduce(x) == (x, 0)


@given(ordinals, ordinals)
def test_degree_of_natural_sum(a, b):
    if not a.is_zero() and not b.is_zero():
        assert degree(natural_sum(a, b)) == max(degree(a), degree(b))


@given(ordinals)
def test_format_parse_round_trip(a):
    assert O.parse_ordinal(O.format_ordinal(a)) == a
    assert O.parse_ordinal(O.format_ordinal(a, unicode=True)) == a


@given(ordinals)
def test_json_round_trip(a):
    assert O.from_json(a.to_json()) == a


@given(ordinals, ordinals)
def test_compare_total(a, b):
    c = O.compare(a, b)
    assert c == -O.compare(b, a)
    assert (c == 0) == (a == b)


@settings(max_examples=50)
@given(finite_ordinals, finite_ordinals)
def test_finite_arithmetic(a, b):
    assert add(a, b) == natural_sum(a, b) == Ordinal.from_int(int(a) + int(b))


def test_known_values():
    assert add(ONE, W) == W
    assert add(W, ONE) != W
    assert O.evaluate("w+1 ⊕ w*2+3") == O.parse_ordinal("w*3+4")
    assert O.format_ordinal(O.evaluate("w+1 # w*2+3")) == "w*3 + 4"
    assert O.format_ordinal(O.evaluate("w^2 + w*5 + 3 (+) w^3")) == "w^3 + w^2 + w*5 + 3"
    assert reduce(O.parse_ordinal("w^2*2 + w*3 + 4")) == (O.parse_ordinal("w*2 + 3"), 4)
    assert reduce(O.parse_ordinal("w^w + 7")) == (O.parse_ordinal("w^w"), 7)
    assert O.format_ordinal(O.parse_ordinal("w^4*3")) == "w^4*3"
    assert O.format_ordinal(omega_power(2), unicode=True) == "ω^2"
    assert degree(O.parse_ordinal("w^3*2 + w")) == Ordinal.from_int(3)


def test_evaluate_functions():
    assert O.evaluate("deg(w^3 + 1)") == Ordinal.from_int(3)
    assert O.evaluate("reduce(w^2 + w*2 + 5)") == O.parse_ordinal("w + 2")
    assert O.evaluate("rem(w^2 + 5)") == Ordinal.from_int(5)


def test_errors():
    with pytest.raises(DegreeOfZero):
        degree(ZERO)
    with pytest.raises(ParseError) as info:
        O.parse_ordinal("w^ + 1")
    assert "position" in str(info.value)
    with pytest.raises(ValueError):
        Ordinal.from_int(-1)
    with pytest.raises(ValueError):
        Ordinal(((ONE, 1), (Ordinal.from_int(2), 1)))


@given(small_ordinals)
def test_ordering_matches_cnf(a):
    assert a < add(a, ONE)
    assert not (a < a)
