import pytest
from hypothesis import assume, given

from cbcalc.errors import AmbiguousBound, DescriptorError, NotComputable
from cbcalc.modlen import (
    ZERO_MODULE,
    Critical,
    DirectSum,
    Extension,
    Finite,
    OrdinalInterval,
    Series,
    TorsionFree,
    e_split,
    finite_action_bounds,
    krull_dim,
    leading_coeff,
    length,
    reduced_length,
    w_split,
)
from cbcalc.ordinal import Ordinal, add, degree, natural_sum, omega_power, parse_ordinal, reduce

from strategies import leaves, modules

P = parse_ordinal


def test_leaves():
    assert length(Critical(3)).value == omega_power(3)
    assert length(TorsionFree(2, 4)).value == P("w^2*4")
    assert length(Finite(5)).value == Ordinal.from_int(5)
    assert reduced_length(Critical(1)).value == Ordinal.from_int(1)
    assert reduced_length(Critical(0)).value == Ordinal.from_int(0)
    assert krull_dim(ZERO_MODULE) == -1


def test_series_is_ordinary_sum_top_down():
    m = Series(Critical(1), Critical(2), Critical(2))
    assert length(m).value == P("w^2*2 + w")
    assert reduced_length(m).value == P("w*2 + 1")
    assert krull_dim(m) == 2 and leading_coeff(m) == 2


def test_series_rejects_decreasing():
    with pytest.raises(DescriptorError):
        Series(Critical(2), Critical(1))


def test_extension_sandwich():
    iv = length(Extension(Critical(2), Critical(1)))
    assert iv.lower == P("w^2") and iv.upper == P("w^2 + w")
    assert not iv.exact
    with pytest.raises(AmbiguousBound):
        iv.value
    # a finite submodule makes the two sums agree
    assert length(Extension(Finite(3), Critical(1))).value == P("w + 3")


@given(modules, modules)
def test_direct_sum_is_natural_sum(a, b):
    la, lb = length(a), length(b)
    assume(la.exact and lb.exact)
    assert length(DirectSum(a, b)).value == natural_sum(la.value, lb.value)


@given(modules, modules)
def test_extension_bounds_share_degree(a, b):
    iv = length(Extension(a, b))
    assert not (iv.upper < iv.lower)
    if not iv.lower.is_zero():
        assert degree(iv.lower) == degree(iv.upper)


@given(modules)
def test_reduce_commutes_with_length(m):
    iv, rv = length(m), reduced_length(m)
    assert reduce(iv.lower).quotient in rv
    assert reduce(iv.upper).quotient in rv or (iv.upper_strict and rv.upper == reduce(iv.upper).quotient)
    if iv.exact:
        assert rv.exact and rv.value == reduce(iv.value).quotient


@given(modules)
def test_w_split_reassembles(m):
    assume(not _has_extension(m))
    low, high = w_split(m)
    iv = length(Extension(low, high))
    orig = length(m)
    assert orig.exact
    assert orig.value in iv
    for part in (low, high):
        assert part == ZERO_MODULE or isinstance(part, (Critical, TorsionFree, Finite, Series, DirectSum))
    if low != ZERO_MODULE:
        assert krull_dim(low) <= 1
    if high != ZERO_MODULE:
        assert krull_dim(high) >= 2


def _has_extension(m):
    if isinstance(m, Extension):
        return True
    return any(_has_extension(c) for c in getattr(m, "children", ()))


def test_e_split():
    m = DirectSum(Finite(4), Critical(1))
    assert e_split(m) == (Finite(4), Critical(1))
    with pytest.raises(NotComputable):
        w_split(Extension(Critical(1), Critical(2)))


def test_finite_action_invariant_ideal_is_exact():
    b = finite_action_bounds(None, 12, invariant_ideal_dim=4)
    assert b.interval.exact and b.interval.value == omega_power(3)
    assert b.rule == "invariant-ideal"


@given(leaves)
def test_finite_action_brackets_the_trivial_case(m):
    assume(not isinstance(m, Finite))
    trivial = finite_action_bounds(m, 1).interval
    assert trivial.exact and trivial.value == reduced_length(m).value
    b = finite_action_bounds(m, 6).interval
    assert reduced_length(m).value in b


def test_interval_helpers():
    iv = OrdinalInterval(P("w"), P("w^2"), True)
    assert P("w*7") in iv and P("w^2") not in iv
    assert OrdinalInterval(P("w"), P("w^2")).contains_interval(iv)
    assert str(iv) == "[w, w^2)"
    with pytest.raises(ValueError):
        OrdinalInterval(P("w"), P("w"), True)


def test_descriptor_validation():
    with pytest.raises(DescriptorError):
        Critical(-1)
    with pytest.raises(DescriptorError):
        TorsionFree(2, 0)
