import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cbcalc.hnf import IntegerLattice, hnf, in_span, smith_invariants, solve_in_span

vectors = st.lists(st.integers(-9, 9), min_size=3, max_size=3)


@settings(max_examples=100)
@given(st.lists(vectors, min_size=1, max_size=5), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_combinations_are_found(rows, coeffs):
    target = [sum(c * r[i] for c, r in zip(coeffs, rows)) for i in range(3)]
    sol = solve_in_span(rows, target)
    assert sol is not None
    assert [sum(sol[k] * rows[k][i] for k in range(len(rows))) for i in range(3)] == target


@settings(max_examples=100)
@given(st.lists(vectors, min_size=1, max_size=5))
def test_hnf_is_idempotent_and_spans(rows):
    h = hnf(rows, 3)
    assert hnf(h, 3) == h
    for r in rows:
        assert in_span(h, r)
    for r in h:
        assert in_span(rows, r)


def test_non_member():
    assert not in_span([[2, 0], [0, 3]], [1, 0])
    assert solve_in_span([[2, 4]], [1, 2]) is None


def test_incremental_lattice():
    lat = IntegerLattice(2)
    lat.add([4, 6], "a")
    lat.add([2, 0], "b")
    assert lat.contains([0, 6]) and not lat.contains([0, 3])
    sol = lat.solve([2, 6])
    assert 4 * sol.get("a", 0) + 2 * sol.get("b", 0) == 2 and 6 * sol.get("a", 0) == 6


def test_smith_invariants():
    assert smith_invariants([[2, 0], [0, 3]], 2) == [6]
    assert smith_invariants([[2, 4], [6, 8]], 2) == [2, 4]
    assert smith_invariants([[1, 0]], 2) == [0]
