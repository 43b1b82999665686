import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbcalc import oracle
from cbcalc.errors import TooLarge
from cbcalc.grouprank import delta
from cbcalc.modlen import DirectSum, Extension, Finite, length
from cbcalc.oracle import FiniteModuleInstance, abelian_groups, exhaustive_length

prime_powers = st.sampled_from([2, 3, 4, 5, 7, 8, 9])


@settings(max_examples=30, deadline=None)
@given(st.lists(prime_powers, min_size=1, max_size=3))
def test_trivial_action_length_is_delta(orders):
    inst = FiniteModuleInstance(orders)
    n = 1
    for o in orders:
        n *= o
    assert exhaustive_length(inst) == delta(n)


@settings(max_examples=30, deadline=None)
@given(st.lists(prime_powers, min_size=1, max_size=3))
def test_modlen_agrees_on_finite_trees(orders):
    inst = FiniteModuleInstance(orders)
    tree = DirectSum(*[Finite(delta(o)) for o in orders])
    assert length(tree).value == exhaustive_length(inst)
    # an extension with the same pieces has the same finite length
    assert length(Extension(tree, Finite(1))).value == exhaustive_length(inst) + 1


def test_abelian_groups_enumeration():
    assert sorted(abelian_groups(8)) == [(2, 2, 2), (4, 2), (8,)]
    assert len(list(abelian_groups(72))) == 6


def test_action_lowers_length():
    # the swap on F_2^2 has a single proper invariant line
    swap = ((0, 1), (1, 0))
    inst = FiniteModuleInstance([2, 2], [swap])
    assert inst.length() == 2
    rot = ((0, 1), (1, 1))  # order 3 on F_2^2, irreducible
    assert FiniteModuleInstance([2, 2], [rot]).length() == 1


def test_invalid_action():
    with pytest.raises(ValueError):
        FiniteModuleInstance([2, 4], [((0, 1), (1, 0))])


def test_size_bound():
    with pytest.raises(TooLarge):
        FiniteModuleInstance([2] * 15)


def test_convex_realization_single():
    rep = oracle.check_convex_realization(FiniteModuleInstance([4, 3]))
    assert rep.passed and rep.details["realized"] == [0, 1, 2, 3]


def test_finite_action_case():
    case = oracle.finite_action_case(2, [[0, 1], [1, 1]])
    assert case["ok"] and case["n"] == 3 and case["l_G"] == 1 and case["l"] == 2


def test_recursive_natural_sum_table():
    t = oracle.recursive_natural_sum_table(20)
    assert all(t[a][b] == a + b for a in range(20) for b in range(20))


def test_reports_are_deterministic():
    a = oracle.check_ext_bounds(50, seed=4)
    b = oracle.check_ext_bounds(50, seed=4)
    assert a.to_json() == b.to_json() and a.passed
    c = oracle.check_finite_action_bounds(20, seed=4)
    assert c.to_json() == oracle.check_finite_action_bounds(20, seed=4).to_json() and c.passed


def test_small_suites():
    assert oracle.recheck_ordinal_laws(300, seed=1, finite_bound=40).passed
    assert oracle.check_delta(32).passed
    with pytest.raises(KeyError):
        oracle.run_suite("nope")
