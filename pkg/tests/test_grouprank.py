import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cbcalc.errors import DescriptorError, HypothesisNotEstablished, NotComputable
from cbcalc.grouprank import (
    COND,
    RULES,
    UNKNOWN,
    Cyclic,
    FiniteFactor,
    FreeAbelian,
    FreeAbelianByFinite,
    FreeMetabelian,
    InfiniteCyclic,
    MetabelianExt,
    Polycyclic,
    VirtuallyMetabelian,
    Wreath,
    WreathPermutational,
    cb_external,
    cb_rank,
    cb_space,
    delta,
    format_rank,
    hirsch_length,
)
from cbcalc.modlen import Critical, DirectSum, OrdinalInterval, Series, TorsionFree
from cbcalc.ordinal import ONE, Ordinal, add, omega_power, parse_ordinal

from strategies import modules

P = parse_ordinal


def rank(g):
    return cb_rank(g)[0]


def test_delta():
    assert [delta(m) for m in (1, 2, 12, 18, 97, 1024)] == [0, 1, 3, 3, 1, 10]
    with pytest.raises(ValueError):
        delta(0)


def test_polycyclic():
    heis = Polycyclic((InfiniteCyclic(), InfiniteCyclic(), InfiniteCyclic()), nilpotent=True)
    assert hirsch_length(heis) == 3 and rank(heis) == Ordinal.from_int(3)
    assert rank(Polycyclic((FreeAbelian(3),), supersolvable=True)) == Ordinal.from_int(3)
    # without supersolvability only the interval is available
    v = rank(Polycyclic((FreeAbelian(2), FiniteFactor(6), InfiniteCyclic())))
    # lower bound counts the infinite factors, upper bound is the Hirsch length
    assert isinstance(v, OrdinalInterval) and v.lower == Ordinal.from_int(2) and v.upper == Ordinal.from_int(3)


def test_wreath_formulas():
    assert rank(Wreath(FreeAbelian(2), 3)) == P("w^3*2")
    assert rank(Wreath(Cyclic(18), 2)) == P("w*3")
    assert rank(Wreath(Cyclic(18), 1)) == Ordinal.from_int(4)
    for k in range(1, 6):
        assert rank(Wreath(FreeAbelian(k), 0)) == Ordinal.from_int(k)


def test_free_metabelian():
    for d in (2, 3, 4):
        assert rank(FreeMetabelian(d)) == omega_power(d, d - 1)


def test_free_metabelian_agrees_with_module_route():
    # the relation module is torsion-free of rank d-1 over a ring of dimension d+1
    for d in (2, 3, 4):
        g = MetabelianExt(TorsionFree(d + 1, d - 1), d, generators=d, faithful=True, module_contains_centralizer=True)
        assert rank(g) == rank(FreeMetabelian(d))


def test_abelian_by_finite():
    assert rank(FreeAbelianByFinite(4, 2)) == Ordinal.from_int(2)
    with pytest.raises(DescriptorError):
        FreeAbelianByFinite(2, 3)


def test_cb_space_is_successor():
    for g in (Wreath(FreeAbelian(2), 3), FreeMetabelian(3), Polycyclic((FreeAbelian(3),), supersolvable=True)):
        assert cb_space(g) == add(rank(g), ONE)


def test_external_rank():
    zwrz = WreathPermutational(True, True)
    assert cb_external(zwrz) is COND
    assert format_rank(COND) == "COND" and format_rank(COND, unicode=True) == "𝔠"
    assert cb_external(FreeMetabelian(3)) is UNKNOWN
    assert cb_external(Wreath(FreeAbelian(1), 1), finitely_presented=True) == rank(Wreath(FreeAbelian(1), 1))
    with pytest.raises(HypothesisNotEstablished):
        cb_rank(zwrz)


def test_trace_cites_known_rules():
    value, trace = cb_rank(Wreath(FreeAbelian(2), 3))
    names = [s.rule for s in trace]
    assert names[0] == "R3" and names[-1] == "CBLP"
    assert all(n in RULES for n in names)
    assert trace.to_json()[0]["rule"] == "R3"


def test_virtually_metabelian_needs_information():
    inner = MetabelianExt(Critical(3), 2)
    with pytest.raises(NotComputable):
        cb_rank(VirtuallyMetabelian(inner, 2))
    v, _ = cb_rank(VirtuallyMetabelian(inner, 2), exact_rules=False)
    assert isinstance(v, OrdinalInterval)


metabelian = st.builds(
    MetabelianExt,
    modules,
    st.integers(0, 4),
    st.booleans(),
    st.booleans(),
    st.one_of(st.none(), st.integers(4, 6)),
    st.booleans(),
    st.booleans(),
)


def _within(value, envelope):
    if isinstance(value, OrdinalInterval):
        return envelope.contains_interval(value)
    return value in envelope


@settings(max_examples=200)
@given(metabelian)
def test_exact_within_fallback(g):
    try:
        exact, _ = cb_rank(g)
        fallback, _ = cb_rank(g, exact_rules=False)
    except (NotComputable, DescriptorError):
        assume(False)
    if not isinstance(fallback, OrdinalInterval):
        fallback = OrdinalInterval.exactly(fallback)
    assert _within(exact, fallback)


@settings(max_examples=200)
@given(metabelian, st.sampled_from(["split", "faithful", "module_contains_centralizer"]))
def test_adding_flags_never_widens(g, flag):
    import dataclasses

    assume(not getattr(g, flag))
    try:
        before, _ = cb_rank(g)
        after, _ = cb_rank(dataclasses.replace(g, **{flag: True}))
    except (NotComputable, DescriptorError):
        assume(False)
    before = before if isinstance(before, OrdinalInterval) else OrdinalInterval.exactly(before)
    assert _within(after, before)


def test_split_bound_is_strict():
    g = MetabelianExt(Series(*[Critical(2)] * 5), 2, split=True, generators=2, faithful=True,
                      module_contains_centralizer=True)
    v = rank(g)
    assert v == P("w*5") and v < omega_power(2)
