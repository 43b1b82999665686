"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from cbcalc.modlen import Critical, DirectSum, Extension, Finite, Series, TorsionFree
from cbcalc.ordinal import Ordinal


def _cnf(exponents):
    return st.lists(st.tuples(exponents, st.integers(1, 9)), max_size=4).map(_normalize)


def _normalize(pairs):
    merged = {}
    for e, c in pairs:
        merged[e] = merged.get(e, 0) + c
    return Ordinal(sorted(merged.items(), key=lambda t: t[0], reverse=True))


finite_ordinals = st.integers(0, 10_000).map(Ordinal.from_int)
small_ordinals = _cnf(st.integers(0, 6).map(Ordinal.from_int))  # below w^w
ordinals = _cnf(st.one_of(st.integers(0, 4).map(Ordinal.from_int), small_ordinals))  # exponents up to w^w

leaves = st.one_of(
    st.integers(0, 4).map(Critical),
    st.builds(TorsionFree, st.integers(1, 4), st.integers(1, 3)),
    st.integers(0, 30).map(Finite),
)
modules = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.lists(kids, min_size=1, max_size=3).map(lambda xs: DirectSum(*xs)),
        st.builds(Extension, kids, kids),
    ),
    max_leaves=6,
)
