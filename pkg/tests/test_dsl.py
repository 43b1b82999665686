import pytest
from hypothesis import given, settings

from cbcalc import dsl
from cbcalc.dsl import DSLError, format_document, parse_dsl
from cbcalc.grouprank import FreeAbelian, Wreath
from cbcalc.modlen import Critical, Series

from strategies import modules

DOCS = [
    "group wreath(base=Z^2, d=3)",
    "group wreath(base=C(18), d=1)",
    "group FM(4)",
    "group H(d=2)",
    "group Gn(2, 5)",
    "group polycyclic(Z, Z^2, C(6), supersolvable=true)",
    "group metabelian(module=series(critical(2), critical(2)), qrank=2, split=true, generators=2)",
    "group virtual(inner=metabelian(module=critical(3), qrank=2, centralizer=true), index=4, ideal=3)",
    "group abelianbyfinite(4, 2)",
    "group permwreath(nontrivial=true, infinite_orbits=true)",
    "module series(critical(1), critical(3))",
    "module directsum(tf(2, 3), finite(4))",
    "module ext(critical(1), critical(2))",
]


@pytest.mark.parametrize("text", DOCS)
def test_round_trip(text):
    doc = parse_dsl(text)
    again = parse_dsl(format_document(doc))
    assert again.kind == doc.kind and again.descriptor == doc.descriptor


def test_examples():
    assert parse_dsl("group wreath(base=Z^2, d=3)").descriptor == Wreath(FreeAbelian(2), 3)
    assert parse_dsl("module series(critical(1), critical(3))").descriptor == Series(Critical(1), Critical(3))
    assert parse_dsl("group h(2)").catalog_entry.name == "H"


@settings(max_examples=60)
@given(modules)
def test_module_round_trip(m):
    assert dsl.parse_module(dsl.format_module(m)) == m


@pytest.mark.parametrize(
    "text,line,col,fragment",
    [
        ("group wreath(base=Z^2)", 1, 7, "missing parameter 'd'"),
        ("group wreath(base=Z^2, d=3", 1, 27, "expected"),
        ("module\n  series(critical(1),\n    bogus(2))", 3, 5, "bogus"),
        ("group FM(d=x)", 1, 12, "integer"),
        ("thing", 1, 1, "starts with"),
        ("group wreath(base=Z^2, d=3, d=4)", 1, 29, "twice"),
    ],
)
def test_diagnostics(text, line, col, fragment):
    with pytest.raises(DSLError) as info:
        parse_dsl(text)
    err = info.value
    assert (err.line, err.column) == (line, col)
    assert fragment in str(err)


def test_series_dimension_error_is_located():
    with pytest.raises(DSLError) as info:
        parse_dsl("module series(critical(3), critical(1))")
    assert info.value.line == 1
