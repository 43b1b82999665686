import pytest

from cbcalc import catalog
from cbcalc.errors import CatalogError, VerificationFailure
from cbcalc.grouprank import COND, cb_rank, format_rank
from cbcalc.ordinal import Ordinal, omega_power, parse_ordinal

P = parse_ordinal

CASES = [
    ("Zk", {"k": 3}, "3"),
    ("Heisenberg", {}, "3"),
    ("ZkWrZd", {"k": 2, "d": 3}, "w^3*2"),
    ("ZkWrZd", {"k": 4, "d": 0}, "4"),
    ("CmWrZd", {"m": 18, "d": 2}, "w*3"),
    ("CmWrZd", {"m": 18, "d": 1}, "4"),
    ("FM", {"d": 3}, "w^3*2"),
    ("H", {"d": 2}, "w^2"),
    ("Gamma", {"d": 3}, "w^3"),
    ("GammaPrime", {"d": 3}, "w^3"),
    ("Lambda", {"d": 1}, "w"),
    ("LambdaPrime", {"d": 2}, "w^2"),
    ("Gn", {"d": 2, "n": 5}, "w*5"),
    ("ZWrZ", {}, "COND"),
]


@pytest.mark.parametrize("name,params,expected", CASES)
def test_entries_verify(name, params, expected):
    entry = catalog.get(name, **params)
    assert format_rank(entry.expected_rank) == expected
    report = catalog.verify(entry)
    assert report.passed, str(report)


def test_every_entry_has_a_golden_rank():
    for name in catalog.list_names():
        params = {k: 3 for k in catalog.POSITIONAL[name]}
        if name == "CmWrZd":
            params["m"] = 6
        entry = catalog.get(name, **params)
        if entry.rank_kind == "cb":
            assert cb_rank(entry.descriptor)[0] == entry.expected_rank
        else:
            assert entry.expected_rank is COND


def test_fp_justifications():
    for d in (1, 2, 3):
        assert catalog.get("H", d=d).fp.status == "Yes"
        lp = catalog.get("LambdaPrime", d=d).fp
        assert lp.status == "Yes" and any("surjecting" in s for s in lp.chain)
        lam = catalog.get("Lambda", d=d).fp
        assert lam.status == "Yes" and any("finite-index" in s for s in lam.chain)
    assert catalog.get("ZWrZ").fp.status == "No"


def test_gn_inverse_series():
    for n in range(1, 9):
        assert catalog.gn_inverse_identity(n)


def test_gamma_prime_needs_odd_d():
    with pytest.raises(CatalogError):
        catalog.get("GammaPrime", d=2)


def test_names_and_aliases():
    assert catalog.get("Λ", 3).name == "Lambda"
    assert catalog.get("gn", 2, 4).params == {"d": 2, "n": 4}
    with pytest.raises(CatalogError):
        catalog.get("nope")
    with pytest.raises(CatalogError):
        catalog.get("H", d=0)
    with pytest.raises(CatalogError):
        catalog.get("H", 2, d=2)


def test_verification_failure_is_raised():
    good = catalog.get("FM", d=2)
    bad = catalog.CatalogEntry(good.name, good.params, good.descriptor, omega_power(5), "cb", good.fp, ("g",), ())
    with pytest.raises(VerificationFailure) as info:
        catalog.verify(bad)
    assert info.value.report is not None and not info.value.report.passed
    assert not catalog.verify(bad, raise_on_failure=False).passed


def test_report_json():
    data = catalog.verify(catalog.get("FM", d=2)).to_json()
    assert data["passed"] and {c["check"] for c in data["checks"]} >= {"c", "d", "g"}
