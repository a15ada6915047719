import json
import math

import pytest

from sicigamma.numcore import Approx
from sicigamma.registry import (
    CATALOG, ParameterError, UnknownIdentityError, evaluate_identity, get_record, list_identities, run_suite,
)
from sicigamma.registry.model import CATEGORIES, TOL_CLASSES, IdentityRecord, Param, VerificationResult

MANIFEST = {
    "A1": "2.1", "A2": "2.2", "A3": "3.1", "A4": "3.2", "A5": "3.3", "A6": "4.1", "A7": "4.2",
    "B1": "1.14", "B2": "1.16", "B3": "1.18", "B4": "1.28", "B5": "1.29", "B6": "S-identity",
    "B7": "5.7", "B8": "5.9", "B9": "5.10", "B10": "5.12", "B11": "5.14", "B12": "5.15",
    "B13": "5.18", "B14": "5.19", "B15": "5.22", "B16": "5.23", "B17": "5.26", "B18": "5.27",
    "B19": "5.28", "B20": "5.29", "B21": "5.30", "B22": "5.33", "B23": "5.34", "B24": "5.34.1",
    "B25": "5.35", "B26": "5.36", "B27": "6.2", "B28": "6.3", "B29": "7.9", "B30": "7.10",
    "B31": "7.13", "B32": "7.14", "B33": "7.15", "B34": "log2gamma", "B35": "4.3.1/4.3.2",
    "B36": "log2gamma-shift", "B37": "dilog",
    "C1": "1.17", "C2": "1.20", "C3": "1.21", "C4": "1.22", "C5": "1.23", "C6": "1.24", "C7": "1.25",
    "C8": "1.26", "C9": "1.27", "C10": "4.3", "C11": "4.7", "C12": "4.8", "C13": "si-alt",
    "C14": "si-2npi", "C15": "7.5", "C16": "7.5-bis", "C17": "zeta-prime-rep", "C18": "7.6/7.7",
    "C19": "x-half", "C20": "5.32", "C21": "6.1",
    "D1": "2.7", "D2": "2.8", "D3": "2.11", "D4": "2.12", "D5": "3.4", "D6": "3.6/3.7", "D7": "4.10",
    "D8": "2.3", "D9": "4.2.1",
    "E1": "8.1", "E2": "8.2", "E3": "8.4",
    "F1": "2.4-2.6", "F2": "1.12", "F3": "1.13",
}


def test_catalog_size_and_manifest():
    assert len(CATALOG) >= 48
    assert {r.id: r.eq for r in list_identities()} == MANIFEST


def test_catalog_order_is_lexicographic():
    ids = [r.id for r in list_identities()]
    assert ids == sorted(ids)


def test_every_category_is_populated():
    for letter, name in CATEGORIES.items():
        by_letter = list_identities(letter)
        assert by_letter
        assert by_letter == list_identities(name)
        assert all(r.category == name for r in by_letter)


def test_filters():
    assert [r.id for r in list_identities("E")] == ["E1", "E2", "E3"]
    assert list_identities("ZZZ") == []
    assert [r.id for r in list_identities("C1")][:3] == ["C1", "C10", "C11"]


def test_records_are_well_formed():
    for r in list_identities():
        assert r.tol_class in TOL_CLASSES
        assert r.title and r.method
        for pt in r.sweep_points():
            assert set(pt) == {p.name for p in r.params}


@pytest.mark.parametrize("rid", sorted(MANIFEST))
def test_defaults_pass(rid):
    res = evaluate_identity(rid)
    assert res.error == ""
    assert res.passed, (res.lhs, res.rhs, res.tol)


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        get_record("Z9")
    with pytest.raises(UnknownIdentityError):
        evaluate_identity("B99")
    with pytest.raises(UnknownIdentityError):
        run_suite(ids=["C4", "NOPE"])


@pytest.mark.parametrize("rid,over", [
    ("C3", {"a": -1.0}), ("C3", {"a": "x"}), ("C3", {"b": 1.0}), ("C1", {"n": 2.5}), ("C1", {"n": 0}),
    ("D6", {"form": "3.8"}), ("C4", {"a": 1.0}), ("D1", {"x": math.nan}),
])
def test_bad_parameters(rid, over):
    with pytest.raises(ParameterError):
        evaluate_identity(rid, over)


def test_override_is_used():
    res = evaluate_identity("C3", {"a": 0.75})
    assert res.params == {"a": 0.75}
    assert res.passed


def test_tol_scale_validation():
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(ValueError):
            run_suite(ids=["C4"], tol_scale=bad)


def test_tiny_tol_scale_gives_failures_but_a_report():
    rep = run_suite(filter="C", tol_scale=1e-6)
    c = rep.counts
    assert c["total"] == len(rep.results) > 0
    assert c["fail"] > 0
    assert c["pass"] + c["fail"] + c["questionable_fail"] == c["total"]
    assert not rep.ok
    json.dumps(rep.as_dict())


def _strip(rep):
    return [{k: v for k, v in r.as_dict().items() if k != "ms"} for r in rep.results]


def test_runs_are_deterministic_and_parallel_equivalent():
    a = run_suite(filter="B")
    b = run_suite(filter="B")
    c = run_suite(filter="B", parallelism=4)
    assert _strip(a) == _strip(b) == _strip(c)


def test_evaluation_is_independent_of_order():
    alone = evaluate_identity("C15")
    run_suite(filter="D")
    again = evaluate_identity("C15")
    assert alone.lhs == again.lhs and alone.rhs == again.rhs


def test_meta():
    rep = run_suite(ids=["C4"], tol_scale=2.0)
    assert set(rep.meta) == {"version", "timestamp", "tol_scale", "backend", "selection"}
    assert rep.meta["selection"] == "C4"
    assert rep.results[0].tol == 2.0 * TOL_CLASSES["MED"]


def _result(lhs, rhs, tol=1e-8, error="", questionable=False):
    return VerificationResult("X", "x", {}, lhs, rhs, tol, questionable=questionable, error=error)


def test_pass_rule():
    assert _result(Approx(1.0, 1e-12), Approx(1.0 + 5e-9, 1e-12)).passed
    assert not _result(Approx(1.0, 1e-12), Approx(1.0 + 5e-8, 1e-12)).passed
    # slack from the bounds is allowed only while the bounds themselves are small
    assert _result(Approx(1.0, 4e-9), Approx(1.0 + 1.2e-8, 4e-9)).passed
    assert not _result(Approx(1.0, 1e-7), Approx(1.0, 1e-12)).passed
    assert not _result(Approx(math.nan, math.inf), Approx(1.0, 0.0)).passed
    assert not _result(Approx(1.0, 0.0), Approx(1.0, 0.0), error="boom").passed


def test_pass_rule_is_pure():
    r = _result(Approx(1.0, 1e-12), Approx(1.0 + 5e-9, 1e-12))
    assert all(r.passed for _ in range(3))
    assert r.as_dict()["pass"] is True


def test_questionable_failures_are_counted_apart():
    from sicigamma.registry.model import Report
    rep = Report({}, (
        _result(Approx(0.0, 0.0), Approx(1.0, 0.0), questionable=True),
        _result(Approx(0.0, 0.0), Approx(0.0, 0.0)),
    ))
    assert rep.counts == {"total": 2, "pass": 1, "fail": 0, "questionable_fail": 1, "skip": 0}
    assert rep.ok


def test_exceptions_become_error_strings(monkeypatch):
    def boom(**kw):
        raise RuntimeError("no")

    rec = IdentityRecord("C99", "t", "x", boom, lambda: Approx(0.0, 0.0), "MED", "m")
    monkeypatch.setitem(CATALOG, "C99", rec)
    res = evaluate_identity("C99")
    assert not res.passed
    assert "RuntimeError: no" in res.error


def test_record_validation():
    with pytest.raises(ValueError):
        IdentityRecord("Q1", "t", "x", abs, abs, "MED", "m")
    with pytest.raises(ValueError):
        IdentityRecord("A9", "t", "x", abs, abs, "SLOPPY", "m")
    assert Param("n", 1, lo=1, integer=True, lo_open=False).describe_range() == "integer in [1, inf]"


def test_sweep_starts_with_defaults():
    for r in list_identities():
        assert r.sweep_points()[0] == r.resolve()
