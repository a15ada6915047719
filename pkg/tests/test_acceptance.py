"""Acceptance criteria 1-11, one pass/fail line each.

Runs under pytest or directly: ``python3 tests/test_acceptance.py``.
"""

import json
import time

import pytest

from sicigamma import kernels
from sicigamma.cli import report_to_json
from sicigamma.numcore import verify_constants, zeta_prime_neg1_relation
from sicigamma.registry import evaluate_identity, get_record, run_suite


def _timed(rid, overrides=None):
    t0 = time.perf_counter()
    r = evaluate_identity(rid, overrides)
    return r, time.perf_counter() - t0


def _sweep(rid):
    rec = get_record(rid)
    return [evaluate_identity(rid, pt) for pt in rec.sweep_points()]


def _ok(results, tol):
    return all(r.error == "" and r.passed and r.abs_err <= tol for r in results)


def _worst(results):
    return max(r.abs_err for r in results)


def crit_1():
    b4, t4 = _timed("B4")
    b5, t5 = _timed("B5")
    ok = b4.passed and b4.abs_err <= 1e-10 and b5.passed and b5.abs_err <= 1e-9 and t4 < 1 and t5 < 1
    return ok, f"B4 {b4.abs_err:.1e} in {t4:.2f}s, B5 {b5.abs_err:.1e} in {t5:.2f}s"


def _count_ci(rid):
    # every Ci evaluation goes through the vectorised kernel
    real = kernels.sici_aux
    seen = [0]

    def counting(x):
        seen[0] += len(x)
        return real(x)

    kernels.sici_aux = counting
    try:
        r = evaluate_identity(rid)
    finally:
        kernels.sici_aux = real
    return r, seen[0]


def crit_2():
    parts, ok = [], True
    for rid in ("C4", "C11", "C12", "C16"):
        r, n = _count_ci(rid)
        ok = ok and r.passed and r.abs_err <= 1e-8 and 0 < n <= 10 ** 4
        parts.append(f"{rid} {r.abs_err:.1e}/{n} Ci")
    return ok, ", ".join(parts)


def crit_3():
    t0 = time.perf_counter()
    res = [r for i in range(1, 8) for r in _sweep(f"A{i}")]
    dt = time.perf_counter() - t0
    return _ok(res, 1e-8) and len(res) >= 30 and dt < 30, f"{len(res)} checks, worst {_worst(res):.1e}, {dt:.1f}s"


def crit_4():
    res = [evaluate_identity("D1", {"x": x}) for x in (0.1, 0.25, 0.5, 0.9)]
    return _ok(res, 1e-5), f"worst {_worst(res):.1e}"


def crit_5():
    c15 = [evaluate_identity("C15", {"u": u}) for u in (0.25, 0.5, 1.0)]
    adam = _sweep("B29") + _sweep("B30")
    c18 = _sweep("C18")
    ok = _ok(c15, 1e-7) and _ok(adam, 1e-8) and _ok(c18, 1e-7)
    return ok, f"C15 {_worst(c15):.1e}, B29/B30 {_worst(adam):.1e}, C18 {_worst(c18):.1e}"


def crit_6():
    res = [evaluate_identity("B27", {"a": a}) for a in (0.5, 1.0, 2.0, 5.0)]
    res += [evaluate_identity("B28", {"mu": a}) for a in (0.5, 1.0, 2.0, 5.0)]
    return _ok(res, 1e-9), f"worst {_worst(res):.1e} over 8 points"


def crit_7():
    b34 = _sweep("B34")
    b35 = _sweep("B35")
    return _ok(b34, 1e-6) and _ok(b35, 1e-6), f"B34 {_worst(b34):.1e}, B35 {_worst(b35):.1e}"


def crit_8():
    res = [evaluate_identity(rid) for rid in ("E1", "E2", "E3")]
    counts = [int(r.lhs.value) for r in res]
    ok = all(r.passed for r in res) and counts == [0, 0, 0] and res[0].params["samples"] >= 200
    return ok, f"violations {counts}"


def crit_9():
    res = [evaluate_identity("C1", {"n": n}) for n in range(1, 51)]
    return _ok(res, 1e-13), f"worst {_worst(res):.1e} over n = 1..50"


def crit_10():
    checks = verify_constants()
    rel = zeta_prime_neg1_relation()
    ok = all(v for _, v in checks) and rel <= 1e-12
    return ok, f"{sum(v for _, v in checks)}/{len(checks)} checks, relation {rel:.1e}"


def _canonical(rep):
    d = json.loads(report_to_json(rep))
    d["meta"].pop("timestamp")
    for r in d["results"]:
        r.pop("ms")
    return json.dumps(d, sort_keys=True)


def crit_11():
    t0 = time.perf_counter()
    a = run_suite()
    dt = time.perf_counter() - t0
    b = run_suite()
    c = a.counts
    ok = c["fail"] == 0 and dt < 300 and _canonical(a) == _canonical(b)
    return ok, f"{c['total']} results, {c['fail']} failures, {dt:.1f}s, identical JSON {_canonical(a) == _canonical(b)}"


CRITERIA = [
    (1, "Catalan integrals", crit_1),
    (2, "Ci sums within the evaluation budget", crit_2),
    (3, "Fourier coefficient suite", crit_3),
    (4, "Kummer pointwise", crit_4),
    (5, "Barnes G chain", crit_5),
    (6, "Binet integrals", crit_6),
    (7, "log^2 Gamma moments", crit_7),
    (8, "inequality suite", crit_8),
    (9, "exact finite identity", crit_9),
    (10, "constant self-test", crit_10),
    (11, "full suite", crit_11),
]


def _line(num, name, ok, detail):
    return f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    import sys

    results = [(num, name, *fn()) for num, name, fn in CRITERIA]
    for r in results:
        print(_line(*r))
    sys.exit(0 if all(r[2] for r in results) else 1)
