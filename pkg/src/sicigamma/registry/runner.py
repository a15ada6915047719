"""Selecting, evaluating and collecting catalog records."""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from .. import __version__, kernels
from ..numcore import Approx
from . import group_a, group_b, group_c, group_d, group_e, group_f
from .model import IdentityRecord, ParameterError, Report, UnknownIdentityError, VerificationResult


_ALL = (group_a.RECORDS + group_b.RECORDS + group_c.RECORDS
        + group_d.RECORDS + group_e.RECORDS + group_f.RECORDS)
CATALOG = {r.id: r for r in sorted(_ALL, key=lambda r: r.id)}
if len(CATALOG) != len(_ALL):
    raise RuntimeError("duplicate identity ids in the catalog")


def get_record(identity_id: str) -> IdentityRecord:
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {identity_id!r}") from None


def _matches(rec: IdentityRecord, flt: str) -> bool:
    # a category letter is also an id prefix
    return rec.category == flt or rec.id.startswith(flt)


def list_identities(filter: str | None = None) -> list[IdentityRecord]:
    """Records in id order, optionally restricted to a category letter or
    name, or to an id prefix."""
    recs = list(CATALOG.values())
    if not filter:
        return recs
    return [r for r in recs if _matches(r, filter)]


def _check_scale(tol_scale):
    tol_scale = float(tol_scale)
    if not tol_scale > 0 or not math.isfinite(tol_scale):
        raise ValueError(f"tol_scale must be a positive number, got {tol_scale!r}")
    return tol_scale


def _evaluate(rec: IdentityRecord, params: dict, tol_scale: float) -> VerificationResult:
    t0 = time.perf_counter()
    error = ""
    bad = Approx(math.nan, math.inf)
    try:
        lhs = rec.lhs(**params)
    except Exception as exc:  # recorded in the result, never raised
        lhs, error = bad, f"lhs: {type(exc).__name__}: {exc}"
    try:
        rhs = rec.rhs(**params)
    except Exception as exc:
        rhs = bad
        error = (error + "; " if error else "") + f"rhs: {type(exc).__name__}: {exc}"
    ms = 1e3 * (time.perf_counter() - t0)
    return VerificationResult(
        id=rec.id, eq=rec.eq, params=dict(params), lhs=lhs, rhs=rhs, tol=rec.tol * tol_scale,
        questionable=rec.questionable, ms=ms, error=error,
    )


def evaluate_identity(identity_id: str, overrides: dict | None = None, tol_scale: float = 1.0) -> VerificationResult:
    """Evaluate one record, at its defaults unless overridden.

    Raises UnknownIdentityError for a bad id and ParameterError for an
    unknown or out-of-range parameter.
    """
    rec = get_record(identity_id)
    params = rec.resolve(overrides)
    return _evaluate(rec, params, _check_scale(tol_scale))


def _meta(tol_scale, selection):
    return {
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tol_scale": tol_scale,
        "backend": kernels.BACKEND,
        "selection": selection,
    }


def run_suite(filter: str | None = None, tol_scale: float = 1.0, parallelism: int = 1,
              ids: list[str] | None = None) -> Report:
    """Evaluate the selected records at defaults and over their sweeps.

    Results keep catalog order whatever the parallelism.
    """
    tol_scale = _check_scale(tol_scale)
    if ids is not None:
        recs = [get_record(i) for i in ids]
        selection = ",".join(ids)
    else:
        recs = list_identities(filter)
        selection = filter or "all"
    jobs = [(rec, pt) for rec in recs for pt in rec.sweep_points()]

    def work(job):
        return _evaluate(job[0], job[1], tol_scale)

    workers = max(1, int(parallelism))
    if workers == 1:
        results = [work(j) for j in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, jobs))
    return Report(meta=_meta(tol_scale, selection), results=tuple(results))


__all__ = [
    "CATALOG", "ParameterError", "UnknownIdentityError", "evaluate_identity", "get_record",
    "list_identities", "run_suite",
]
