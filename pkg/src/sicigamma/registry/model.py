"""Data model of the identity catalog and of verification outcomes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..numcore import Approx

TOL_CLASSES = {
    "TIGHT": 1e-10,
    "MED": 1e-8,
    "LOOSE": 1e-5,
    "ASYMPT": 1e-4,
}

CATEGORIES = {
    "A": "coef_integral",
    "B": "definite_integral",
    "C": "series_closed_form",
    "D": "fourier_pointwise",
    "E": "inequality",
    "F": "consistency",
}


class UnknownIdentityError(KeyError):
    pass


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class Param:
    """A named parameter with default, admissible range and sweep grid."""

    name: str
    default: object
    lo: Optional[float] = None
    hi: Optional[float] = None
    sweep: tuple = ()
    integer: bool = False
    choices: Optional[tuple] = None
    lo_open: bool = True

    def describe_range(self) -> str:
        if self.choices is not None:
            return "one of " + ", ".join(repr(c) for c in self.choices)
        left = "(" if self.lo_open else "["
        lo = "-inf" if self.lo is None else f"{self.lo:g}"
        hi = "inf" if self.hi is None else f"{self.hi:g}"
        kind = "integer in " if self.integer else ""
        return f"{kind}{left}{lo}, {hi}]"

    def validate(self, value):
        if self.choices is not None:
            if value not in self.choices:
                raise ParameterError(f"parameter {self.name}={value!r} must be {self.describe_range()}")
            return value
        try:
            num = float(value)
        except (TypeError, ValueError):
            raise ParameterError(f"parameter {self.name}={value!r} is not a number") from None
        if self.integer:
            if num != int(num):
                raise ParameterError(f"parameter {self.name}={value!r} must be an integer")
            num = int(num)
        bad = not math.isfinite(num)
        if self.lo is not None and (num < self.lo or (self.lo_open and num == self.lo)):
            bad = True
        if self.hi is not None and num > self.hi:
            bad = True
        if bad:
            raise ParameterError(f"parameter {self.name}={value!r} out of range {self.describe_range()}")
        return num


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    title: str
    eq: str
    lhs: Callable[..., Approx]
    rhs: Callable[..., Approx]
    tol_class: str
    method: str
    params: tuple = ()
    questionable: bool = False
    note: str = ""
    # explicit parameter points; when empty the sweep is the product grid
    points: tuple = ()

    def __post_init__(self):
        if self.tol_class not in TOL_CLASSES:
            raise ValueError(f"{self.id}: unknown tolerance class {self.tol_class}")
        if self.id[0] not in CATEGORIES:
            raise ValueError(f"{self.id}: id must start with a category letter")

    @property
    def category(self) -> str:
        return CATEGORIES[self.id[0]]

    @property
    def tol(self) -> float:
        return TOL_CLASSES[self.tol_class]

    def defaults(self) -> dict:
        return {p.name: p.default for p in self.params}

    def resolve(self, overrides: Optional[dict] = None) -> dict:
        values = self.defaults()
        by_name = {p.name: p for p in self.params}
        for key, val in (overrides or {}).items():
            if key not in by_name:
                known = ", ".join(by_name) or "none"
                raise ParameterError(f"{self.id} has no parameter {key!r} (parameters: {known})")
            values[key] = val
        return {k: by_name[k].validate(v) for k, v in values.items()}

    def sweep_points(self) -> list:
        """Defaults first, then the declared grid without repeats."""
        first = self.resolve()
        out = [first]
        if self.points:
            grid = [self.resolve(p) for p in self.points]
        else:
            axes = [[(p.name, v) for v in (p.sweep or (p.default,))] for p in self.params]
            grid = [self.resolve(dict(combo)) for combo in itertools.product(*axes)] if axes else []
        for pt in grid:
            if pt not in out:
                out.append(pt)
        return out


@dataclass(frozen=True)
class VerificationResult:
    id: str
    eq: str
    params: dict
    lhs: Approx
    rhs: Approx
    tol: float
    questionable: bool = False
    ms: float = 0.0
    error: str = ""

    @property
    def abs_err(self) -> float:
        return abs(self.lhs.value - self.rhs.value)

    @property
    def passed(self) -> bool:
        if self.error:
            return False
        bound = self.lhs.err + self.rhs.err
        # a bound wider than the tolerance would make the comparison vacuous
        if not math.isfinite(self.abs_err) or not bound <= self.tol:
            return False
        return self.abs_err <= self.tol + bound

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "eq": self.eq,
            "params": dict(self.params),
            "lhs": self.lhs.value,
            "lhs_err": self.lhs.err,
            "rhs": self.rhs.value,
            "rhs_err": self.rhs.err,
            "abs_err": self.abs_err,
            "tol": self.tol,
            "pass": self.passed,
            "questionable": self.questionable,
            "ms": self.ms,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationResult":
        return cls(
            id=d["id"], eq=d["eq"], params=dict(d["params"]),
            lhs=Approx(d["lhs"], d["lhs_err"]), rhs=Approx(d["rhs"], d["rhs_err"]),
            tol=d["tol"], questionable=d["questionable"], ms=d["ms"], error=d.get("error", ""),
        )


@dataclass(frozen=True)
class Report:
    meta: dict
    results: tuple = field(default_factory=tuple)

    @property
    def counts(self) -> dict:
        passed = sum(1 for r in self.results if r.passed)
        failed = sum(1 for r in self.results if not r.passed and not r.questionable)
        flagged = sum(1 for r in self.results if not r.passed and r.questionable)
        return {
            "total": len(self.results),
            "pass": passed,
            "fail": failed,
            "questionable_fail": flagged,
            "skip": 0,
        }

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def as_dict(self) -> dict:
        return {
            "meta": dict(self.meta),
            "results": [r.as_dict() for r in self.results],
            "summary": self.counts,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(meta=dict(d["meta"]), results=tuple(VerificationResult.from_dict(r) for r in d["results"]))
