"""Summation of slowly convergent series with tail control.

Term generators are vectorised: ``term(n)`` takes an integer array of indices
and returns a float array.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import kernels
from .numcore import EPS, Approx


class TailModelWarning(UserWarning):
    """The observed decay of the terms contradicts the declared tail model."""


@dataclass(frozen=True)
class NoTail:
    """Terms are negligible beyond the summed range."""


@dataclass(frozen=True)
class PowerLaw:
    """Terms decay like n**-p, possibly with an alternating sign or log n factor."""

    p: float

    def __post_init__(self):
        if not self.p > 1:
            raise ValueError(f"power-law tail needs p > 1, got {self.p}")


@dataclass(frozen=True)
class Alternating:
    """Terms alternate in sign with decreasing magnitude."""


@dataclass(frozen=True)
class UserBound:
    """Caller supplies a bound on |sum of terms with index > N| as bound(N)."""

    bound: Callable[[int], float]


TailModel = Union[NoTail, PowerLaw, Alternating, UserBound]

ACCELERATIONS = ("none", "euler_alternating", "richardson_power")
RICHARDSON_LEVELS = 6


@dataclass(frozen=True)
class SeriesTask:
    term: Callable[[np.ndarray], np.ndarray]
    start_index: int = 1
    tail_model: TailModel = NoTail()
    abs_tol: float = 1e-10
    max_terms: int = 100_000
    acceleration: str = "none"
    log_terms: bool = False
    # bound on the evaluation error of each term (e.g. from rounded arguments)
    term_err: float = 0.0

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")
        if self.acceleration not in ACCELERATIONS:
            raise ValueError(f"acceleration must be one of {ACCELERATIONS}")
        if self.acceleration == "richardson_power" and not isinstance(self.tail_model, PowerLaw):
            raise ValueError("richardson_power acceleration needs a PowerLaw tail model")


@dataclass(frozen=True)
class SeriesResult:
    approx: Approx
    terms_used: int
    converged: bool

    @property
    def value(self) -> float:
        return self.approx.value

    @property
    def err(self) -> float:
        return self.approx.err


# --------------------------------------------------------------------------
# building blocks


def euler_average(partials) -> tuple[float, float]:
    """Limit of an oscillating sequence of partial sums by iterated averaging.

    Repeatedly replaces the sequence by means of neighbours and keeps the
    level whose last two entries agree best. Returns (value, err).
    """
    t = np.asarray(partials, dtype=np.float64)
    if t.size < 2:
        raise ValueError("need at least two partial sums")
    best_d = math.inf
    best_v = float(t[-1])
    while t.size >= 2:
        d = abs(float(t[-1] - t[-2]))
        if d < best_d:
            best_d, best_v = d, float(t[-1])
        t = 0.5 * (t[:-1] + t[1:])
    return best_v, best_d + 4.0 * EPS * abs(best_v)


def _basis(exponents, log_terms):
    cols = [lambda n: np.ones_like(n)]
    for e in exponents:
        if log_terms:
            cols.append(lambda n, e=e: np.log(n) / n ** e)
        cols.append(lambda n, e=e: 1.0 / n ** e)
    return cols


def extrapolate(ns, values, exponents, log_terms=False) -> tuple[float, float]:
    """Limit of values(N) ~ S + sum c_k N**-e_k (and log N N**-e_k) as N -> inf.

    ``ns`` should grow geometrically. Returns (value, err) where err compares
    the fit on all points against the fit that drops the coarsest one.
    """
    ns = np.asarray(ns, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    m = ns.size
    if m < 2:
        raise ValueError("need at least two points")
    cols = _basis(exponents, log_terms)

    def solve(k, drop=0):
        # k unknowns fitted exactly through k points, skipping the `drop` finest
        stop = m - drop
        x = ns[stop - k:stop]
        a = np.stack([c(x) for c in cols[:k]], axis=1)
        # column scaling keeps the system well conditioned
        scale = np.abs(a).max(axis=0)
        sol = np.linalg.solve(a / scale, values[stop - k:stop])
        return float(sol[0] / scale[0])

    k = min(m, len(cols))
    best = solve(k)
    if k == 1:
        return best, abs(float(values[-1] - values[-2])) + 8.0 * EPS * abs(best)
    prev = solve(k - 1)
    # the same lower-order fit one level coarser shows how fast fits settle
    prev_coarse = solve(k - 1, 1)
    err = abs(best - prev) + abs(prev - prev_coarse)
    return best, err + 8.0 * EPS * abs(best)


def richardson(ns, values, exponents, log_terms=False) -> float:
    return extrapolate(ns, values, exponents, log_terms)[0]


def _levels(total, base, count):
    """Up to ``count`` roughly geometric checkpoints, multiples of base, <= total."""
    out = []
    for j in range(count):
        n = ((total >> j) // base) * base
        if n < base or (out and n == out[-1]):
            break
        out.append(n)
    return out[::-1]


def _fit_decay(terms, ns):
    """Exponent p of an n**-p envelope fitted over the last decade."""
    n_end = ns[-1]
    lo = max(ns[0], n_end // 10)
    w = max(2, (n_end - lo) // 10)
    head = np.abs(terms[(ns >= lo) & (ns < lo + w)])
    tail = np.abs(terms[ns > n_end - w])
    if head.size == 0 or tail.size == 0 or head.max() == 0 or tail.max() == 0:
        return math.nan
    return math.log(head.max() / tail.max()) / math.log((n_end - w / 2) / (lo + w / 2))


def _check_model(task, terms, ns):
    model = task.tail_model
    if not isinstance(model, PowerLaw):
        return
    p_hat = _fit_decay(terms, ns)
    if math.isfinite(p_hat) and abs(p_hat - model.p) > 1.0:
        warnings.warn(
            f"terms decay like n^-{p_hat:.2f}, declared power law p={model.p}",
            TailModelWarning,
            stacklevel=3,
        )


def sum_series(task: SeriesTask) -> SeriesResult:
    """Sum ``task.term`` from ``start_index`` with the declared tail handling."""
    ns = np.arange(task.start_index, task.start_index + task.max_terms, dtype=np.int64)
    terms = np.asarray(task.term(ns), dtype=np.float64)
    if not np.all(np.isfinite(terms)):
        bad = int(ns[np.argmin(np.isfinite(terms))])
        raise ValueError(f"term {bad} is not finite")
    partial = kernels.compensated_cumsum(np.ascontiguousarray(terms))
    count = ns - task.start_index + 1
    rounding = 2.0 * EPS * float(np.abs(partial).max()) * math.sqrt(task.max_terms)
    model = task.tail_model
    _check_model(task, terms, ns)

    if task.acceleration == "euler_alternating":
        k = min(64, partial.size)
        value, err = euler_average(partial[-k:])
    elif task.acceleration == "richardson_power":
        p = model.p
        # parity-aligned geometric checkpoints keep alternating tails smooth
        levels = _levels(task.max_terms, 8, RICHARDSON_LEVELS)
        vals = partial[np.asarray(levels) - 1]
        levels = [n + task.start_index - 1 for n in levels]
        exponents = [p - 1 + j for j in range(len(levels))]
        value, err = extrapolate(levels, vals, exponents, task.log_terms)
    else:
        value = float(partial[-1])
        last = abs(float(terms[-1]))
        if isinstance(model, NoTail):
            err = last
        elif isinstance(model, UserBound):
            err = float(model.bound(int(ns[-1])))
        elif isinstance(model, Alternating):
            value = 0.5 * (float(partial[-1]) + float(partial[-2]))
            err = 0.5 * last
        else:
            value, err = _power_tail(terms, ns, partial, model.p, task.log_terms)
    err += rounding + task.term_err * float(count[-1])
    return SeriesResult(Approx(value, err), int(count[-1]), err <= task.abs_tol)


def _power_tail(terms, ns, partial, p, log_terms):
    """Add C * integral_{N+1/2}^inf x**-p dx with C fitted over the last decade."""
    n_end = int(ns[-1])
    sel = ns >= max(int(ns[0]), n_end // 10)
    x = ns[sel].astype(np.float64)
    y = terms[sel] * x ** p
    if log_terms:
        y = y / np.log(x)
    c = float(np.mean(y))
    spread = float(np.std(y))
    a = n_end + 0.5
    if log_terms:
        # integral of log x / x^p from a to inf
        unit = a ** (1 - p) * (math.log(a) / (p - 1) + 1.0 / (p - 1) ** 2)
    else:
        unit = a ** (1 - p) / (p - 1)
    tail = c * unit
    # the midpoint tail integral is off by O(1/N) relative to the tail
    return float(partial[-1]) + tail, spread * unit + abs(tail) * p / n_end


# --------------------------------------------------------------------------
# pointwise Fourier sums


def period_denominator(x: float, max_den: int = 64) -> Optional[int]:
    """Denominator q with x = p/q exactly in binary64, or None."""
    frac = Fraction(x).limit_denominator(max_den)
    if abs(float(frac) - x) <= 4 * EPS * max(1.0, abs(x)):
        return frac.denominator
    return None


def sum_fourier_pointwise(
    term: Callable[[np.ndarray], np.ndarray],
    x: float,
    max_terms: int = 1 << 15,
    levels: int = 7,
    log_terms: bool = True,
    denominator: Optional[int] = None,
) -> SeriesResult:
    """Sum a conditionally convergent Fourier-type series at one point.

    Partial sums are averaged over the window (N/2, N] (a Cesàro-type mean)
    at checkpoints N that are multiples of the period of the oscillation in
    n, and the window means are extrapolated in N with a 1/N, log N/N basis.
    """
    q = denominator if denominator is not None else period_denominator(x)
    base = 2 * (q or 1)
    top = max(base * 4, (max_terms // base) * base)
    ns = np.arange(1, top + 1, dtype=np.int64)
    terms = np.asarray(term(ns), dtype=np.float64)
    if not np.all(np.isfinite(terms)):
        raise ValueError("non-finite term in Fourier sum")
    partial = kernels.compensated_cumsum(np.ascontiguousarray(terms))
    csum = np.concatenate([[0.0], np.cumsum(partial)])
    chk = _levels(top, base, levels + 1)
    means = np.array([(csum[n] - csum[n // 2]) / (n - n // 2) for n in chk])
    if q is None:
        # no exact period: only the leading orders are trustworthy
        chk, means = chk[-3:], means[-3:]
    exponents = [1.0 + j for j in range(len(chk))]
    if log_terms:
        nb = len(chk)
        value, err = extrapolate(chk, means, exponents[: (nb + 1) // 2], True)
    else:
        value, err = extrapolate(chk, means, exponents, False)
    err += 4.0 * EPS * float(np.abs(partial).max()) * math.sqrt(top)
    return SeriesResult(Approx(value, err), top, True)


# --------------------------------------------------------------------------


def finite_sum_odd_reciprocals(n: int) -> float:
    """2 * sum_{k=1..n} 1/(2k-1), accumulated smallest term first."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    k = np.arange(int(n), 0, -1, dtype=np.float64)
    return 2.0 * math.fsum(1.0 / (2.0 * k - 1.0))


def harmonic_partials(ns: Sequence[int]) -> np.ndarray:
    top = int(max(ns))
    h = kernels.compensated_cumsum(1.0 / np.arange(1, top + 1, dtype=np.float64))
    return h[np.asarray(ns) - 1]
