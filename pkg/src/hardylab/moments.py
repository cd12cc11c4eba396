"""Power moments of Hardy's function: I_k(x) = integral of Z^k over [1, x].

A per-k cumulative cache stores I_k at quarter-period anchor points, built
in one deterministic left-to-right pass; any I_k(x) then costs a single
Gauss-Legendre panel from the nearest anchor.  Mellin-transform callers
re-integrate I_k thousands of times, so the cache is the difference between
seconds and hours.  Checkpoints every dT = 100 can be exported/imported as
CSV for reuse across CLI runs.

Cache construction is single-threaded and extend-only; the anchor arrays
already written are never mutated, so finished prefixes are safe to read
concurrently.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError
from .hardy import z_breakpoints, z_eval_many
from .quad import _GL16_W, _GL16_X, _GL8_W, _GL8_X, integrate_oscillatory
from .special import TWO_PI


@dataclass(frozen=True)
class MomentResult:
    k: int
    a: float
    b: float
    value: float
    abs_err_est: float


def z_power_freq(k: int):
    """Local oscillation frequency of Z^k: k * |theta'(t)| / (2*pi)."""
    def freq(t: float) -> float:
        if t <= 0.1:
            return 0.0
        return k * abs(0.5 * math.log(t / TWO_PI)) / TWO_PI
    return freq


def hardy_moment(k: int, a: float, b: float, tol: float = 1e-7,
                 corrections: int = 3, budget: int | None = None) -> MomentResult:
    """integral of Z^k over [a, b], adaptive; Z from the Riemann-Siegel
    formula above t = 10 and from the oracle below."""
    if not (1 <= k <= 8):
        raise DomainError("hardy_moment requires 1 <= k <= 8")
    if not (1.0 <= a < b):
        raise DomainError("hardy_moment requires 1 <= a < b")

    def f(t: np.ndarray) -> np.ndarray:
        return z_eval_many(t, corrections) ** k

    res = integrate_oscillatory(f, a, b, z_power_freq(k), tol=tol,
                                budget=budget, breakpoints=z_breakpoints(a, b))
    return MomentResult(k=k, a=a, b=b, value=float(res.value.real),
                        abs_err_est=res.abs_err_est)


class MomentCache:
    """Cumulative I_k anchors on [1, X], extended on demand."""

    def __init__(self, k: int, corrections: int = 3):
        self.k = k
        self.corrections = corrections
        self.edges = np.array([1.0])
        self.values = np.array([0.0])
        self.cum_err = np.array([0.0])

    def _zk(self, t: np.ndarray) -> np.ndarray:
        return z_eval_many(t, self.corrections) ** self.k

    def ensure(self, x_max: float) -> None:
        if x_max <= self.edges[-1]:
            return
        freq = z_power_freq(self.k)
        start = self.edges[-1]
        # evaluation is only piecewise smooth; every breakpoint gets an edge
        breaks = list(z_breakpoints(start, x_max))
        new_edges = [start]
        x = start
        while x < x_max:
            f = freq(x)
            width = min(4.0, 0.25 / f) if f > 0 else 4.0
            nxt = min(x_max, x + width)
            while breaks and breaks[0] <= x:
                breaks.pop(0)
            if breaks and x < breaks[0] < nxt:
                nxt = breaks[0]
            new_edges.append(nxt)
            x = nxt
        edges = np.array(new_edges)
        lo, hi = edges[:-1], edges[1:]
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        x16 = mid[:, None] + half[:, None] * _GL16_X[None, :]
        y16 = self._zk(x16.ravel()).reshape(x16.shape)
        v16 = (y16 * _GL16_W[None, :]).sum(axis=1) * half
        x8 = mid[:, None] + half[:, None] * _GL8_X[None, :]
        y8 = self._zk(x8.ravel()).reshape(x8.shape)
        v8 = (y8 * _GL8_W[None, :]).sum(axis=1) * half
        base_val = self.values[-1]
        base_err = self.cum_err[-1]
        self.edges = np.concatenate([self.edges, edges[1:]])
        self.values = np.concatenate([self.values, base_val + np.cumsum(v16)])
        self.cum_err = np.concatenate(
            [self.cum_err, base_err + np.cumsum(np.abs(v16 - v8))])

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """I_k at arbitrary points (vectorized, anchored single panels)."""
        xs = np.asarray(xs, dtype=float)
        if np.any(xs < 1.0):
            raise DomainError("I_k defined for x >= 1")
        self.ensure(float(xs.max()) if xs.size else 1.0)
        idx = np.searchsorted(self.edges, xs, side="right") - 1
        idx = np.clip(idx, 0, len(self.edges) - 1)
        lo = self.edges[idx]
        mid, half = 0.5 * (lo + xs), 0.5 * (xs - lo)
        nodes = mid[:, None] + half[:, None] * _GL16_X[None, :]
        flat = nodes.ravel()
        vals = np.zeros_like(flat)
        nz = half.repeat(16) > 0
        vals[nz] = self._zk(flat[nz])
        tails = (vals.reshape(nodes.shape) * _GL16_W[None, :]).sum(axis=1) * half
        return self.values[idx] + tails

    def value(self, x: float) -> float:
        return float(self.eval_many(np.array([x]))[0])

    def err_at(self, x: float) -> float:
        idx = int(np.searchsorted(self.edges, x, side="right")) - 1
        return float(self.cum_err[max(idx, 0)])

    def sup_scaled(self, exponent: float, x_lo: float, x_hi: float) -> float:
        """sup over anchors in [x_lo, x_hi] of |I_k(x)| * x^(-exponent)."""
        self.ensure(x_hi)
        m = (self.edges >= x_lo) & (self.edges <= x_hi)
        return float(np.max(np.abs(self.values[m]) * self.edges[m] ** (-exponent)))


_caches: dict[int, MomentCache] = {}


def moment_cache(k: int) -> MomentCache:
    if k not in _caches:
        _caches[k] = MomentCache(k)
    return _caches[k]


def hardy_primitive_F(T: float, tol: float = 1e-7) -> float:
    """F(T) = I_1(T), served from the cumulative cache."""
    if T < 1.0:
        raise DomainError("F(T) requires T >= 1")
    if T == 1.0:
        return 0.0
    return moment_cache(1).value(T)


def abs_moment(k: int, a: float, b: float, tol: float = 1e-7) -> MomentResult:
    """integral of |zeta(1/2+it)|^(2k) = Z^(2k) over [a, b] (k = 1 or 2)."""
    if k not in (1, 2):
        raise DomainError("abs_moment supports k in {1, 2}")
    inner = hardy_moment(2 * k, a, b, tol)
    return MomentResult(k=k, a=a, b=b, value=inner.value,
                        abs_err_est=inner.abs_err_est)


def checkpoints(k: int, t_max: float, dt: float = 100.0):
    """(T, I_k(T), err) rows at T = 1, 1+dt, 1+2dt, ... up to t_max."""
    cache = moment_cache(k)
    ts = np.arange(1.0, t_max + 0.5 * dt, dt)
    vals = cache.eval_many(ts)
    return [(float(t), float(v), cache.err_at(float(t))) for t, v in zip(ts, vals)]


def write_checkpoints(path: str | Path, k: int, t_max: float, dt: float = 100.0) -> None:
    """CSV rows (k, T, I_k(T), err), stable ordering."""
    rows = checkpoints(k, t_max, dt)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["k", "T", "I_k", "err"])
        for t, v, e in rows:
            w.writerow([k, f"{t:.17e}", f"{v:.17e}", f"{e:.17e}"])


def read_checkpoints(path: str | Path):
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        next(r)
        return [(int(k), float(t), float(v), float(e)) for k, t, v, e in r]
