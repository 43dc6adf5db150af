"""Window integrals I and J along the critical line.

With x = e^{-i pi/4} e^{i delta/2} and s = 1/2 + iu,

    I(t) = x^{-1/2} / (2 pi) * int_{t-k}^{t+k} phi(u) du,
    J(t) =           1 / (2 pi) * int_{t-k}^{t+k} |phi(u)| du,
    phi(u) = pi^{-s/2} Gamma(s/2) Q(s, a) e^{u (pi/4 - delta/2)}.

phi(u) has constant phase, so J = |I| on windows where Q(1/2 + iu) keeps a
sign and J > |I| once the Hardy function changes sign inside.  The Parseval
form of the same construction ties int |I|^2 dt to a theta-function integral
along the ray arg w = arg x.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import List, Optional, Tuple

import numpy as np
from scipy.integrate import quad_vec

from .errors import DomainError, QuadratureError, RangeError
from .options import DEFAULT_OPTIONS, EvalOptions
from .quadzeta import _q, q_shift
from .special import log_gamma_factor
from .theta import g_theta_complex

_EPS = np.finfo(float).eps
DETECT_MARGIN = 10.0
CONSISTENT_MARGIN = 2.0
_REL_ERR_LIMIT = 1e-9


@dataclass(frozen=True)
class WindowParams:
    t: float
    k: float
    delta: float
    a: float

    def __post_init__(self):
        if not self.k > 0:
            raise DomainError("window half-width k must be positive")
        if not 0.0 < self.delta < 1.0:
            raise DomainError("delta must lie in (0, 1)")
        object.__setattr__(self, "a", q_shift(self.a))

    @property
    def log_x(self) -> complex:
        return complex(0.0, -0.25 * math.pi + 0.5 * self.delta)

    @property
    def x(self) -> complex:
        return cmath.exp(self.log_x)


@dataclass(frozen=True)
class WindowReport:
    params: WindowParams
    i_value: complex
    j_val: float
    quad_err: float
    verdict: str = field(init=False)

    def __post_init__(self):
        gap = self.j_val - self.i_abs
        if gap > DETECT_MARGIN * self.quad_err:
            verdict = "zero_detected"
        elif abs(gap) <= CONSISTENT_MARGIN * self.quad_err:
            verdict = "zero_free_consistent"
        else:
            verdict = "inconclusive"
        object.__setattr__(self, "verdict", verdict)

    @property
    def i_abs(self) -> float:
        return abs(self.i_value)


def window_integrand(u: float, a: float, delta: float, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """phi(u) = xi(1/2 + iu) e^{u (pi/4 - delta/2)}, combined in log scale."""
    s = complex(0.5, u)
    if u < 0:
        q = _q(s.conjugate(), a, opts)[0].conjugate()
    else:
        q = _q(s, a, opts)[0]
    return cmath.exp(log_gamma_factor(s) + u * (0.25 * math.pi - 0.5 * delta)) * q


def _window_quadrature(p: WindowParams, opts: EvalOptions):
    if not p.t - p.k > 0:
        raise DomainError("window must satisfy t - k > 0")

    def f(u):
        w = window_integrand(u, p.a, p.delta, opts)
        return np.array([w.real, w.imag, abs(w)])

    vals, err = quad_vec(f, p.t - p.k, p.t + p.k, epsabs=0.0, epsrel=opts.quad_rel_tol, norm="max", limit=2000)
    scale = 1.0 / (2.0 * math.pi)
    i_val = scale * cmath.exp(-0.5 * p.log_x) * complex(vals[0], vals[1])
    j_val = scale * vals[2]
    # floor the estimate by rounding in an integral of magnitude j
    quad_err = max(scale * err, 64.0 * _EPS * j_val)
    if quad_err > _REL_ERR_LIMIT * max(j_val, 1e-300):
        raise QuadratureError(f"window at t = {p.t} has relative error {quad_err / j_val:.2e}")
    return i_val, j_val, quad_err


def i_window(p: WindowParams, opts: EvalOptions = DEFAULT_OPTIONS, return_error: bool = False):
    """I_a(t) for the window [t - k, t + k].

    Raises
    ------
    QuadratureError
        If the relative error estimate exceeds 1e-9.
    """
    i_val, _, err = _window_quadrature(p, opts)
    return (i_val, err) if return_error else i_val


def j_window(p: WindowParams, opts: EvalOptions = DEFAULT_OPTIONS, return_error: bool = False):
    """J_a(t), the same integral over |phi|."""
    _, j_val, err = _window_quadrature(p, opts)
    return (j_val, err) if return_error else j_val


def window_report(p: WindowParams, opts: EvalOptions = DEFAULT_OPTIONS) -> WindowReport:
    i_val, j_val, err = _window_quadrature(p, opts)
    return WindowReport(p, i_val, j_val, err)


def _report_at(t: float, k: float, delta: float, a: float, opts: EvalOptions) -> WindowReport:
    return window_report(WindowParams(t, k, delta, a), opts)


def window_centres(t0: float, t1: float, k: float, stride: Optional[float] = None) -> np.ndarray:
    """Centres t0 + k, t0 + k + stride, ... up to t1 - k (stride defaults to k)."""
    stride = k if stride is None else stride
    n = int(math.floor((t1 - t0 - 2 * k) / stride + 1e-9)) + 1
    return t0 + k + stride * np.arange(max(n, 0))


def detect_zeros_by_windows(
    a,
    t0: float,
    t1: float,
    k: float = 0.5,
    delta: float = 0.5,
    opts: EvalOptions = DEFAULT_OPTIONS,
    stride: Optional[float] = None,
    workers: Optional[int] = None,
) -> List[WindowReport]:
    """One WindowReport per centre of :func:`window_centres`."""
    a = q_shift(a)
    centres = window_centres(float(t0), float(t1), float(k), stride)
    job = partial(_report_at, k=float(k), delta=float(delta), a=a, opts=opts)
    if workers and workers > 1 and len(centres) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(job, centres))
    return [job(float(c)) for c in centres]


# ---------------------------------------------------------------- Parseval

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _panel_integrals(a: float, delta: float, lo: float, h: float, n: int, opts: EvalOptions) -> np.ndarray:
    """int of phi over [lo + j h, lo + (j+1) h] for j < n, 10-point Gauss-Legendre."""
    out = np.empty(n, dtype=complex)
    half = 0.5 * h
    for j in range(n):
        mid = lo + (j + 0.5) * h
        acc = 0j
        for x, w in zip(_GL_NODES, _GL_WEIGHTS):
            acc += w * window_integrand(mid + half * x, a, delta, opts)
        out[j] = half * acc
    return out


def _simpson(y: np.ndarray, h: float) -> float:
    if len(y) % 2 == 0:
        # trapezoid on the last interval keeps the rule composite
        return _simpson(y[:-1], h) + 0.5 * h * (y[-2] + y[-1])
    return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def parseval_lhs(k: float, delta: float, a, T_trunc: float, opts: EvalOptions = DEFAULT_OPTIONS, panel: float = 0.1) -> float:
    """(1/2 pi) int_{-T}^{T} |I(t)|^2 dt with I(t) from a cumulative panel antiderivative.

    The panel width divides k, so every I(t_j) on the grid t_j = j h is an
    exact difference of two antiderivative samples.
    """
    a = q_shift(a)
    m = max(1, int(round(k / panel)))
    h = k / m
    n_t = int(math.ceil(T_trunc / h))
    lo = -n_t * h - k
    n_panels = 2 * n_t + 2 * m
    cum = np.concatenate([[0j], np.cumsum(_panel_integrals(a, delta, lo, h, n_panels, opts))])
    # I(t_j), t_j = lo + k + j h, j = 0..2 n_t
    idx = np.arange(2 * n_t + 1)
    window = cum[idx + 2 * m] - cum[idx]
    x_half = cmath.exp(-0.5 * complex(0.0, -0.25 * math.pi + 0.5 * delta))
    i_t = x_half * window / (2.0 * math.pi)
    return _simpson(np.abs(i_t) ** 2, h) / (2.0 * math.pi)


def _theta_remainder(z: complex, a: float) -> complex:
    # G_a(z) - 1 - 1/z
    return g_theta_complex(z, a) - 1.0 - 1.0 / z


def parseval_rhs(k: float, delta: float, a, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """(1/pi^2) int_0^inf |sin(k log w) / log w|^2 |G_a(x w) - 1 - 1/(x w)|^2 dw.

    With w = e^y the y < 0 half maps onto y > 0 through G(z) = G(1/z)/z and
    G(conj z) = conj G(z), giving
    (2/pi^2) int_0^inf (sin(k y)/y)^2 |G_a(x e^y) - 1 - e^{-y}/x|^2 e^y dy.
    """
    a = q_shift(a)
    if not math.sin(delta) > 0:
        raise DomainError("need sin(delta) > 0 so that the theta series converges")
    x = cmath.exp(complex(0.0, -0.25 * math.pi + 0.5 * delta))

    def f(y):
        sinc = k if y == 0.0 else math.sin(k * y) / y
        return sinc * sinc * abs(_theta_remainder(x * math.exp(y), a)) ** 2 * math.exp(y)

    # past y = 40 the integrand is below e^{-40} / y^2
    breaks = np.concatenate([np.arange(0.0, 4.0, math.pi / (2 * k)), [4.0, 10.0, 40.0]])
    total = 0.0
    err = 0.0
    for lo, hi in zip(breaks, breaks[1:]):
        if hi <= lo:
            continue
        v, e = quad_vec(f, lo, hi, epsabs=1e-15, epsrel=1e-11, limit=400)
        total += float(v)
        err += float(e)
    if err > 1e-8 * max(total, 1e-300):
        raise QuadratureError(f"Parseval theta side error {err:.2e}")
    return 2.0 * total / (math.pi * math.pi)


def parseval_check(k: float, delta: float, a, T_trunc: Optional[float] = None, opts: EvalOptions = DEFAULT_OPTIONS) -> Tuple[float, float]:
    """Both sides of the Parseval identity for the window transform.

    Raises
    ------
    RangeError
        Unless delta in [0.3, 1], k in [1, 10] and T_trunc >= 40 / delta.
    """
    if not 0.3 <= delta <= 1.0:
        raise RangeError("Parseval check needs delta in [0.3, 1]")
    if not 1.0 <= k <= 10.0:
        raise RangeError("Parseval check needs k in [1, 10]")
    T_trunc = 40.0 / delta if T_trunc is None else float(T_trunc)
    if T_trunc < 40.0 / delta - 1e-12:
        raise RangeError("T_trunc must be at least 40 / delta")
    return parseval_lhs(k, delta, a, T_trunc, opts), parseval_rhs(k, delta, a, opts)
