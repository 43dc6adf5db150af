"""The quadrilateral zeta function Q(s, a) and its completed form.

    2 Q(s, a) = zeta(s, a) + zeta(s, 1-a) + Li(s, a) + Li(s, 1-a),   0 < a <= 1/2.

Q is meromorphic with a single simple pole at s = 1 (residue 1) and satisfies
Riemann's functional equation Q(1-s, a) = chi(s) Q(s, a) with
chi(s) = 2 Gamma(s) (2 pi)^{-s} cos(pi s / 2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, ExcludedPointError, PoleError, PrecisionError
from .hurwitz import _p_pair, _z_pair
from .options import DEFAULT_OPTIONS, EvalOptions, as_shift
from .special import LOG_2PI, log_gamma, log_gamma_factor, rs_theta

_SINGULAR_DISTANCE = 1e-3
_COMPLETED_FORM_DISTANCE = 0.1


@dataclass(frozen=True)
class QPoint:
    s: complex
    a: float
    value: complex
    abs_err_est: float


def q_shift(a) -> float:
    """Validate a shift for Q: 0 < a <= 1/2."""
    a = as_shift(a)
    if a > 0.5:
        raise DomainError(f"Q(s, a) is defined for 0 < a <= 1/2, got a = {a!r}")
    return a


def _q(s: complex, a: float, opts: EvalOptions):
    z, ez = _z_pair(s, a, opts)
    p, ep = _p_pair(s, a, opts)
    return complex(0.5 * (z + p)), float(0.5 * (ez + ep))


def q_eval(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> QPoint:
    """Evaluate Q(s, a) with a propagated error estimate.

    Raises
    ------
    PoleError
        At s = 1.
    DomainError
        For a outside (0, 1/2].
    """
    s = complex(s)
    a = q_shift(a)
    if s == 1.0:
        raise PoleError("Q(s, a) has a simple pole at s = 1")
    value, err = _q(s, a, opts)
    return QPoint(s, a, value, err)


def quadrilateral_zeta(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Q(s, a) as a plain complex number."""
    return q_eval(s, a, opts).value


def xi_completed(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """pi^{-s/2} Gamma(s/2) Q(s, a).

    The poles of Gamma(s/2) at 0, -2, -4, ... are reported as excluded even
    where the product is finite.
    """
    s = complex(s)
    a = q_shift(a)
    if s == 1.0:
        raise PoleError("completed function has a pole at s = 1")
    if s.imag == 0.0 and s.real <= 0 and s.real % 2 == 0:
        raise ExcludedPointError(f"s = {s.real:g} is a pole of Gamma(s/2)")
    return cmath.exp(log_gamma_factor(s)) * _q(s, a, opts)[0]


def chi_factor(s) -> complex:
    """chi(s) = 2 Gamma(s) (2 pi)^{-s} cos(pi s / 2)."""
    s = complex(s)
    return 2.0 * cmath.cos(0.5 * math.pi * s) * cmath.exp(log_gamma(s) - s * LOG_2PI)


def _distance_to_singular_set(s: complex) -> float:
    # {1} united with the poles of Gamma(s) (non-positive integers) and the
    # zeros of cos(pi s / 2) (odd integers)
    n = round(s.real)
    candidates = [1] + [m for m in (n - 1, n, n + 1) if m <= 0 or m % 2 == 1]
    return min(abs(s - m) for m in candidates)


def _distance_to_gamma_half_poles(s: complex) -> float:
    if s.real > 1.0:
        return abs(s)
    nearest = 2 * min(0, round(s.real / 2))
    return abs(s - nearest)


def fe_residual(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Relative residual |Q(1-s) - chi(s) Q(s)| / (1 + |Q(1-s)|).

    Uses chi(s) = g(s) / g(1-s) with g(w) = pi^{-w/2} Gamma(w/2) away from the
    poles of Gamma(s/2), which avoids the cancellation at zeros of the cosine.

    Raises
    ------
    ExcludedPointError
        Within 1e-3 of {0, 1}, of a pole of Gamma(s) or of a zero of cos(pi s / 2).
    """
    s = complex(s)
    a = q_shift(a)
    if _distance_to_singular_set(s) < _SINGULAR_DISTANCE:
        raise ExcludedPointError(f"s = {s} is too close to the singular set")
    q_s = _q(s, a, opts)[0]
    q_r = _q(1.0 - s, a, opts)[0]
    if _distance_to_gamma_half_poles(s) > _COMPLETED_FORM_DISTANCE and (
        _distance_to_gamma_half_poles(1.0 - s) > _COMPLETED_FORM_DISTANCE
    ):
        ratio = cmath.exp(log_gamma_factor(s) - log_gamma_factor(1.0 - s))
    else:
        ratio = chi_factor(s)
    return abs(q_r - ratio * q_s) / (1.0 + abs(q_r))


def hardy_z(t: float, a, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Real-valued rotation exp(i theta(t)) Q(1/2 + it, a) of Q on the critical line.

    Raises
    ------
    PrecisionError
        If the discarded imaginary part exceeds max(1e-9, 1e-9 |value|).
    """
    t = float(t)
    a = q_shift(a)
    w = cmath.exp(1j * rs_theta(t)) * _q(complex(0.5, t), a, opts)[0]
    if abs(w.imag) > max(1e-9, 1e-9 * abs(w.real)):
        raise PrecisionError(f"hardy_z({t}, {a}) has imaginary part {w.imag:.3e}")
    return w.real


def residue_estimate(a, radius: float = 1e-3, points: int = 8, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Residue of Q at s = 1 by the trapezoidal rule for (1/2 pi i) \\oint Q ds.

    The mean of (s - 1) Q(s) over ``points`` equispaced nodes on the circle
    cancels every Laurent term of order below ``points - 1``.
    """
    a = q_shift(a)
    acc = 0j
    for j in range(points):
        h = radius * cmath.exp(2j * math.pi * j / points)
        acc += h * _q(1.0 + h, a, opts)[0]
    return acc / points


def residue_check(a, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """|residue - 1| from 8 nodes on |s - 1| = 1e-3."""
    return abs(residue_estimate(a, opts=opts) - 1.0)
