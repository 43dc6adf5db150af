"""Theta series G_a(u) and the Mellin-type integral for the completed function.

    G_a(u) = sum_{n in Z} exp(-pi u^2 (n + a)^2) + exp(-pi u^2 n^2 + 2 pi i n a)

obeys G_a(u) = G_a(1/u) / u, and for 0 < Re s < 1

    pi^{-s/2} Gamma(s/2) Q(s, a) = int_0^inf u^{-s} (G_a(u) - 1 - 1/u) du.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad_vec

from .errors import DomainError, QuadratureError
from .options import DEFAULT_OPTIONS, EvalOptions
from .quadzeta import q_shift

#: first omitted term of every theta sum is below this.
TRUNCATION = 1e-18
_LOG_TRUNCATION = -math.log(TRUNCATION)


@dataclass(frozen=True)
class ThetaValue:
    u: float
    a: float
    value: float
    truncation_n: int


def _truncation_index(decay: float) -> int:
    # smallest N with exp(-pi * decay * N^2) < TRUNCATION
    return int(math.ceil(math.sqrt(_LOG_TRUNCATION / (math.pi * decay)))) + 1


def g_theta(u: float, a, opts: EvalOptions = DEFAULT_OPTIONS) -> ThetaValue:
    """G_a(u) by direct truncated summation, u > 0."""
    u = float(u)
    if not u > 0:
        raise DomainError("G_a(u) needs u > 0")
    a = q_shift(a)
    u2 = u * u
    n_max = _truncation_index(u2)
    n = np.arange(0, n_max + 1, dtype=float)
    shifted = np.exp(-np.pi * u2 * (n + a) ** 2) + np.exp(-np.pi * u2 * (n + 1.0 - a) ** 2)
    k = n[1:]
    twisted = 1.0 + 2.0 * np.sum(np.exp(-np.pi * u2 * k * k) * np.cos(2 * np.pi * k * a))
    # sum small terms first
    value = float(np.sum(shifted[::-1]) + twisted)
    return ThetaValue(u, a, value, n_max)


def g_theta_complex(z: complex, a) -> complex:
    """G_a(z) for complex z with Re(z^2) > 0, by the same pairing n <-> -n."""
    z = complex(z)
    a = q_shift(a)
    z2 = z * z
    if not z2.real > 0:
        raise DomainError("complex theta needs Re(z^2) > 0")
    n_max = _truncation_index(z2.real)
    n = np.arange(0, n_max + 1, dtype=float)
    shifted = np.exp(-np.pi * z2 * (n + a) ** 2) + np.exp(-np.pi * z2 * (n + 1.0 - a) ** 2)
    k = n[1:]
    twisted = 1.0 + 2.0 * np.sum(np.exp(-np.pi * z2 * k * k) * np.cos(2 * np.pi * k * a))
    return complex(np.sum(shifted[::-1]) + twisted)


def _theta_minus_one(u: float, a: float) -> float:
    """G_a(u) - 1 for u >= 1 without forming G_a(u) first."""
    u2 = u * u
    n_max = _truncation_index(u2)
    n = np.arange(0, n_max + 1, dtype=float)
    shifted = np.exp(-np.pi * u2 * (n + a) ** 2) + np.exp(-np.pi * u2 * (n + 1.0 - a) ** 2)
    k = n[1:]
    twisted = 2.0 * np.sum(np.exp(-np.pi * u2 * k * k) * np.cos(2 * np.pi * k * a))
    return float(np.sum(shifted[::-1]) + twisted)


def integral_xi(s, a, opts: EvalOptions = DEFAULT_OPTIONS, return_error: bool = False):
    """Quadrature of int_0^inf u^{-s} (G_a(u) - 1 - 1/u) du for 0 < Re s < 1.

    The range is split at u = 1:

        xi = int_0^1 v^{-s} (G(v) - 1/v) dv + int_1^inf v^{-s} (G(v) - 1 - 1/v) dv + 1/(s - 1)

    On (0, 1) the modular relation gives G(v) - 1/v = (G(1/v) - 1) / v, and the
    unbounded piece is mapped to (0, 1] by v -> 1/w, its 1/v part integrated
    in closed form (-1/s).  Both integrands then decay like exp(-pi a^2 / w^2)
    at w = 0.

    Raises
    ------
    DomainError
        Outside the strip or for |Im s| above ``opts.max_im_for_quadrature``.
    QuadratureError
        If the estimated quadrature error exceeds 1e-9.
    """
    s = complex(s)
    a = q_shift(a)
    if not 0.0 < s.real < 1.0:
        raise DomainError("integral representation needs 0 < Re s < 1")
    if abs(s.imag) > opts.max_im_for_quadrature:
        raise DomainError("|Im s| exceeds max_im_for_quadrature")

    def integrand(w):
        if w <= 0.0:
            return np.zeros(4)
        h = _theta_minus_one(1.0 / w, a)
        log_w = math.log(w)
        lower = cmath.exp((-s - 1.0) * log_w) * h  # v^{-s} (G(v) - 1/v) on (0, 1)
        upper = cmath.exp((s - 2.0) * log_w) * h  # v^{-s} (G(v) - 1) on (1, inf), v = 1/w
        return np.array([lower.real, lower.imag, upper.real, upper.imag])

    values, err = quad_vec(
        integrand, 0.0, 1.0, epsabs=1e-14, epsrel=opts.quad_rel_tol, norm="max", limit=400
    )
    if err > 1e-9:
        raise QuadratureError(f"integral_xi error estimate {err:.3e} exceeds 1e-9")
    lower = complex(values[0], values[1])
    upper = complex(values[2], values[3]) - 1.0 / s
    result = lower + upper + 1.0 / (s - 1.0)
    if return_error:
        return result, float(err)
    return result


def modular_residual(u: float, a) -> float:
    """|G_a(u) - G_a(1/u) / u|, relative to max(1, |G_a(u)|)."""
    g = g_theta(u, a).value
    g_inv = g_theta(1.0 / u, a).value
    return abs(g - g_inv / u) / max(1.0, abs(g))
