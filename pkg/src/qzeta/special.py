"""Complex log-gamma, even Bernoulli numbers and the Riemann-Siegel phase."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import PoleError, RangeError

LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)
HALF_LOG_2PI = 0.5 * LOG_2PI

#: Stirling series is used once the argument has been shifted to |z| >= this.
STIRLING_RADIUS = 12.0
_STIRLING_TERMS = 12


@lru_cache(maxsize=None)
def _bernoulli_table(nmax: int = 64) -> tuple:
    # B_0..B_nmax as exact rationals from sum_{j<=n} C(n+1, j) B_j = 0.
    b = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        binom = 1  # C(n+1, j)
        for j in range(n):
            acc += binom * b[j]
            binom = binom * (n + 1 - j) // (j + 1)
        b.append(-acc / (n + 1))
    return tuple(b)


def bernoulli_fraction(n: int) -> Fraction:
    """Exact Bernoulli number B_n (convention B_1 = -1/2), 0 <= n <= 64."""
    if not 0 <= n <= 64:
        raise RangeError(f"Bernoulli index {n} outside [0, 64]")
    return _bernoulli_table()[n]


def bernoulli_even(m: int) -> float:
    """Return B_{2m} rounded to the nearest double, for 1 <= m <= 30."""
    if not isinstance(m, int) or not 1 <= m <= 30:
        raise RangeError(f"bernoulli_even index must be an integer in [1, 30], got {m!r}")
    return float(_bernoulli_table()[2 * m])


@lru_cache(maxsize=None)
def _stirling_coefficients() -> tuple:
    # B_{2k} / (2k (2k-1))
    return tuple(
        float(bernoulli_fraction(2 * k) / (2 * k * (2 * k - 1)))
        for k in range(1, _STIRLING_TERMS + 1)
    )


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z).

    The argument is shifted upward by the recurrence until ``Re z > 0`` and
    ``|z| >= 12``, then the Stirling series is summed.  Each shift contributes
    a principal logarithm, which makes the result analytic off the negative
    real axis and continuous along every vertical line with ``Re z > 0``.
    On the negative real axis the limit from the upper half-plane is returned.

    Raises
    ------
    PoleError
        If ``z`` is 0 or a negative integer.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma has a pole at z = {z.real:g}")
    if z.imag == 0.0:
        # keep the +0j sign so that negative reals take the upper limit
        z = complex(z.real, 0.0)
    shift = 0j
    w = z
    while w.real <= 0.0 or abs(w) < STIRLING_RADIUS:
        shift += cmath.log(w)
        w += 1.0
    inv = 1.0 / w
    inv2 = inv * inv
    series = 0j
    power = inv
    for c in _stirling_coefficients():
        series += c * power
        power *= inv2
    return (w - 0.5) * cmath.log(w) - w + HALF_LOG_2PI + series - shift


def gamma(z) -> complex:
    """Gamma(z) as exp(log_gamma(z)); raises PoleError at the poles."""
    return cmath.exp(log_gamma(z))


def log_gamma_factor(s) -> complex:
    """log of pi^{-s/2} Gamma(s/2), the archimedean factor of the completed function."""
    s = complex(s)
    return -0.5 * s * LOG_PI + log_gamma(0.5 * s)


def rs_theta(t: float) -> float:
    """Riemann-Siegel phase theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.

    ``exp(i theta(t)) * F(1/2 + it)`` is real whenever ``pi^{-s/2} Gamma(s/2) F(s)``
    is real on the critical line.  Oddness in ``t`` holds exactly.
    """
    t = float(t)
    if t == 0.0:
        return 0.0
    u = abs(t)
    value = log_gamma(complex(0.25, 0.5 * u)).imag - 0.5 * u * LOG_PI
    return value if t > 0 else -value
