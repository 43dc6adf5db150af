"""Hurwitz zeta, periodic zeta and their symmetric pair sums.

Routes
------
``hurwitz_zeta``
    Euler-Maclaurin summation for ``Re s >= -1.5``; below that Hurwitz's
    formula maps the value onto periodic zeta values with ``Re(1-s) > 2.5``,
    which avoids the cancellation EM suffers for negative ``Re s``.  Shifts
    within 0.01 of 0 or 1 use a Taylor expansion about a = 1 instead, since
    the periodic series needs ~1/a terms there.
``periodic_zeta``
    ``"series"``: the boundary-convergent series sum_{n>=1} e^{2 pi i n a} n^{-s}
    with its tail summed by the twisted Euler-Maclaurin (Boole) expansion,
    used for ``Re s >= 0.6``.
    ``"functional"``: Apostol's relation
    Li(s, a) = Gamma(1-s) (2 pi)^{s-1} (e^{i pi (1-s)/2} zeta(1-s, a)
    + e^{-i pi (1-s)/2} zeta(1-s, 1-a)),
    used for ``Re s < 0.6``.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .errors import DomainError, PoleError, PrecisionError
from .options import DEFAULT_OPTIONS, EvalOptions, as_shift
from .special import LOG_2PI, bernoulli_fraction, log_gamma

HURWITZ_REFLECT_BELOW = -1.5
NEAR_EDGE_SHIFT = 0.01
_TAYLOR_MAX = 200
_MAX_SERIES_TERMS = 1 << 21
LI_SERIES_FROM = 0.6
_EPS = np.finfo(float).eps
_TWISTED_TERMS = 30
_MAX_ESCALATIONS = 3


@lru_cache(maxsize=None)
def _em_coefficients() -> np.ndarray:
    # B_{2k} / (2k)! for k = 1..31
    return np.array(
        [float(bernoulli_fraction(2 * k) / math.factorial(2 * k)) for k in range(1, 32)]
    )


def _expm1_over(w: complex) -> complex:
    """(e^w - 1) / w, accurate near w = 0."""
    if abs(w) < 1e-4:
        return 1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0
    return (cmath.exp(w) - 1.0) / w


def _em_hurwitz(s: complex, a: float, n_terms: int, order: int, regular: bool):
    """One Euler-Maclaurin pass.  Returns (value, error estimate).

    With ``regular=True`` the pole part 1/(s-1) is removed, leaving an entire
    function of s.
    """
    n = np.arange(n_terms, dtype=float) + a
    terms = np.exp(-s * np.log(n))
    head = terms.sum()
    x = n_terms + a
    log_x = math.log(x)
    x_s = cmath.exp(-s * log_x)
    if regular:
        pole = -log_x * _expm1_over((1.0 - s) * log_x)
    else:
        pole = x * x_s / (s - 1.0)
    total = head + pole + 0.5 * x_s
    coeffs = _em_coefficients()
    p = s * x_s / x
    inv_x2 = 1.0 / (x * x)
    for k in range(1, order + 1):
        total += coeffs[k - 1] * p
        p *= (s + 2 * k - 1) * (s + 2 * k) * inv_x2
    sigma = s.real + 2 * order + 1
    growth = abs(s + 2 * order + 1) / sigma if sigma > 0 else 1e3
    err = abs(coeffs[order] * p) * max(1.0, growth)
    err += 4 * _EPS * (np.abs(terms).sum() + abs(pole))
    return total, err


def _auto_terms(s: complex) -> int:
    return max(int(math.ceil(abs(s.imag) / 2.0)), 20)


def _hurwitz_em(s: complex, a: float, opts: EvalOptions, regular: bool = False):
    order = opts.em_correction_order
    if opts.em_terms != "auto":
        return _em_hurwitz(s, a, opts.em_terms, order, regular)
    n_terms = _auto_terms(s)
    best = _em_hurwitz(s, a, n_terms, order, regular)
    for _ in range(_MAX_ESCALATIONS):
        if best[1] <= opts.target_abs_err * max(1.0, abs(best[0])):
            break
        n_terms *= 2
        trial = _em_hurwitz(s, a, n_terms, order, regular)
        # for Re s < 0 a longer head only adds rounding
        if trial[1] >= best[1]:
            break
        best = trial
    return best


def _pair_shift(a: float) -> float:
    return 1.0 if a == 1.0 else 1.0 - a


def _hurwitz(s: complex, a: float, opts: EvalOptions, regular: bool = False):
    if s.real >= HURWITZ_REFLECT_BELOW:
        return _hurwitz_em(s, a, opts, regular)
    if 0.0 < min(a, 1.0 - a) < NEAR_EDGE_SHIFT:
        value, err = _hurwitz_near_one(s, a, opts)
        if regular:
            value -= 1.0 / (s - 1.0)
        return value, err
    # Hurwitz's formula: continuation through Li(1-s, .) with Re(1-s) > 4.5
    w = 1.0 - s
    base = log_gamma(w) - w * LOG_2PI
    e_minus = cmath.exp(base - 0.5j * math.pi * w)
    e_plus = cmath.exp(base + 0.5j * math.pi * w)
    li_a, err_a = _li(w, a, opts)
    li_b, err_b = _li(w, _pair_shift(a), opts)
    value = e_minus * li_a + e_plus * li_b
    err = abs(e_minus) * err_a + abs(e_plus) * err_b + 4 * _EPS * abs(value)
    if regular:
        value -= 1.0 / (s - 1.0)
    return value, err


def _hurwitz_near_one(s: complex, a: float, opts: EvalOptions):
    """zeta(s, 1 + h) = sum_k (s)_k (-h)^k / k! zeta(s + k), with h = a - 1 or h = a.

    Terms fall off like (2 pi |h|)^k / k! once k passes |s|.
    """
    if a > 0.5:
        h, value = a - 1.0, 0j
    else:
        h, value = a, cmath.exp(-s * math.log(a))
    err = 0.0
    coef = 1.0 + 0j
    for k in range(_TAYLOR_MAX):
        w = s + k
        if w == 1.0:
            # integer s: the zero factor (s + k - 1) meets the pole of
            # residue 1, leaving the coefficient without that factor
            value += coef * -h / k
            break
        if k:
            coef *= -(s + k - 1) * h / k
        if coef == 0:
            break
        z, e = _hurwitz(w, 1.0, opts)
        term = coef * z
        value += term
        err += abs(coef) * e
        if k > abs(s) and abs(term) < _EPS * abs(value):
            break
    return value, err + 4 * _EPS * abs(value)


def hurwitz_zeta(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Analytic continuation of sum_{n>=0} (n + a)^{-s}, for 0 < a <= 1.

    Raises
    ------
    PoleError
        At the simple pole s = 1.
    """
    s = complex(s)
    a = as_shift(a)
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a simple pole at s = 1")
    return complex(_hurwitz(s, a, opts)[0])


def hurwitz_zeta_with_error(s, a, opts: EvalOptions = DEFAULT_OPTIONS):
    s = complex(s)
    a = as_shift(a)
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a simple pole at s = 1")
    return _hurwitz(s, a, opts)


def hurwitz_zeta_regular(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """The entire function zeta(s, a) - 1/(s - 1); equals -digamma(a) at s = 1."""
    return complex(_hurwitz(complex(s), as_shift(a), opts, regular=True)[0])


@lru_cache(maxsize=256)
def _twisted_coefficients(a: float) -> tuple:
    """d_k with sum_{n>=0} z^n f(N+n) ~ sum_k (s)_k N^{-s-k} d_k for f(x) = x^{-s}.

    d_0 = 1/(1-z); for k >= 1, binom(-s, k) Li_{-k}(z) = (s)_k d_k and
    Li_{-k}(e^{2 pi i a}) = k! (2 pi i)^{-k-1} (zeta(k+1, 1-a) + (-1)^{k+1} zeta(k+1, a)).
    """
    z = cmath.exp(2j * math.pi * a)
    coeffs = [1.0 / (1.0 - z)]
    for k in range(1, _TWISTED_TERMS + 1):
        zk = complex(k + 1)
        h_pos = _em_hurwitz(zk, 1.0 - a, 40, 12, False)[0].real
        h_neg = _em_hurwitz(zk, a, 40, 12, False)[0].real
        bracket = h_pos + (-1) ** (k + 1) * h_neg
        coeffs.append((-1) ** k * (2j * math.pi) ** (-(k + 1)) * bracket)
    return tuple(coeffs)


def _twisted_series(s: complex, a: float, opts: EvalOptions):
    """sum_{n>=1} e^{2 pi i n a} n^{-s} for 0 < a < 1, any s (accurate for Re s >= 0.6)."""
    a_star = min(a, 1.0 - a)
    if opts.em_terms != "auto":
        n_terms = opts.em_terms
    else:
        n_terms = max(20, int(math.ceil(4.0 * (abs(s) + _TWISTED_TERMS) / (2 * math.pi * a_star))))
        if n_terms > _MAX_SERIES_TERMS:
            raise PrecisionError(f"periodic series needs {n_terms} terms at a = {a}")
    n = np.arange(1, n_terms, dtype=float)
    phase = np.exp(2j * np.pi * np.mod(n * a, 1.0))
    terms = phase * np.exp(-s * np.log(n))
    head = terms.sum()
    d = _twisted_coefficients(a)
    log_n = math.log(n_terms)
    p = cmath.exp(-s * log_n)
    z_n = cmath.exp(2j * math.pi * math.fmod(n_terms * a, 1.0))
    tail = 0j
    last = 0.0
    # |d_k| <= 2 (2 pi a_star)^{-k-1}; d_k vanishes for even k when a = 1/2
    scale = 1.0 / (2 * math.pi * a_star)
    bound = scale
    for k, dk in enumerate(d):
        term = p * dk
        tail += term
        bound *= scale
        last = 2.0 * abs(p) * bound
        if k >= 2 and last < 1e-17 * (abs(head) + 1.0):
            break
        p *= (s + k) / n_terms
    value = head + z_n * tail
    err = last + 4 * _EPS * np.abs(terms).sum()
    return value, err


def _apostol(s: complex, a: float, opts: EvalOptions):
    """Li(s, a) via zeta(1-s, a) and zeta(1-s, 1-a); entire in s for 0 < a < 1."""
    w = 1.0 - s
    base = log_gamma(w) + (s - 1.0) * LOG_2PI
    if abs(s) < 1.0:
        # zeta(1-s, .) has its pole at s = 0; the two pole parts combine to
        # -2 sin(pi s / 2) / s, which is regular.
        za, ea = _hurwitz(w, a, opts, regular=True)
        zb, eb = _hurwitz(w, 1.0 - a, opts, regular=True)
        e_plus = cmath.exp(0.5j * math.pi * w)
        e_minus = cmath.exp(-0.5j * math.pi * w)
        pole = -math.pi if s == 0 else -2.0 * cmath.sin(0.5 * math.pi * s) / s
        c = cmath.exp(base)
        value = c * (e_plus * za + e_minus * zb + pole)
        err = abs(c) * (abs(e_plus) * ea + abs(e_minus) * eb)
    else:
        za, ea = _hurwitz(w, a, opts)
        zb, eb = _hurwitz(w, 1.0 - a, opts)
        e_plus = cmath.exp(base + 0.5j * math.pi * w)
        e_minus = cmath.exp(base - 0.5j * math.pi * w)
        value = e_plus * za + e_minus * zb
        err = abs(e_plus) * ea + abs(e_minus) * eb
    return value, err + 4 * _EPS * abs(value)


def _li(s: complex, a: float, opts: EvalOptions, route: str = "auto"):
    if a == 1.0:
        if s == 1.0:
            raise PoleError("periodic_zeta(s, 1) = zeta(s) has a pole at s = 1")
        return _hurwitz(s, 1.0, opts)
    if route == "auto":
        route = "series" if s.real >= LI_SERIES_FROM else "functional"
    if route == "series":
        return _twisted_series(s, a, opts)
    if route == "functional":
        return _apostol(s, a, opts)
    raise ValueError(f"unknown route {route!r}")


def periodic_zeta(s, a, opts: EvalOptions = DEFAULT_OPTIONS, route: str = "auto") -> complex:
    """Analytic continuation of Li(s, a) = sum_{n>=1} e^{2 pi i n a} n^{-s}.

    Entire in s for 0 < a < 1.  ``a = 1`` gives the Riemann zeta function.
    ``route`` forces ``"series"`` or ``"functional"`` instead of the automatic
    choice by ``Re s``.
    """
    return complex(_li(complex(s), as_shift(a), opts, route)[0])


def periodic_zeta_with_error(s, a, opts: EvalOptions = DEFAULT_OPTIONS, route: str = "auto"):
    return _li(complex(s), as_shift(a), opts, route)


def _z_pair(s: complex, a: float, opts: EvalOptions):
    v1, e1 = _hurwitz(s, a, opts)
    v2, e2 = _hurwitz(s, _pair_shift(a), opts)
    return v1 + v2, e1 + e2


def _sinpi(z: complex) -> complex:
    """sin(pi z) with the real part reduced first, exact zero at integers."""
    n = round(z.real)
    v = cmath.sin(math.pi * complex(z.real - n, z.imag))
    return -v if n % 2 else v


def _apostol_pair(s: complex, a: float, opts: EvalOptions):
    """Li(s, a) + Li(s, 1-a) = 2 Gamma(1-s) (2 pi)^{s-1} sin(pi s / 2) Z(1-s, a).

    Summing the two Apostol relations first cancels their opposite phases
    analytically; at s = -2k the pair vanishes exactly.
    """
    w = 1.0 - s
    c = 2.0 * cmath.exp(log_gamma(w) + (s - 1.0) * LOG_2PI)
    sin_half = _sinpi(0.5 * s)
    if abs(s) < 1.0:
        # Z(1-s) carries -2/s; keep sin(pi s/2)/s together
        za, ea = _hurwitz(w, a, opts, regular=True)
        zb, eb = _hurwitz(w, _pair_shift(a), opts, regular=True)
        pole = -0.5 * math.pi if s == 0 else -sin_half / s
        value = c * (sin_half * (za + zb) + 2.0 * pole)
        err = abs(c) * abs(sin_half) * (ea + eb)
    else:
        za, ea = _hurwitz(w, a, opts)
        zb, eb = _hurwitz(w, _pair_shift(a), opts)
        value = c * sin_half * (za + zb)
        err = abs(c * sin_half) * (ea + eb)
    return value, err + 4 * _EPS * abs(value)


def _p_pair(s: complex, a: float, opts: EvalOptions, route: str = "auto"):
    if a != 1.0 and (route == "functional" or (route == "auto" and s.real < LI_SERIES_FROM)):
        return _apostol_pair(s, a, opts)
    v1, e1 = _li(s, a, opts, route)
    v2, e2 = _li(s, _pair_shift(a), opts, route)
    return v1 + v2, e1 + e2


def z_pair(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Z(s, a) = zeta(s, a) + zeta(s, 1 - a); simple pole at s = 1 with residue 2."""
    s = complex(s)
    a = as_shift(a)
    if s == 1.0:
        raise PoleError("z_pair has a simple pole at s = 1")
    return complex(_z_pair(s, a, opts)[0])


def p_pair(s, a, opts: EvalOptions = DEFAULT_OPTIONS, route: str = "auto") -> complex:
    """P(s, a) = Li(s, a) + Li(s, 1 - a)."""
    s = complex(s)
    a = as_shift(a)
    if s == 1.0 and a in (0.5, 1.0):
        raise PoleError("p_pair has a pole at s = 1 for a in {1/2, 1}")
    return complex(_p_pair(s, a, opts, route)[0])


def p_pair_via_functional_equation(s, a, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Cross-check route P(s, a) = (2 pi)^s Z(1 - s, a) / (2 Gamma(s) cos(pi s / 2)).

    Raises
    ------
    DomainError
        Within 1e-4 of an odd integer (zero of the cosine) or of a pole of Gamma.
    """
    s = complex(s)
    a = as_shift(a)
    nearest_odd = 2 * round((s.real - 1) / 2) + 1
    if abs(s - nearest_odd) < 1e-4:
        raise DomainError("cross-check route undefined near odd integers")
    if s.real <= 0 and abs(s - round(s.real)) < 1e-4:
        raise DomainError("cross-check route undefined near poles of Gamma")
    if s == 0.0:
        raise DomainError("cross-check route undefined at s = 0")
    z = _z_pair(1.0 - s, a, opts)[0]
    denom = 2.0 * cmath.cos(0.5 * math.pi * s)
    return z * cmath.exp(s * LOG_2PI - log_gamma(s)) / denom


def approx_hurwitz_critical(tau: float, a, x_cut: float) -> complex:
    """Truncated sum sum_{0 <= n <= x} (n + a)^{-1/2 - i tau}, valid for 2 pi <= |tau| <= pi x."""
    a = as_shift(a)
    tau = float(tau)
    if not 2 * math.pi <= abs(tau) <= math.pi * x_cut:
        raise DomainError("approximate functional equation needs 2 pi <= |tau| <= pi x")
    n = np.arange(int(math.floor(x_cut)) + 1, dtype=float) + a
    return complex(np.exp(-(0.5 + 1j * tau) * np.log(n)).sum())


def approx_li_critical(tau: float, a, x_cut: float) -> complex:
    """Truncated sum sum_{1 <= n <= x} e^{2 pi i a n} n^{-1/2 - i tau}, valid for |tau| <= pi a x."""
    a = as_shift(a)
    tau = float(tau)
    if not abs(tau) <= math.pi * a * x_cut:
        raise DomainError("approximate functional equation needs |tau| <= pi a x")
    n = np.arange(1, int(math.floor(x_cut)) + 1, dtype=float)
    phase = np.exp(2j * np.pi * np.mod(n * a, 1.0))
    return complex((phase * np.exp(-(0.5 + 1j * tau) * np.log(n))).sum())
