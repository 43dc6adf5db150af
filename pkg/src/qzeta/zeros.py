"""Zeros of Q(s, a): critical-line scanning, real zeros in (0, 1), and box counts.

Critical-line zeros are sign changes of the real function ``hardy_z``.  Box
counts come from the argument principle on a rectangle symmetric about the
real axis; since Q(conj s) = conj Q(s), unwrapping the phase over the upper
half of the boundary is enough.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import BracketError, ContourError, DomainError, PrecisionError, RangeError
from .hurwitz import hurwitz_zeta
from .options import DEFAULT_OPTIONS, EvalOptions
from .quadzeta import _q, hardy_z, q_shift

RESIDUAL_BOUND = 1e-7
BISECT_WIDTH = 1e-9
SCAN_T_MAX = 500.0
COUNT_T_MAX = 200.0
DEFAULT_BOX = (-5.0, 6.0)
A0_BRACKET = (0.05, 0.3)

_NUDGE_STEP = 0.0025
_NUDGE_MAX = 0.01
_CONTOUR_FLOOR = 1e-6


@dataclass(frozen=True)
class ZeroRecord:
    a: float
    t: float
    t_lo: float
    t_hi: float
    residual: float
    method: str = "sign_change"

    def validate(self) -> None:
        """Raise ValueError unless the record invariants hold."""
        if not self.t_lo < self.t < self.t_hi:
            raise ValueError(f"t = {self.t} not inside ({self.t_lo}, {self.t_hi})")
        if not self.residual <= RESIDUAL_BOUND:
            raise ValueError(f"residual {self.residual:.3e} exceeds {RESIDUAL_BOUND}")
        if self.method not in ("sign_change", "window_detector"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class CountReport:
    a: float
    T: float
    n_critical_line: int
    n_argument_principle: int
    main_term: float
    box: Tuple[float, float]
    n_real: int = 0
    right_edge_certified: bool = False

    @property
    def n_nonreal(self) -> int:
        return self.n_argument_principle - self.n_real

    @property
    def discrepancy(self) -> float:
        return self.n_nonreal - self.main_term


def main_term(T: float, a: float) -> float:
    """(T/pi) log(T / (2 e pi a^2)), the leading terms of N(T)."""
    return (T / math.pi) * math.log(T / (2.0 * math.e * math.pi * a * a))


def scan_step(t: float, a: float) -> float:
    """A quarter of min(0.25, local mean zero spacing)."""
    spacing = math.pi / math.log(max(t, 10.0) / (2.0 * math.pi * a * a))
    return min(0.25, spacing) / 4.0


def scan_grid(a: float, t0: float, t1: float, refine: int = 1) -> np.ndarray:
    """Grid points on [t0, t1] with step ``scan_step / refine``."""
    pts = [t0]
    t = t0
    while t < t1:
        t = min(t1, t + scan_step(t, a) / refine)
        pts.append(t)
    return np.array(pts)


def _refine(a: float, lo: float, hi: float, z_lo: float, z_hi: float, opts: EvalOptions) -> ZeroRecord:
    """Bisection of a sign change of hardy_z down to width BISECT_WIDTH."""
    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        z_mid = hardy_z(mid, a, opts)
        if z_mid == 0.0:
            lo = hi = mid
            break
        if (z_mid > 0) == (z_lo > 0):
            lo, z_lo = mid, z_mid
        else:
            hi, z_hi = mid, z_mid
    if hi > lo and z_hi != z_lo:
        # regula falsi point inside the final bracket
        t = lo + (hi - lo) * z_lo / (z_lo - z_hi)
        t = min(max(t, lo + 0.25 * (hi - lo)), hi - 0.25 * (hi - lo))
    else:
        t = lo
        lo, hi = t - 0.5 * BISECT_WIDTH, t + 0.5 * BISECT_WIDTH
    residual = abs(_q(complex(0.5, t), a, opts)[0])
    if residual > RESIDUAL_BOUND:
        raise PrecisionError(f"zero near t = {t:.12f} has residual {residual:.3e}")
    return ZeroRecord(a, float(t), float(lo), float(hi), float(residual))


def _scan_chunk(a: float, grid: np.ndarray, opts: EvalOptions) -> List[ZeroRecord]:
    values = [hardy_z(t, a, opts) for t in grid]
    out = []
    for i in range(len(grid) - 1):
        z0, z1 = values[i], values[i + 1]
        if z0 == 0.0:
            # exact grid hit, refined from both sides by a tiny bracket
            if i == 0 and grid[0] == 0.0:
                continue
            out.append(ZeroRecord(a, float(grid[i]), grid[i] - 0.5 * BISECT_WIDTH, grid[i] + 0.5 * BISECT_WIDTH, 0.0))
            continue
        if z1 != 0.0 and (z0 > 0) != (z1 > 0):
            out.append(_refine(a, float(grid[i]), float(grid[i + 1]), z0, z1, opts))
    return out


def scan_critical_line(
    a,
    t0: float,
    t1: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
    refine: int = 1,
    workers: Optional[int] = None,
) -> List[ZeroRecord]:
    """Sign changes of hardy_z on [t0, t1], each bisected to a 1e-9 bracket.

    ``refine`` divides the grid step, ``workers > 1`` fans disjoint
    sub-ranges out over processes.

    Raises
    ------
    RangeError
        Unless 0 <= t0 <= t1 <= 500.
    PrecisionError
        From hardy_z, or for a refined zero with |Q| > 1e-7.
    """
    a = q_shift(a)
    t0, t1 = float(t0), float(t1)
    if not 0.0 <= t0 <= t1 <= SCAN_T_MAX:
        raise RangeError(f"scan range must satisfy 0 <= t0 <= t1 <= {SCAN_T_MAX}")
    if t0 == t1:
        return []
    grid = scan_grid(a, t0, t1, refine)
    workers = workers or 1
    if workers == 1 or len(grid) < 64:
        return _scan_chunk(a, grid, opts)
    # neighbouring chunks share one grid point so no interval is lost
    cuts = np.linspace(0, len(grid) - 1, workers + 1).astype(int)
    chunks = [grid[cuts[i] : cuts[i + 1] + 1] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(partial(_scan_chunk, a, opts=opts), chunks))
    merged = sorted((r for part in parts for r in part), key=lambda r: r.t)
    out: List[ZeroRecord] = []
    for r in merged:
        if out and abs(r.t - out[-1].t) < 1e-8:
            continue
        out.append(r)
    return out


def count_lower_bound_profile(a, T_list: Sequence[float], opts: EvalOptions = DEFAULT_OPTIONS, zeros=None):
    """(T, count, count / T) for critical-line zeros with 0 < t <= T.

    A list of ZeroRecords covering [0, max T] may be passed to skip the scan.
    """
    T_list = [float(T) for T in T_list]
    if any(b < a_ for a_, b in zip(T_list, T_list[1:])):
        raise ValueError("T_list must be increasing")
    if zeros is None:
        zeros = scan_critical_line(a, 0.0, max(T_list), opts)
    ts = np.sort([z.t for z in zeros])
    return [(T, int(np.searchsorted(ts, T, side="right")), np.searchsorted(ts, T, side="right") / T) for T in T_list]


def _q_real(sigma: float, a: float, opts: EvalOptions) -> float:
    return _q(complex(sigma, 0.0), a, opts)[0].real


def _bisect_real(f, lo: float, hi: float, f_lo: float, tol: float = 1e-12) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _golden_extremum(f, lo: float, hi: float, maximize: bool, tol: float = 1e-9) -> float:
    g = (math.sqrt(5.0) - 1.0) / 2.0
    sign = -1.0 if maximize else 1.0
    c, d = hi - g * (hi - lo), lo + g * (hi - lo)
    fc, fd = sign * f(c), sign * f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - g * (hi - lo)
            fc = sign * f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + g * (hi - lo)
            fd = sign * f(d)
    return 0.5 * (lo + hi)


def real_zeros_unit_interval(a, opts: EvalOptions = DEFAULT_OPTIONS, step: float = 1e-3, touch_tol: float = 1e-7) -> List[float]:
    """Zeros of sigma -> Q(sigma, a) on (0, 1), with multiplicity.

    Sign changes on a grid of spacing ``step`` are bisected.  A sampled local
    extremum whose refined value is within ``touch_tol`` of zero with no
    neighbouring sign change is a double zero and is listed twice; so is a
    pair of simple zeros closer than 1e-3, which is how a double zero shows
    up once perturbed.
    """
    a = q_shift(a)
    f = partial(_q_real, a=a, opts=opts)
    n = int(round(1.0 / step))
    grid = np.arange(1, n) * step
    vals = np.array([f(x) for x in grid])
    roots: List[float] = []
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            roots.append(float(grid[i]))
        elif vals[i + 1] != 0.0 and (vals[i] > 0) != (vals[i + 1] > 0):
            roots.append(float(_bisect_real(f, grid[i], grid[i + 1], vals[i])))
    for i in range(1, len(grid) - 1):
        v0, v1, v2 = abs(vals[i - 1]), abs(vals[i]), abs(vals[i + 1])
        same_sign = (vals[i - 1] > 0) == (vals[i] > 0) == (vals[i + 1] > 0)
        if same_sign and v1 < v0 and v1 < v2:
            x = _golden_extremum(f, grid[i - 1], grid[i + 1], maximize=vals[i] < 0)
            if abs(f(x)) <= touch_tol:
                roots.extend([float(x), float(x)])
    return sorted(roots)


def double_zero_collapse(roots: Sequence[float], centre: float = 0.5, tol: float = 1e-3) -> bool:
    """True if exactly two roots are present and both lie within ``tol`` of ``centre``."""
    return len(roots) == 2 and all(abs(r - centre) <= tol for r in roots)


def find_a0(opts: EvalOptions = DEFAULT_OPTIONS, bracket: Tuple[float, float] = A0_BRACKET, width: float = 1e-8, return_bracket: bool = False):
    """Root of a -> Q(1/2, a) by bisection on ``bracket`` until its width <= ``width``.

    The returned point is the secant root of the final bracket.

    Raises
    ------
    BracketError
        If Q(1/2, a) has the same sign at both ends.
    """
    lo, hi = map(float, bracket)
    f_lo = _q_real(0.5, lo, opts)
    f_hi = _q_real(0.5, hi, opts)
    if (f_lo > 0) == (f_hi > 0):
        raise BracketError(f"Q(1/2, a) has sign {math.copysign(1, f_lo):+g} at both a = {lo} and a = {hi}")
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        f_mid = _q_real(0.5, mid, opts)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    # the secant point inside the final bracket; the slope in a is O(10), so
    # the midpoint alone would leave |Q| near 1e-7
    root = float(lo if lo == hi else lo - f_lo * (hi - lo) / (f_hi - f_lo))
    return (root, (lo, hi)) if return_bracket else root


# ---------------------------------------------------------------- contour


class _NearZero(Exception):
    pass


def _unwrap_segment(f, z0: complex, z1: complex, h0: float, floor: float) -> float:
    """Phase change of f along the segment z0 -> z1.

    Steps are halved until each phase increment is below pi/2 and allowed
    to double again after a success.
    """
    length = abs(z1 - z0)
    direction = (z1 - z0) / length
    pos = 0.0
    w_prev = f(z0)
    if abs(w_prev) < floor:
        raise _NearZero(z0)
    total = 0.0
    h = min(h0, length)
    while pos < length:
        h = min(h, length - pos)
        z = z0 + direction * (pos + h)
        w = f(z)
        if abs(w) < floor:
            raise _NearZero(z)
        d = cmath.phase(w / w_prev)
        if abs(d) >= 0.5 * math.pi:
            h *= 0.5
            if h < 1e-12 * max(1.0, length):
                raise ContourError(f"phase step did not resolve near {z}")
            continue
        total += d
        pos += h
        w_prev = w
        h *= 2.0
    return total


def _upper_half_phase(a: float, s_min: float, s_max: float, T: float, opts: EvalOptions) -> float:
    f = lambda z: _q(z, a, opts)[0]  # noqa: E731
    corners = [complex(s_max, 0.0), complex(s_max, T), complex(s_min, T), complex(s_min, 0.0)]
    return sum(_unwrap_segment(f, z0, z1, 0.1, _CONTOUR_FLOOR) for z0, z1 in zip(corners, corners[1:]))


def _real_axis_zeros(a: float, s_min: float, s_max: float, opts: EvalOptions, step: float = 0.01) -> int:
    """Real zeros in (s_min, s_max): sign changes off [0, 1], fine search inside (0, 1)."""
    count = 0
    for lo, hi in ((s_min, 0.0), (1.0 + 1e-6, s_max)):
        if hi <= lo:
            continue
        n = max(2, int(math.ceil((hi - lo) / step)) + 1)
        # irrational offset keeps the even integers off the grid
        grid = np.minimum(np.linspace(lo, hi, n) + 1e-7 * math.sqrt(2.0), hi)
        vals = [_q_real(x, a, opts) for x in grid]
        count += sum(1 for v0, v1 in zip(vals, vals[1:]) if (v0 > 0) != (v1 > 0))
    return count + len(real_zeros_unit_interval(a, opts))


def right_edge_dominance(a: float, sigma: float) -> float:
    """Lower bound a^{-sigma} - zeta(sigma, 1+a) - zeta(sigma, 1-a) - 2 zeta(sigma) for |2Q|.

    Positive means Q has no zeros with real part >= sigma.
    """
    if sigma <= 1.0:
        return -math.inf
    zeta_a = hurwitz_zeta(sigma, a).real - a ** (-sigma)  # zeta(sigma, 1 + a)
    rest = zeta_a + hurwitz_zeta(sigma, 1.0 - a).real + 2.0 * hurwitz_zeta(sigma, 1.0).real
    return a ** (-sigma) - rest


def count_argument_principle(
    a,
    T: float,
    box: Tuple[float, float] = DEFAULT_BOX,
    opts: EvalOptions = DEFAULT_OPTIONS,
    scan: bool = True,
) -> CountReport:
    """Zeros of Q(s, a) in box[0] < Re s < box[1], |Im s| < T, with multiplicity.

    Edges are nudged outward in steps of 0.0025 (at most 0.01) whenever |Q|
    drops below 1e-6 on them.  ``scan=False`` skips the critical-line count.

    Raises
    ------
    DomainError
        If the box does not contain [-1, 2] or T is not in (0, 200].
    ContourError
        If nudging cannot clear the contour.
    """
    a = q_shift(a)
    T = float(T)
    s_min, s_max = map(float, box)
    if not (s_min <= -1.0 and s_max >= 2.0):
        raise DomainError("box must contain [-1, 2]")
    if not 0.0 < T <= COUNT_T_MAX:
        raise DomainError(f"T must lie in (0, {COUNT_T_MAX}]")
    phase = None
    nudges = [k * _NUDGE_STEP for k in range(int(round(_NUDGE_MAX / _NUDGE_STEP)) + 1)]
    for d_sigma in nudges:
        for d_t in nudges:
            try:
                phase = _upper_half_phase(a, s_min - d_sigma, s_max + d_sigma, T + d_t, opts)
            except _NearZero:
                continue
            s_min, s_max, T_used = s_min - d_sigma, s_max + d_sigma, T + d_t
            break
        if phase is not None:
            break
    if phase is None:
        raise ContourError("could not move the contour away from zeros of Q")
    winding = phase / math.pi
    n_box = int(round(winding)) + 1  # the pole at s = 1 counts as -1
    if abs(winding - round(winding)) > 0.05:
        raise ContourError(f"winding number {winding:.4f} is not close to an integer")
    n_real = _real_axis_zeros(a, s_min, s_max, opts)
    n_line = 0
    if scan:
        n_line = 2 * len(scan_critical_line(a, 0.0, min(T_used, T), opts))
    return CountReport(
        a=a,
        T=T,
        n_critical_line=n_line,
        n_argument_principle=n_box,
        main_term=main_term(T, a),
        box=(s_min, s_max),
        n_real=n_real,
        right_edge_certified=bool(right_edge_dominance(a, s_max) > 0),
    )


def local_winding(a, centre: complex, half_width: float = 1e-6, opts: EvalOptions = DEFAULT_OPTIONS) -> int:
    """Zeros of Q inside the square of the given half-width around ``centre``."""
    a = q_shift(a)
    c = complex(centre)
    h = float(half_width)
    f = lambda z: _q(z, a, opts)[0]  # noqa: E731
    corners = [c + h * complex(x, y) for x, y in ((1, -1), (1, 1), (-1, 1), (-1, -1), (1, -1))]
    scale = abs(f(corners[0]))
    total = sum(_unwrap_segment(f, z0, z1, h / 2, 1e-3 * scale) for z0, z1 in zip(corners, corners[1:]))
    return int(round(total / (2.0 * math.pi)))
