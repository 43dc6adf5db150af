"""Zeros of Q(s, a): critical-line scanning, contour counts, window integrals.

Run with ``python demos/02_zeros_on_the_line.py`` (about a minute).
"""

import math

import numpy as np

from qzeta import (
    WindowParams,
    count_argument_principle,
    count_lower_bound_profile,
    detect_zeros_by_windows,
    main_term,
    scan_critical_line,
    window_report,
)

a = 0.3

# %% Sign changes of the Hardy function
zeros = scan_critical_line(a, 0, 60)
print(f"{len(zeros)} zeros with 0 < t <= 60 at a={a}")
print("first few ordinates:", [round(z.t, 8) for z in zeros[:6]])
print("largest residual |Q|:", max(z.residual for z in zeros))

# %% Every zero up to height T versus the density formula
report = count_argument_principle(a, 100)
print(f"argument principle, |Im s| < 100: {report.n_nonreal} non-real zeros")
print(f"main term {main_term(100, a):.2f}, discrepancy {report.discrepancy:+.2f}, 12 log T = {12 * math.log(100):.1f}")
print("of which on the critical line:", report.n_critical_line)

# the line count grows at least linearly
for T, count, ratio in count_lower_bound_profile(a, [50, 100, 150]):
    print(f"T={T:5.0f}: {count:4d} zeros on the line, count/T = {ratio:.3f}")

# %% At a = 1/2 the zeros are known in closed form
# Q(s, 1/2) = (2^s + 2^{1-s} - 2) zeta(s): zeros of zeta plus those of the factor.
half = [z.t for z in scan_critical_line(0.5, 0, 30)]
factor = [(2 * math.pi * k + sgn * math.pi / 4) / math.log(2) for k in range(5) for sgn in (1, -1)]
print("a=1/2 ordinates:", np.round(half, 4))
print("factor zeros:   ", np.round(sorted(t for t in factor if 0 < t < 30), 4))

# %% Window integrals
# J >= |I| always; a clear gap means Q changes sign inside the window.
for t in (zeros[4].t, 0.5 * (zeros[4].t + zeros[5].t)):
    r = window_report(WindowParams(t, 0.2, 0.5, a))
    print(f"window at t={t:.3f}: |I|={r.i_abs:.3e} J={r.j_val:.3e} -> {r.verdict}")

sweep = detect_zeros_by_windows(a, 10, 40, k=0.5, delta=0.5)
hits = [r.params.t for r in sweep if r.verdict == "zero_detected"]
print(f"{len(hits)} of {len(sweep)} windows on [10, 40] report a zero")
