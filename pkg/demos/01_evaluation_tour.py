"""A first look at Q(s, a).

Q(s, a) averages the Hurwitz and periodic zeta functions at the shifts a and
1 - a.  Run with ``python demos/01_evaluation_tour.py``.
"""

import math

import numpy as np

from qzeta import (
    chi_factor,
    fe_residual,
    find_a0,
    hardy_z,
    q_eval,
    quadrilateral_zeta,
    real_zeros_unit_interval,
    xi_completed,
)

# %% Plain values
# At a = 1/2 all four constituents are built from the Riemann zeta function,
# so Q(2, 1/2) = (4 + 1/2 - 2) zeta(2).
print("Q(2, 1/2)      =", quadrilateral_zeta(2, 0.5))
print("2.5 * pi^2 / 6 =", 2.5 * math.pi**2 / 6)

point = q_eval(0.5 + 14j, 0.3)
print("Q(1/2 + 14i, 0.3) =", point.value, " error estimate", point.abs_err_est)

# %% Q at 0 and at the negative even integers
for a in (0.05, 0.2, 0.5):
    print(f"a={a}: Q(0)={quadrilateral_zeta(0, a).real:+.15f}",
          " |Q(-2)|, |Q(-4)| =", abs(quadrilateral_zeta(-2, a)), abs(quadrilateral_zeta(-4, a)))

# %% The functional equation
# Q(1 - s) = chi(s) Q(s) with the same factor as for zeta(s).
s = -1.25 + 7j
lhs = quadrilateral_zeta(1 - s, 0.3)
rhs = chi_factor(s) * quadrilateral_zeta(s, 0.3)
print("Q(1-s) =", lhs)
print("chi Q  =", rhs)
print("relative residual", fe_residual(s, 0.3))

# the completed function is symmetric, and real on the critical line
print("xi(0.3+2i), xi(0.7-2i):", xi_completed(0.3 + 2j, 0.25), xi_completed(0.7 - 2j, 0.25))
print("xi(1/2 + 5i) =", xi_completed(0.5 + 5j, 0.25))

# %% A real-valued function on the critical line
ts = np.linspace(0, 30, 7)
print("Z(t) at a=0.3:", np.round([hardy_z(t, 0.3) for t in ts], 6))

# %% The critical shift
# For small a, Q(sigma, a) has real zeros in (0, 1).  They merge into a
# double zero at sigma = 1/2 when a reaches a0, and vanish above it.
a0 = find_a0()
print("a0 =", a0, " Q(1/2, a0) =", quadrilateral_zeta(0.5, a0))
for a in (0.05, 0.10, 0.3):
    print(f"real zeros in (0,1) at a={a}:", np.round(real_zeros_unit_interval(a), 6))
