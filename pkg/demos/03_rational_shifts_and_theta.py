"""Rational shifts through Dirichlet characters, and the theta integral.

Run with ``python demos/03_rational_shifts_and_theta.py``.
"""

import math

from qzeta import (
    enumerate_characters,
    g_theta,
    gauss_sum,
    integral_xi,
    modular_residual,
    q_decompose,
    q_decompose_single_modulus,
    q_eval,
    xi_completed,
)

# %% Characters mod 12
for chi in enumerate_characters(12):
    print([round(chi(n).real) for n in range(12)], "parity", chi.parity, "primitive", chi.is_primitive)

chi = [c for c in enumerate_characters(7) if c.is_primitive][0]
print("|G(1, chi)| for a primitive character mod 7:", abs(gauss_sum(1, chi)), " sqrt 7 =", math.sqrt(7))

# %% Q(s, r/q) as a sum over divisors and characters
s = 0.5 + 5j
for r, q in ((1, 4), (2, 7), (5, 12)):
    print(f"r/q={r}/{q}: decomposed {q_decompose(s, (r, q)):.12f}  direct {q_eval(s, r / q).value:.12f}")

# using only the characters mod q misses the terms with gcd(n, q) > 1;
# for prime q the gap is q^{-s} zeta(s)
print("gap at 1/5:", q_decompose(2, (1, 5)) - q_decompose_single_modulus(2, (1, 5)),
      " 5^-2 zeta(2) =", math.pi**2 / 6 / 25)

# %% The theta function and its modular relation
for u in (0.2, 1.0, 3.0):
    g = g_theta(u, 0.3)
    print(f"G({u}) = {g.value:.15f} from {g.truncation_n + 1} terms, modular residual {modular_residual(u, 0.3):.1e}")

# %% xi as a Mellin integral of the theta function
for s in (0.2, 0.5 + 1j, 0.8 + 5j):
    print(f"s={s}: integral {integral_xi(s, 0.3):.12f}  xi {xi_completed(s, 0.3):.12f}")
