import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mp_li_rational
from qzeta import (
    DomainError,
    PoleError,
    approx_hurwitz_critical,
    approx_li_critical,
    hurwitz_zeta,
    hurwitz_zeta_regular,
    p_pair,
    p_pair_via_functional_equation,
    periodic_zeta,
    z_pair,
)
from qzeta.options import ShiftParameter


def test_shift_parameter():
    sp = ShiftParameter(0.7)
    assert sp.a_star == pytest.approx(0.3) and sp.a_pair == pytest.approx(0.3)
    assert ShiftParameter(1.0).a_star == 0.0
    for bad in (0.0, -0.1, 1.2):
        with pytest.raises(DomainError):
            ShiftParameter(bad)


@pytest.mark.parametrize(
    "fid, s, a",
    [("hurwitz_2_1", 2, 1.0), ("hurwitz_2_half", 2, 0.5), ("hurwitz_0_0.3", 0, 0.3)],
)
def test_hurwitz_fixtures(fx, fid, s, a):
    assert abs(hurwitz_zeta(s, a) - fx(fid)) < 1e-10


def test_hurwitz_pole():
    with pytest.raises(PoleError):
        hurwitz_zeta(1, 0.3)
    # the regular part is finite there: -digamma(a)
    assert abs(hurwitz_zeta_regular(1, 0.3) + float(mp.digamma(0.3))) < 1e-10


def test_periodic_zeta_fixtures(fx):
    assert abs(periodic_zeta(2, 0.5) - fx("li_2_half")) < 1e-10
    assert abs(periodic_zeta(2, 1.0) - math.pi**2 / 6) < 1e-12
    s = complex(-0.5, 3)
    v_auto = periodic_zeta(s, 0.3)
    assert abs(v_auto - fx("li_m0.5p3i_0.3")) < 1e-9
    assert abs(periodic_zeta(s, 0.3, route="series") - v_auto) < 1e-9


def test_periodic_zeta_a1_pole():
    with pytest.raises(PoleError):
        periodic_zeta(1, 1.0)
    # entire for 0 < a < 1
    assert abs(periodic_zeta(1, 0.25) - complex(-math.log(2 * math.sin(math.pi / 4)), math.pi / 4)) < 1e-10


def test_pair_fixtures(fx):
    assert abs(z_pair(2, 0.5) - fx("z_2_half")) < 1e-10
    assert abs(z_pair(0, 0.3) - fx("z_0_0.3")) < 1e-12
    assert abs(p_pair(2, 0.5) - fx("p_2_half")) < 1e-10
    # P(2, 1/4) = -pi^2/24 by the direct-sum oracle
    assert abs(p_pair(2, 0.25) - fx("p_2_quarter")) < 1e-10
    assert abs(fx("p_2_quarter") + math.pi**2 / 24) < 1e-11
    for s in (1.5, 2.5, 7.0):
        assert p_pair(s, 0.2).imag == pytest.approx(0.0, abs=1e-14)


def test_z_pair_half_symmetry():
    for s in (2, 0.5 + 3j, -2.5 + 1j):
        assert abs(z_pair(s, 0.5) - 2 * hurwitz_zeta(s, 0.5)) < 1e-12 * max(1, abs(z_pair(s, 0.5)))


def test_pair_poles():
    for a in (0.5, 1.0):
        with pytest.raises(PoleError):
            p_pair(1, a)
    with pytest.raises(PoleError):
        z_pair(1, 0.3)
    assert np.isfinite(abs(p_pair(1, 0.3)))


rational = st.sampled_from([(1, 3), (1, 4), (1, 5), (2, 5), (3, 7), (3, 10), (5, 12), (1, 8)])


@settings(max_examples=60, deadline=None)
@given(rational, st.floats(-6, 6), st.floats(-80, 80))
def test_periodic_zeta_against_mpmath(rq, sigma, t):
    r, q = rq
    s = complex(sigma, t)
    ref = mp_li_rational(s, r, q)
    assert abs(periodic_zeta(s, r / q) - ref) <= 1e-9 * max(1.0, abs(ref))


@settings(max_examples=60, deadline=None)
@given(st.floats(0.02, 1.0), st.floats(-8, 8), st.floats(-100, 100))
def test_hurwitz_against_mpmath(a, sigma, t):
    s = complex(sigma, t)
    if abs(s - 1) < 1e-6:
        return
    ref = complex(mp.zeta(mp.mpc(s), a))
    assert abs(hurwitz_zeta(s, a) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_hurwitz_large_height():
    for t in (250.0, 500.0):
        s = complex(0.5, t)
        ref = complex(mp.zeta(mp.mpc(s), 0.3))
        assert abs(hurwitz_zeta(s, 0.3) - ref) < 1e-10


def test_hurwitz_very_negative_real_part():
    # huge values: the budget is relative
    for s in (-50 + 0j, -30 + 20j, -45.5 + 3j):
        ref = complex(mp.zeta(mp.mpc(s), 0.3))
        assert abs(hurwitz_zeta(s, 0.3) - ref) <= 1e-10 * abs(ref)


def test_periodic_zeta_large_height():
    for t in (200.0, 500.0):
        s = complex(0.5, t)
        assert abs(periodic_zeta(s, 0.3) - mp_li_rational(s, 3, 10)) < 1e-9


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(-5, 5), st.floats(0.1, 60))
def test_schwarz_reflection(a, sigma, t):
    s = complex(sigma, t)
    for f in (hurwitz_zeta, z_pair, p_pair):
        v = f(s, a)
        assert abs(f(s.conjugate(), a) - v.conjugate()) <= 1e-11 * max(1.0, abs(v))
    # periodic zeta has complex coefficients: conjugation also swaps a and 1 - a
    v = periodic_zeta(s, a)
    assert abs(periodic_zeta(s.conjugate(), 1.0 - a) - v.conjugate()) <= 1e-11 * max(1.0, abs(v))


def test_periodic_zeta_not_self_conjugate():
    s, a = 1j, 0.75
    assert abs(periodic_zeta(s.conjugate(), a) - periodic_zeta(s, a).conjugate()) > 0.1


def test_route_overlap_band():
    rng = np.random.default_rng(7)
    for _ in range(100):
        s = complex(rng.uniform(0.6, 1.5), rng.uniform(-40, 40))
        a = rng.uniform(0.05, 0.95)
        v1 = periodic_zeta(s, a, route="series")
        v2 = periodic_zeta(s, a, route="functional")
        if min(abs(s - 1), abs(s - 2)) < 1e-2:
            continue
        assert abs(v1 - v2) <= 1e-8 * max(1.0, abs(v1))


def test_p_pair_cross_check_route():
    rng = np.random.default_rng(11)
    for _ in range(100):
        s = complex(rng.uniform(-3, 4), rng.uniform(-30, 30))
        a = rng.uniform(0.05, 0.5)
        try:
            alt = p_pair_via_functional_equation(s, a)
        except DomainError:
            continue
        v = p_pair(s, a)
        assert abs(v - alt) <= 1e-8 * max(1.0, abs(v))
    with pytest.raises(DomainError):
        p_pair_via_functional_equation(3.00001, 0.3)


def test_hurwitz_recurrence():
    for s in (2.0, 2.5 + 3j, 4 - 7j):
        for a in (0.1, 0.5, 0.9):
            tail = hurwitz_zeta(s, a) - a ** (-s)
            n = np.arange(1, 200001) + a
            direct = np.sum(n ** (-s))
            # integral tail beyond n = 200000 + a, plus its midpoint correction
            x = 200001 + a
            direct += x ** (1 - s) / (s - 1) + 0.5 * x ** (-s)
            assert abs(tail - direct) <= 1e-9 * abs(direct)


def test_pole_residue_by_contour_mean():
    # the pointwise quantity (s-1) zeta - 1 is O(|s-1|); the contour mean is the residue
    for a in (0.1, 0.5, 1.0):
        pts = [1 + 1e-3 * cmath.exp(2j * math.pi * k / 8) for k in range(8)]
        mean = sum((s - 1) * hurwitz_zeta(s, a) for s in pts) / 8
        assert abs(mean - 1) <= 1e-6


def test_approx_fe_domain():
    with pytest.raises(DomainError):
        approx_hurwitz_critical(0.0, 0.3, 100)
    with pytest.raises(DomainError):
        approx_hurwitz_critical(400.0, 0.3, 100)
    with pytest.raises(DomainError):
        approx_li_critical(95.0, 0.3, 100)


def test_approx_fe_constant(fx):
    err = abs(approx_hurwitz_critical(50, 0.3, 100) - hurwitz_zeta(complex(0.5, 50), 0.3))
    c = err * math.sqrt(100)
    assert abs(c - fx("afe_C_tau50_x100").real) < 1e-6
    assert c <= 5


def test_approx_fe_fixed_tau_grows_with_x(fx):
    # at fixed tau the truncated Hurwitz sum misses x^{1-s}/(1-s), so the
    # error grows like sqrt(x); the oracle median ratio is about 1/2
    taus = fx("afe_fixed_tau_ratio_median") and [30 + 2 * j for j in range(20)]
    ratios = []
    for tau in taus:
        s = complex(0.5, tau)
        ref = hurwitz_zeta(s, 0.3)
        ratios.append(abs(approx_hurwitz_critical(tau, 0.3, 100) - ref) / abs(approx_hurwitz_critical(tau, 0.3, 400) - ref))
    med = float(np.median(ratios))
    assert abs(med - fx("afe_fixed_tau_ratio_median").real) < 1e-6
    assert not 1.5 <= med <= 3


def test_approx_fe_restores_missing_term():
    # adding back the x^{1-s}/(1-s) term leaves an O(x^{-1/2}) remainder
    a, tau = 0.3, 50.0
    s = complex(0.5, tau)
    ref = hurwitz_zeta(s, a)
    for x in (100, 400, 1600):
        corrected = approx_hurwitz_critical(tau, a, x) - (x + 1 + a - 0.5) ** (1 - s) / (1 - s)
        assert abs(corrected - ref) <= 2.0 / math.sqrt(x)
