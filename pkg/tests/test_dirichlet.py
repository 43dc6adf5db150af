import cmath
import math

import numpy as np
import pytest

from conftest import FIXTURES, mp_li_rational
from qzeta import (
    DomainError,
    PoleError,
    RangeError,
    RationalShift,
    admissible_shifts,
    enumerate_characters,
    gauss_sum,
    hurwitz_by_characters,
    hurwitz_zeta,
    l_function,
    li_by_characters,
    li_by_characters_coprime,
    periodic_zeta,
    q_decompose,
    q_decompose_single_modulus,
    q_eval,
)

GRID_Q = (3, 4, 5, 6, 7, 8, 12)
GRID_S = (2, 3 + 1j, 0.5 + 5j, -1.5 + 2j)


def exponents(chi, phi):
    # chi(n) = exp(2 pi i e / phi) on units, as in the brute-force fixture
    q = chi.modulus
    units = [n for n in range(1, q) if math.gcd(n, q) == 1]
    return [round(cmath.phase(chi(n)) / (2 * math.pi) * phi) % phi for n in units]


@pytest.mark.parametrize("q", [4, 5])
def test_characters_match_brute_force(q):
    fixture = FIXTURES[f"characters_mod_{q}"]
    table = enumerate_characters(q)
    assert sorted(exponents(c, fixture["order"]) for c in table) == fixture["value"]


def test_small_tables():
    (trivial,) = enumerate_characters(1)
    assert trivial.is_principal and trivial(7) == 1
    t4 = enumerate_characters(4)
    assert len(t4) == 2
    odd = [c for c in t4 if not c.is_principal][0]
    assert odd.parity == -1 and odd(3) == pytest.approx(-1)
    roots = {complex(round(c(2).real), round(c(2).imag)) for c in enumerate_characters(5)}
    assert roots == {1, -1, 1j, -1j}


def test_modulus_range():
    for bad in (0, 101, 2.5):
        with pytest.raises(RangeError):
            enumerate_characters(bad)


@pytest.mark.parametrize("q", range(1, 101))
def test_orthogonality_and_multiplicativity(q):
    table = enumerate_characters(q)
    units = [n for n in range(q) if math.gcd(n, q) == 1]
    phi = len(units)
    assert len(table) == phi
    m = np.array([[c(n) for n in range(q)] for c in table])
    assert np.abs(m @ m.conj().T - phi * np.eye(phi)).max() < 1e-12
    # column relation over the units
    cols = m[:, units]
    assert np.abs(cols.conj().T @ cols - phi * np.eye(phi)).max() < 1e-12
    rng = np.random.default_rng(q)
    for c in table:
        for _ in range(10):
            x, y = rng.choice(units), rng.choice(units)
            assert abs(c(x * y) - c(x) * c(y)) < 1e-12
        assert all(c(n) == 0 for n in range(q) if math.gcd(n, q) != 1)
        assert c.parity == (1 if q <= 2 else round(c(q - 1).real))


def test_primitivity_flags():
    prim = [c.is_primitive for c in enumerate_characters(8)]
    # mod 8: principal and the character induced from mod 4 are imprimitive
    assert sum(prim) == 2


def test_gauss_sums(fx):
    quad5 = [c for c in enumerate_characters(5) if c(2).real < -0.5][0]
    assert abs(gauss_sum(1, quad5) - fx("gauss_quadratic_5")) < 1e-12
    assert gauss_sum(3, enumerate_characters(1)[0]) == pytest.approx(1)
    for q in (5, 7, 12):
        for c in enumerate_characters(q):
            if not c.is_principal:
                assert abs(gauss_sum(0, c)) < 1e-12
            if c.is_primitive:
                assert abs(gauss_sum(1, c)) == pytest.approx(math.sqrt(q), rel=1e-12)


def test_l_values(fx):
    assert abs(l_function(2, enumerate_characters(1)[0]) - fx("l_principal_1_at_2")) < 1e-10
    odd4 = [c for c in enumerate_characters(4) if c.parity == -1][0]
    assert abs(l_function(1, odd4) - fx("l_chi4_at_1")) < 1e-10
    with pytest.raises(PoleError):
        l_function(1, enumerate_characters(5)[0])


@pytest.mark.parametrize("q", GRID_Q)
def test_hurwitz_reconstruction(q):
    for r in range(1, q):
        if math.gcd(r, q) != 1:
            continue
        for s in GRID_S:
            ref = hurwitz_zeta(s, r / q)
            assert abs(hurwitz_by_characters(s, r, q) - ref) <= 1e-9 * max(1, abs(ref))


def test_li_examples(fx):
    assert abs(li_by_characters(2, (1, 2)) - fx("li_char_2_half")) < 1e-10
    assert abs(li_by_characters(3, (1, 3)) - fx("li_char_3_third")) < 1e-9
    assert abs(li_by_characters(3, (1, 3)) - periodic_zeta(3, 1 / 3)) < 1e-9
    s = 0.5 + 7j
    assert abs(li_by_characters(s, RationalShift(2, 5)) - fx("li_char_half7i_2_5")) < 1e-8
    assert abs(li_by_characters(s, RationalShift(2, 5)) - periodic_zeta(s, 0.4)) < 1e-8


@pytest.mark.parametrize("q", GRID_Q)
def test_li_and_q_grid(q):
    for rs in admissible_shifts(q):
        for s in GRID_S:
            li = periodic_zeta(s, rs.a)
            assert abs(li_by_characters(s, rs) - li) <= 1e-9 * max(1, abs(li))
            qv = q_eval(s, rs.a).value
            assert abs(q_decompose(s, rs) - qv) <= 1e-9 * max(1, abs(qv))


def test_q_decompose_examples(fx):
    s = 2 + 3j
    assert abs(q_decompose(s, (2, 7)) - fx("q_decomp_2p3i_2_7")) < 1e-9
    assert abs(q_decompose(s, (2, 7)) - q_eval(s, 2 / 7).value) < 1e-9
    with pytest.raises(PoleError):
        q_decompose(1, (1, 3))


@pytest.mark.parametrize("s", [2, 0.5 + 4j, -1.5 + 2j, 3 - 1j])
def test_q_decompose_closed_forms(s):
    zeta = hurwitz_zeta(s, 1.0)
    s = complex(s)
    half = (2**s + 2 ** (1 - s) - 2) * zeta
    quarter = (2 ** (2 * s) - 2**s + 2 ** (2 - 2 * s) - 2 ** (1 - s)) * zeta
    assert abs(q_decompose(s, (1, 2)) - half) <= 1e-9 * max(1, abs(half))
    assert abs(2 * q_decompose(s, (1, 4)) - quarter) <= 1e-9 * max(1, abs(quarter))


@pytest.mark.parametrize("q", GRID_Q)
def test_odd_characters_drop_out(q):
    for rs in admissible_shifts(q):
        for s in GRID_S:
            even = q_decompose_single_modulus(s, rs)
            full = q_decompose_single_modulus(s, rs, include_odd=True)
            assert abs(full - even) <= 1e-12 * max(1, abs(even))


def test_single_modulus_form_misses_noncoprime_terms():
    # for prime q the integers sharing a factor with q are n = q m; the
    # twisted pair over them is 2 q^{-s} zeta(s), i.e. q^{-s} zeta(s) in Q
    for q, s in ((5, 2.0), (7, 3 + 1j), (3, 0.5 + 5j)):
        rs = RationalShift(1, q)
        gap = q_decompose(s, rs) - q_decompose_single_modulus(s, rs)
        expected = q ** (-complex(s)) * hurwitz_zeta(s, 1.0)
        assert abs(gap - expected) < 1e-10 * max(1, abs(expected))
        assert abs(gap) > 1e-3


def test_coprime_li_against_direct_sum():
    s, r, q = 3.0, 1, 6
    n = np.arange(1, 200001)
    mask = np.gcd(n, q) == 1
    direct = np.sum(np.exp(2j * np.pi * r * n[mask] / q) * n[mask] ** (-s))
    assert abs(li_by_characters_coprime(s, (r, q)) - direct) < 1e-10
    assert abs(li_by_characters(s, (r, q)) - mp_li_rational(s, r, q)) < 1e-10


def test_rational_shift_validation():
    assert [rs.r for rs in admissible_shifts(12)] == [1, 5]
    for r, q in ((2, 4), (3, 5), (0, 3), (4, 3)):
        with pytest.raises(DomainError):
            RationalShift(r, q)
