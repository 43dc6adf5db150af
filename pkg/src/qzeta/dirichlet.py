"""Dirichlet characters, Gauss sums and the L-function decomposition of Q(s, r/q)."""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .errors import DomainError, PoleError, RangeError
from .hurwitz import hurwitz_zeta, hurwitz_zeta_regular
from .options import DEFAULT_OPTIONS, EvalOptions

MAX_MODULUS = 100


@dataclass(frozen=True)
class Character:
    """One Dirichlet character stored as its values chi(0), ..., chi(q-1)."""

    modulus: int
    values: Tuple[complex, ...]
    is_principal: bool
    parity: int
    is_primitive: bool
    index: Tuple[int, ...] = ()

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    def conj(self, n: int) -> complex:
        return self.values[n % self.modulus].conjugate()


@dataclass(frozen=True)
class CharacterTable:
    modulus: int
    characters: Tuple[Character, ...] = field(repr=False)

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i):
        return self.characters[i]

    def even(self) -> List[Character]:
        return [c for c in self.characters if c.parity == 1]


@dataclass(frozen=True)
class RationalShift:
    r: int
    q: int

    def __post_init__(self):
        if not (0 < self.r < self.q or (self.r == 1 and self.q == 1)):
            raise DomainError(f"need 0 < r < q, got r={self.r}, q={self.q}")
        if math.gcd(self.r, self.q) != 1:
            raise DomainError(f"r={self.r} and q={self.q} are not coprime")
        if 2 * self.r > self.q:
            raise DomainError(f"r/q = {self.r}/{self.q} exceeds 1/2")

    @property
    def a(self) -> float:
        return self.r / self.q


def admissible_shifts(q: int) -> List[RationalShift]:
    """All r/q in (0, 1/2] with gcd(r, q) = 1."""
    return [RationalShift(r, q) for r in range(1, q // 2 + 1) if math.gcd(r, q) == 1]


def _factorize(n: int) -> List[Tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _cyclic_generators(p: int, e: int) -> List[Tuple[int, int]]:
    """Generators (g, order) of (Z/p^e Z)^x as a product of cyclic groups."""
    m = p**e
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            return [(3, 2)]
        return [(m - 1, 2), (5, 2 ** (e - 2))]
    order = (p - 1) * p ** (e - 1)
    for g in range(2, m):
        if math.gcd(g, p) != 1:
            continue
        if all(pow(g, order // f, m) != 1 for f, _ in _factorize(order)):
            return [(g, order)]
    raise RuntimeError(f"no primitive root mod {m}")  # unreachable for odd prime powers


def _discrete_logs(g: int, order: int, m: int) -> dict:
    logs = {}
    x = 1
    for k in range(order):
        logs[x] = k
        x = x * g % m
    return logs


def _subgroup_logs(gens, m):
    # exponents (k_1, k_2) with n = gens[0]^k_1 gens[1]^k_2 mod m
    table = {}
    ranges = [range(order) for _, order in gens]
    for exps in itertools.product(*ranges):
        x = 1
        for (g, _), k in zip(gens, exps):
            x = x * pow(g, k, m) % m
        table[x] = exps
    return table


def _is_primitive(values, q: int) -> bool:
    for d in range(1, q):
        if q % d:
            continue
        # chi is induced from modulus d iff chi(n) = 1 whenever n = 1 mod d
        if all(
            abs(values[n] - 1.0) < 1e-9
            for n in range(1, q)
            if n % d == 1 % d and math.gcd(n, q) == 1
        ):
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_characters(q: int) -> CharacterTable:
    """All phi(q) Dirichlet characters mod q, built from a generator decomposition.

    Raises
    ------
    RangeError
        For q outside [1, 100].
    """
    if not isinstance(q, (int, np.integer)) or not 1 <= q <= MAX_MODULUS:
        raise RangeError(f"modulus must be an integer in [1, {MAX_MODULUS}], got {q!r}")
    q = int(q)
    components = []  # (modulus p^e, [(generator, order)], log table)
    for p, e in _factorize(q):
        m = p**e
        gens = _cyclic_generators(p, e)
        components.append((m, gens, _subgroup_logs(gens, m)))
    orders = [order for _, gens, _ in components for _, order in gens]
    units = [n for n in range(q) if math.gcd(n, q) == 1]
    # exponent vector of every unit along all cyclic factors
    coords = {}
    for n in units:
        vec = []
        for m, gens, table in components:
            vec.extend(table[n % m])
        coords[n] = vec
    chars = []
    for index in itertools.product(*[range(o) for o in orders]):
        values = [0j] * q
        for n in units:
            phase = sum(j * k / o for j, k, o in zip(index, coords[n], orders))
            values[n] = cmath.exp(2j * math.pi * (phase % 1.0))
        if q == 1:
            values = [1 + 0j]
        principal = all(j == 0 for j in index)
        parity = 1 if q <= 2 else int(round(values[q - 1].real))
        chars.append(
            Character(
                modulus=q,
                values=tuple(values),
                is_principal=principal,
                parity=parity,
                is_primitive=_is_primitive(values, q) if q > 1 else True,
                index=tuple(index),
            )
        )
    return CharacterTable(q, tuple(chars))


def gauss_sum(r: int, chi: Character) -> complex:
    """G(r, conj chi) = sum_{n=1}^{q} conj(chi(n)) e^{2 pi i r n / q}."""
    q = chi.modulus
    return sum(chi.conj(n) * cmath.exp(2j * math.pi * ((r * n) % q) / q) for n in range(1, q + 1))


def l_function(s, chi: Character, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """L(s, chi) = q^{-s} sum_{r=1}^{q} chi(r) zeta(s, r/q).

    For non-principal chi the Hurwitz poles cancel and the regular parts
    zeta(s, a) - 1/(s-1) are combined instead, so s = 1 is admissible.

    Raises
    ------
    PoleError
        For principal chi at s = 1.
    """
    s = complex(s)
    q = chi.modulus
    residues = [r for r in range(1, q + 1) if chi.values[r % q] != 0]
    if chi.is_principal:
        if s == 1.0:
            raise PoleError("L(s, principal character) has a pole at s = 1")
        total = sum(chi(r) * hurwitz_zeta(s, r / q, opts) for r in residues)
    else:
        total = sum(chi(r) * hurwitz_zeta_regular(s, r / q, opts) for r in residues)
    return cmath.exp(-s * math.log(q)) * total


def _coerce_shift(shift) -> RationalShift:
    if isinstance(shift, RationalShift):
        return shift
    r, q = shift
    return RationalShift(int(r), int(q))


def hurwitz_by_characters(s, r: int, q: int, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """zeta(s, r/q) = q^s / phi(q) sum_chi conj(chi(r)) L(s, chi)."""
    s = complex(s)
    table = enumerate_characters(q)
    total = sum(chi.conj(r) * l_function(s, chi, opts) for chi in table)
    return cmath.exp(s * math.log(q)) * total / len(table)


def _coprime_twisted_pair(s: complex, r: int, q: int, opts: EvalOptions) -> complex:
    """sum over gcd(m, q) = 1 of 2 cos(2 pi r m / q) m^{-s}, through even characters mod q."""
    table = enumerate_characters(q)
    total = sum(
        (1 + chi(-1)) * gauss_sum(r, chi) * l_function(s, chi, opts) for chi in table.even()
    )
    return total / len(table)


def _divisors(q: int) -> List[int]:
    return [d for d in range(1, q + 1) if q % d == 0]


def li_by_characters(s, shift, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Li(s, r/q) = sum_{d | q} d^{-s} 1/phi(q/d) sum_{chi mod q/d} G(r, conj chi) L(s, chi).

    The d = 1 term alone only sees n coprime to q; the remaining divisors
    restore the terms n = d m with gcd(m, q/d) = 1.
    """
    s = complex(s)
    rs = _coerce_shift(shift)
    total = 0j
    for d in _divisors(rs.q):
        q_red = rs.q // d
        table = enumerate_characters(q_red)
        inner = sum(gauss_sum(rs.r, chi) * l_function(s, chi, opts) for chi in table)
        total += cmath.exp(-s * math.log(d)) * inner / len(table)
    return total


def li_by_characters_coprime(s, shift, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """The single-modulus sum 1/phi(q) sum_chi G(r, conj chi) L(s, chi).

    Equals sum over gcd(n, q) = 1 of e^{2 pi i r n / q} n^{-s}; it differs from
    Li(s, r/q) by the terms with gcd(n, q) > 1.
    """
    s = complex(s)
    rs = _coerce_shift(shift)
    table = enumerate_characters(rs.q)
    return sum(gauss_sum(rs.r, chi) * l_function(s, chi, opts) for chi in table) / len(table)


def _hurwitz_pair_by_characters(s: complex, rs: RationalShift, opts: EvalOptions) -> complex:
    # zeta(s, r/q) + zeta(s, 1 - r/q) = q^s / phi(q) sum_chi (1 + chi(-1)) conj chi(r) L(s, chi)
    table = enumerate_characters(rs.q)
    q_s = cmath.exp(s * math.log(rs.q))
    total = sum(2 * chi.conj(rs.r) * l_function(s, chi, opts) for chi in table.even())
    return q_s * total / len(table)


def q_decompose(s, shift, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Q(s, r/q) as a combination of Dirichlet L-functions.

        2 Q(s, r/q) = q^s / phi(q) sum_chi (1 + chi(-1)) conj chi(r) L(s, chi)
                      + sum_{d | q} d^{-s} / phi(q/d) sum_{chi mod q/d} (1 + chi(-1)) G(r, conj chi) L(s, chi)

    Only even characters contribute.  The d = 1 part of the second sum is the
    single-modulus form returned by :func:`q_decompose_single_modulus`.
    """
    s = complex(s)
    rs = _coerce_shift(shift)
    if s == 1.0:
        raise PoleError("Q(s, a) has a simple pole at s = 1")
    z = _hurwitz_pair_by_characters(s, rs, opts)
    p = sum(
        cmath.exp(-s * math.log(d)) * _coprime_twisted_pair(s, rs.r, rs.q // d, opts)
        for d in _divisors(rs.q)
    )
    return 0.5 * (z + p)


def q_decompose_single_modulus(s, shift, opts: EvalOptions = DEFAULT_OPTIONS, include_odd: bool = False) -> complex:
    """1/(2 phi(q)) sum_chi (1 + chi(-1)) (conj chi(r) q^s + G(r, conj chi)) L(s, chi).

    Sums over characters mod q only, which drops the contribution of the
    integers sharing a factor with q.  ``include_odd=True`` keeps the odd
    characters, whose weight 1 + chi(-1) is exactly zero.
    """
    s = complex(s)
    rs = _coerce_shift(shift)
    if s == 1.0:
        raise PoleError("Q(s, a) has a simple pole at s = 1")
    q = rs.q
    table = enumerate_characters(q)
    q_s = cmath.exp(s * math.log(q))
    total = 0j
    for chi in table:
        if chi.parity == -1 and not include_odd:
            continue
        weight = 1 + chi(-1)
        total += weight * (chi.conj(rs.r) * q_s + gauss_sum(rs.r, chi)) * l_function(s, chi, opts)
    return total / (2 * len(table))
