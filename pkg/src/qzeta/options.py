"""Evaluation policy and the shift-parameter type."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError, RangeError


@dataclass(frozen=True)
class EvalOptions:
    """Precision and truncation policy.

    Attributes
    ----------
    target_abs_err : float
        Error budget handed to the series engines.
    em_terms : int or "auto"
        Number of summed terms before the Euler-Maclaurin tail takes over.
    em_correction_order : int
        Number of Bernoulli corrections in the tail (at most 30).
    quad_rel_tol : float
        Relative tolerance for adaptive quadrature.
    max_im_for_quadrature : float
        Largest ``|Im s|`` accepted by the integral representation.
    """

    target_abs_err: float = 1e-10
    em_terms: Union[int, str] = "auto"
    em_correction_order: int = 12
    quad_rel_tol: float = 1e-10
    max_im_for_quadrature: float = 10.0

    def __post_init__(self):
        if not self.target_abs_err > 0:
            raise RangeError("target_abs_err must be positive")
        if not 1 <= self.em_correction_order <= 30:
            raise RangeError("em_correction_order must lie in [1, 30]")
        if self.em_terms != "auto":
            if not isinstance(self.em_terms, int) or self.em_terms < 1:
                raise RangeError("em_terms must be a positive integer or 'auto'")
        if not self.quad_rel_tol > 0:
            raise RangeError("quad_rel_tol must be positive")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class ShiftParameter:
    """A shift ``a`` in (0, 1] together with its reflected companions."""

    a: float

    def __post_init__(self):
        if not 0.0 < self.a <= 1.0:
            raise DomainError(f"shift parameter must lie in (0, 1], got {self.a!r}")

    @property
    def a_star(self) -> float:
        return min(self.a, 1.0 - self.a)

    @property
    def a_pair(self) -> float:
        return 1.0 - self.a

    def __float__(self):
        return float(self.a)


def as_shift(a) -> float:
    """Validate a shift given as float or ShiftParameter and return it as float."""
    if isinstance(a, ShiftParameter):
        return a.a
    a = float(a)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"shift parameter must lie in (0, 1], got {a!r}")
    return a
