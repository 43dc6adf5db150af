"""Exception hierarchy shared by every evaluator in the package."""


class QZetaError(ArithmeticError):
    """Base class for all errors raised by qzeta."""

    kind = "error"


class PoleError(QZetaError):
    kind = "pole"


class ExcludedPointError(QZetaError):
    """Point lies in a set that an operation deliberately refuses to evaluate."""

    kind = "excluded"


class DomainError(QZetaError, ValueError):
    kind = "domain"


class RangeError(QZetaError, ValueError):
    kind = "range"


class PrecisionError(QZetaError):
    """An internal accuracy self-check failed."""

    kind = "precision"


class QuadratureError(QZetaError):
    kind = "quadrature"


class BracketError(QZetaError):
    kind = "bracket"


class ContourError(QZetaError):
    kind = "contour"
