"""Exception hierarchy shared across the package."""


class CmtiltError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CmtiltError):
    """Polynomial or scalar input could not be parsed."""


class NotHomogeneous(CmtiltError):
    """Input polynomial is not weighted-homogeneous for the given weights."""


class UnsupportedFactorization(CmtiltError):
    """Factorization request outside the supported range (rational case)."""


class DegreeNotPositive(CmtiltError):
    """A homogeneous element of positive degree was required."""


class NoNzdFound(CmtiltError):
    """The deterministic scan found no homogeneous non-zero-divisor."""


class PeriodNotFound(CmtiltError):
    """No divisor of the localized degree produced a unit witness."""


class InternalCheckFailed(CmtiltError):
    """A built-in cross-check (closed form vs. window computation) failed."""


class SmallCharUnsupported(CmtiltError):
    """Radical computation requires characteristic 0 or p > dim."""


class CartanSingular(CmtiltError):
    """Cartan matrix is singular; Coxeter polynomial undefined."""


class NegativeAInvariant(CmtiltError):
    """Operation requires a non-negative a-invariant."""


class BadLambda(CmtiltError):
    """Canonical algebra parameter must avoid 0 and 1."""


class WindowUnstable(CmtiltError):
    """Graded Hom computation did not stabilize on the enlarged window."""
