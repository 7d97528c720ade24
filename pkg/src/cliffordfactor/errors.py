"""Exception hierarchy.

Every exception carries a stable ``code`` string; the CLI reports it verbatim.
"""
from __future__ import annotations


class CliffordFactorError(Exception):
    code = "error"


class AlgebraMismatch(CliffordFactorError, TypeError):
    code = "algebra-mismatch"


class SignatureMismatch(AlgebraMismatch):
    code = "signature-mismatch"


class NotInvertible(CliffordFactorError, ZeroDivisionError):
    code = "not-invertible"


class OddBladePresent(CliffordFactorError, ValueError):
    code = "odd-blade-present"


class LeadingCoefficientNotInvertible(CliffordFactorError, ValueError):
    code = "leading-coefficient-not-invertible"


class DegenerateTransformation(CliffordFactorError, ValueError):
    code = "degenerate-transformation"


class ZeroPolynomial(CliffordFactorError, ValueError):
    code = "zero-polynomial"


class ExactFactorizationUnsupported(CliffordFactorError, ArithmeticError):
    code = "exact-factorization-unsupported"


class Pseudofactor(CliffordFactorError, ArithmeticError):
    """The remainder of the division by ``M`` has vanishing norm.

    ``step`` (1-based, counted from the rightmost factor) is filled in by the
    factorization driver; a bare :func:`czero` call leaves it ``None``.
    """

    code = "pseudofactor"

    def __init__(self, message, *, M=None, remainder=None, step=None):
        super().__init__(message)
        self.M = M
        self.remainder = remainder
        self.step = step


class NonInvertibleLeading(CliffordFactorError, ArithmeticError):
    code = "non-invertible-leading"

    def __init__(self, message, *, M=None, remainder=None, step=None):
        super().__init__(message)
        self.M = M
        self.remainder = remainder
        self.step = step


class MrpfNotTrivial(CliffordFactorError, ValueError):
    code = "mrpf-not-trivial"


class NonRealNorm(CliffordFactorError, ValueError):
    code = "non-real-norm"


class LinearlyDependentCoefficients(CliffordFactorError, ValueError):
    code = "linearly-dependent-coefficients"


class MultiplicityViolation(CliffordFactorError, ValueError):
    code = "multiplicity-violation"


class IrrationalRealRoot(CliffordFactorError, ArithmeticError):
    code = "irrational-real-root"


class PrimalMismatch(CliffordFactorError, ValueError):
    code = "primal-mismatch"


class NonRealFactorNorm(CliffordFactorError, ValueError):
    code = "non-real-factor-norm"


class DegenerateLine(CliffordFactorError, ValueError):
    code = "degenerate-line"


class VerificationFailed(CliffordFactorError, AssertionError):
    code = "verification-failed"


class ParseError(CliffordFactorError, ValueError):
    code = "syntax-error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownSymbol(ParseError):
    code = "unknown-symbol"


class InvalidOrdering(CliffordFactorError, ValueError):
    """An ordering entry is not a monic quadratic factor of the current norm polynomial."""

    code = "invalid-ordering"
