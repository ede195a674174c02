from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from starsym.verify import Mismatch


class StarsymException(Exception):
    pass


class ConfigurationError(StarsymException):
    """Raised when settings or command-line flags are invalid."""

    pass


class InvalidParamsError(ConfigurationError):
    """Raised when (s, c, m, delta) break 1 <= c < s, m >= 1, delta >= 1."""

    pass


class InvalidRangeError(StarsymException):
    """Raised when an index or length lies outside its admissible range."""

    pass


class ResourceLimitError(StarsymException):
    """Raised when a computation would exceed a configured cap."""

    pass


class MonomialError(StarsymException):
    """Base class for malformed monomials and layer chains."""

    ...


class InvalidMonomialError(MonomialError):
    """Raised for exponent vectors of the wrong length or with negative entries."""

    ...


class EmptyMonomialError(MonomialError):
    """Raised when the unit monomial is given where a proper monomial is needed."""

    ...


class EmptyLayerError(MonomialError): ...


class NotNestedError(MonomialError):
    """Raised when a layer is not contained in the layer before it."""

    ...


class NotAGeneratorError(MonomialError):
    """Raised when a monomial is not a minimal generator of the symbolic power."""

    ...


class SupportOutsideError(MonomialError): ...


class EmptySubsetError(MonomialError): ...


class ComparisonError(StarsymException):
    """Base class for comparisons between incomparable arguments."""

    ...


class MismatchedWeightError(ComparisonError): ...


class DegreeMismatchError(ComparisonError): ...


class PartitionMismatchError(ComparisonError): ...


class FormulaRangeError(StarsymException):
    """Raised when a closed formula is asked outside the range it covers."""

    ...


class WrongCodimensionError(FormulaRangeError): ...


class OutOfClosedFormRangeError(FormulaRangeError): ...


class UnsupportedRemainderError(FormulaRangeError): ...


class WrongCaseError(FormulaRangeError): ...


class LengthOneError(FormulaRangeError): ...


class NonlinearQuotientError(StarsymException):
    """Raised when an oracle colon ideal has a generator of degree above one."""

    ...


class VerificationError(StarsymException):
    """Raised when a formula disagrees with the brute-force oracle."""

    def __init__(self, mismatch: Mismatch):
        self.mismatch = mismatch
        super().__init__(str(mismatch))
