import pytest

from starsym.core import StarParams
from starsym.enum import Suite
from starsym.exc import (
    ComparisonError,
    ConfigurationError,
    DegreeMismatchError,
    EmptyLayerError,
    EmptyMonomialError,
    EmptySubsetError,
    FormulaRangeError,
    InvalidMonomialError,
    InvalidParamsError,
    InvalidRangeError,
    LengthOneError,
    MismatchedWeightError,
    MonomialError,
    NonlinearQuotientError,
    NotAGeneratorError,
    NotNestedError,
    OutOfClosedFormRangeError,
    PartitionMismatchError,
    ResourceLimitError,
    StarsymException,
    SupportOutsideError,
    UnsupportedRemainderError,
    VerificationError,
    WrongCaseError,
    WrongCodimensionError,
)
from starsym.verify import Mismatch


def test_starsym_exception():
    """Test base StarsymException"""
    exc = StarsymException("test error")
    assert str(exc) == "test error"
    assert isinstance(exc, Exception)


def test_invalid_params_is_configuration_error():
    """Test InvalidParamsError is caught as a configuration problem"""
    exc = InvalidParamsError("c must be below s")
    assert isinstance(exc, ConfigurationError)
    assert isinstance(exc, StarsymException)


@pytest.mark.parametrize(
    "cls,parent",
    [
        (InvalidMonomialError, MonomialError),
        (EmptyMonomialError, MonomialError),
        (EmptyLayerError, MonomialError),
        (NotNestedError, MonomialError),
        (NotAGeneratorError, MonomialError),
        (SupportOutsideError, MonomialError),
        (EmptySubsetError, MonomialError),
        (MismatchedWeightError, ComparisonError),
        (DegreeMismatchError, ComparisonError),
        (PartitionMismatchError, ComparisonError),
        (WrongCodimensionError, FormulaRangeError),
        (OutOfClosedFormRangeError, FormulaRangeError),
        (UnsupportedRemainderError, FormulaRangeError),
        (WrongCaseError, FormulaRangeError),
        (LengthOneError, FormulaRangeError),
        (InvalidRangeError, StarsymException),
        (ResourceLimitError, StarsymException),
        (NonlinearQuotientError, StarsymException),
    ],
)
def test_hierarchy(cls, parent):
    """Test each error sits under its family"""
    assert issubclass(cls, parent)
    assert issubclass(cls, StarsymException)
    with pytest.raises(parent):
        raise cls("boom")


def test_verification_error():
    """Test VerificationError carries its mismatch"""
    mismatch = Mismatch(StarParams(s=4, c=2, m=3), Suite.GENERATORS, (1, 1, 1, 0), 5, 6)
    exc = VerificationError(mismatch)
    assert exc.mismatch is mismatch
    assert str(exc) == str(mismatch)
    assert "generators" in str(exc)
