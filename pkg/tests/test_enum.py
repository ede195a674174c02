import pytest

from starsym.enum import Ordering, OutputFormat, SetCase, Suite


class TestOrdering:
    @pytest.mark.parametrize(
        "a,b,expected",
        [(1, 2, Ordering.LESS), (2, 1, Ordering.GREATER), (3, 3, Ordering.EQUAL)],
    )
    def test_of(self, a, b, expected):
        """Test three-way comparison"""
        assert Ordering.of(a, b) is expected

    def test_tuples(self):
        """Test comparison of tuples"""
        assert Ordering.of((1, 2), (1, 3)) is Ordering.LESS

    def test_neg(self):
        """Test negation flips the result"""
        assert -Ordering.LESS is Ordering.GREATER
        assert -Ordering.GREATER is Ordering.LESS
        assert -Ordering.EQUAL is Ordering.EQUAL

    def test_int_values(self):
        """Test the integer values follow sign conventions"""
        assert [int(o) for o in Ordering] == [-1, 0, 1]


def test_output_format():
    """Test OutputFormat values"""
    assert OutputFormat("json") is OutputFormat.JSON
    assert str(OutputFormat.CSV) == "csv"
    assert [str(f) for f in OutputFormat] == ["text", "json", "csv"]


def test_set_case():
    """Test SetCase values"""
    assert {str(c) for c in SetCase} == {"maximal", "flat", "split"}


def test_suite():
    """Test Suite values run in verification order"""
    assert [str(s) for s in Suite] == ["generators", "sdeg", "set_sizes", "sdefect", "betti"]
    with pytest.raises(ValueError):
        Suite("unknown")
