import math

import pytest
from pydantic import ValidationError

from starsym.core import (
    StarParams,
    binomial,
    check_monomial,
    divides,
    enumerate_subsets,
    f_degree,
    indicator,
    lcm,
    multiply,
    power,
    unit,
)
from starsym.exc import (
    ConfigurationError,
    InvalidMonomialError,
    InvalidParamsError,
    InvalidRangeError,
)


class TestStarParams:
    def test_defaults(self):
        """Test delta defaults to one"""
        params = StarParams(s=7, c=3, m=7)
        assert params.delta == 1
        assert str(params) == "(s=7, c=3, m=7, delta=1)"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"s": 1, "c": 1, "m": 1},
            {"s": 3, "c": 3, "m": 1},
            {"s": 3, "c": 0, "m": 1},
            {"s": 3, "c": 4, "m": 1},
            {"s": 3, "c": 2, "m": 0},
            {"s": 3, "c": 2, "m": 2, "delta": 0},
        ],
    )
    def test_invalid(self, kwargs):
        """Test invalid parameter sets are rejected"""
        with pytest.raises(InvalidParamsError):
            StarParams(**kwargs)

    def test_invalid_is_configuration_error(self):
        """Test invalid params surface as configuration errors"""
        with pytest.raises(ConfigurationError):
            StarParams(s=2, c=2, m=1)

    def test_frozen_and_hashable(self):
        """Test params can key dicts and cannot be mutated"""
        params = StarParams(s=4, c=2, m=3)
        assert {params: 1}[StarParams(s=4, c=2, m=3)] == 1
        with pytest.raises(ValidationError):
            params.m = 5

    def test_lengths(self):
        """Test admissible partition lengths"""
        params = StarParams(s=7, c=3, m=7)
        assert params.min_length == 3
        assert list(params.lengths) == [3, 4, 5, 6, 7]
        assert StarParams(s=7, c=4, m=8).min_length == 2

    def test_generator_degree(self):
        """Test F-degree of a strand"""
        params = StarParams(s=7, c=3, m=7)
        assert params.free == 4
        assert params.generator_degree(3) == 19
        assert params.generator_degree(7) == 35

    @pytest.mark.parametrize(
        "c,m,expected",
        [(6, 19, (3, 1)), (6, 12, (1, 6)), (3, 7, (2, 1)), (4, 10, (2, 2)), (3, 1, (0, 1))],
    )
    def test_quotient_remainder(self, c, m, expected):
        """Test m = q*c + r with 1 <= r <= c"""
        assert StarParams(s=c + 1, c=c, m=m).quotient_remainder() == expected

    def test_check_length(self):
        """Test lengths outside the admissible range raise"""
        params = StarParams(s=7, c=3, m=7)
        params.check_length(3)
        with pytest.raises(InvalidRangeError):
            params.check_length(2)
        with pytest.raises(InvalidRangeError):
            params.check_length(8)

    def test_with_power(self):
        """Test with_power keeps everything but m"""
        params = StarParams(s=6, c=4, m=2, delta=3).with_power(5)
        assert (params.s, params.c, params.m, params.delta) == (6, 4, 5, 3)


class TestBinomial:
    @pytest.mark.parametrize(
        "n,k,expected",
        [(5, 2, 10), (7, -1, 0), (-1, 0, 1), (0, 0, 1), (3, 5, 0), (-2, 1, 0), (60, 30, math.comb(60, 30))],
    )
    def test_values(self, n, k, expected):
        """Test the boundary conventions"""
        assert binomial(n, k) == expected

    def test_pascal(self):
        """Test Pascal's rule for n up to 60"""
        for n in range(1, 61):
            for k in range(-1, n + 2):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    def test_big(self):
        """Test results beyond 64 bits stay exact"""
        assert binomial(200, 100) == math.comb(200, 100)
        assert binomial(200, 100) > 2**64


class TestSubsets:
    def test_examples(self):
        """Test lexicographic listing"""
        assert enumerate_subsets(3, 0) == [frozenset()]
        assert [sorted(b) for b in enumerate_subsets(4, 3)] == [
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 4],
            [2, 3, 4],
        ]

    def test_counts(self):
        """Test there are C(s, k) distinct subsets"""
        for s in range(7):
            for k in range(s + 1):
                subsets = enumerate_subsets(s, k)
                assert len(subsets) == len(set(subsets)) == binomial(s, k)

    @pytest.mark.parametrize("s,k", [(3, 4), (3, -1), (-1, 0)])
    def test_invalid(self, s, k):
        """Test out-of-range k raises"""
        with pytest.raises(InvalidRangeError):
            enumerate_subsets(s, k)


def test_check_monomial():
    """Test exponent vectors are validated"""
    assert check_monomial([1, 0, 2]) == (1, 0, 2)
    assert check_monomial((1, 0, 2), 3) == (1, 0, 2)
    with pytest.raises(InvalidMonomialError):
        check_monomial((1, 0), 3)
    with pytest.raises(InvalidMonomialError):
        check_monomial((1, -1, 0))


def test_monomial_arithmetic():
    """Test the small monomial helpers"""
    a, b = (1, 0, 2), (0, 3, 1)
    assert unit(3) == (0, 0, 0)
    assert f_degree(a) == 3
    assert multiply(a, b) == (1, 3, 3)
    assert lcm(a, b) == (1, 3, 2)
    assert power(a, 3) == (3, 0, 6)
    assert divides((1, 0, 1), a)
    assert not divides(a, b)
    assert divides(unit(3), b)


def test_indicator():
    """Test squarefree monomials from subsets"""
    assert indicator({1, 3}, 4) == (1, 0, 1, 0)
    assert indicator(set(), 2) == (0, 0)
    with pytest.raises(InvalidMonomialError):
        indicator({5}, 4)
