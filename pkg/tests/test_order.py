import random
from collections import Counter
from functools import cmp_to_key
from itertools import combinations

import pytest

from starsym.core import StarParams
from starsym.enum import Ordering, SetCase
from starsym.exc import (
    DegreeMismatchError,
    InvalidMonomialError,
    LengthOneError,
    MismatchedWeightError,
    PartitionMismatchError,
    SupportOutsideError,
)
from starsym.generators import enumerate_generators, enumerate_partitions, partition_of
from starsym.order import (
    alex_compare,
    ggrevlex_compare,
    index_of_overlap,
    is_maximal_partition,
    m_index,
    overlap_by_definition,
    revlex_compare,
    set_case,
    set_elements,
    set_size,
    sort_by_tau,
    tau_compare,
    tau_key,
)

S10 = StarParams(s=10, c=6, m=9)
M1 = (3,) * 7 + (0,) * 3
M2 = (3,) * 6 + (0, 0, 0, 3)
M3 = (4, 4, 4, 4, 4, 3, 1, 1, 0, 0)
M4 = (1, 1, 1, 1, 1, 4, 4, 4, 4, 4)


def small_cells(max_s, max_m):
    return [
        StarParams(s=s, c=c, m=m)
        for s in range(2, max_s + 1)
        for c in range(1, s)
        for m in range(1, max_m + 1)
    ]


class TestAlex:
    def test_shorter_is_larger(self):
        """Test a shorter partition beats a longer one"""
        assert alex_compare((4,), (2, 2)) is Ordering.GREATER
        assert alex_compare((2, 1, 1), (3, 1)) is Ordering.LESS

    def test_lex_within_length(self):
        """Test lex decides equal lengths"""
        assert alex_compare((3, 1), (2, 2)) is Ordering.GREATER
        assert alex_compare((5, 5, 5, 4), (6, 5, 4, 4)) is Ordering.LESS
        assert alex_compare((3, 3, 1), (3, 3, 1)) is Ordering.EQUAL

    def test_mismatched_weight(self):
        """Test partitions of different integers are incomparable"""
        with pytest.raises(MismatchedWeightError):
            alex_compare((3, 1), (2, 1))


class TestRevlex:
    def test_last_exponent_decides(self):
        """Test the smaller exponent at the highest differing index wins"""
        assert revlex_compare((0, 2, 1), (1, 0, 2)) is Ordering.GREATER
        assert revlex_compare((1, 0, 2), (0, 2, 1)) is Ordering.LESS
        assert revlex_compare((1, 1, 0), (1, 0, 1)) is Ordering.GREATER
        assert revlex_compare((2, 1), (2, 1)) is Ordering.EQUAL

    def test_degree_mismatch(self):
        """Test monomials of different degrees raise"""
        with pytest.raises(DegreeMismatchError):
            revlex_compare((1, 1, 0), (1, 0, 0))

    def test_length_mismatch(self):
        """Test monomials in different numbers of forms raise"""
        with pytest.raises(InvalidMonomialError):
            revlex_compare((1, 1), (1, 1, 0))


class TestGgrevlex:
    def test_layers_not_whole_monomial(self):
        """Test layer-wise comparison can disagree with revlex on the product"""
        params = StarParams(s=3, c=2, m=1)
        assert ggrevlex_compare((1, 0, 2), (0, 2, 1), params) is Ordering.GREATER
        assert revlex_compare((1, 0, 2), (0, 2, 1)) is Ordering.LESS

    def test_equal_partitions(self):
        """Test F1...F7 cubed beats (F1...F6 F10) cubed"""
        assert ggrevlex_compare(M1, M2, S10) is Ordering.GREATER
        assert ggrevlex_compare(M2, M1, S10) is Ordering.LESS
        assert ggrevlex_compare(M1, M1, S10) is Ordering.EQUAL

    def test_partition_mismatch(self):
        """Test different layer sizes raise"""
        with pytest.raises(PartitionMismatchError):
            ggrevlex_compare(M1, M3, S10)


class TestTau:
    def test_worked_chain(self):
        """Test M1 > M2 > M4 > M3 for s=10, c=6, m=9"""
        assert partition_of(M3, S10) == (4, 2, 2, 1)
        assert partition_of(M4, S10) == (6, 1, 1, 1)
        assert tau_compare(M1, M2, S10) is Ordering.GREATER
        assert tau_compare(M2, M4, S10) is Ordering.GREATER
        assert tau_compare(M4, M3, S10) is Ordering.GREATER
        assert sort_by_tau([M3, M1, M4, M2], S10) == [M1, M2, M4, M3]

    def test_key(self):
        """Test the key carries partition and layers"""
        key = tau_key(M4, S10)
        assert key.partition == (6, 1, 1, 1)
        assert len(key.layer_chain) == 4

    def test_enumeration_is_descending(self):
        """Test enumerate_generators lists from the tau-largest down"""
        for params in small_cells(5, 3):
            gens = enumerate_generators(params)
            for a, b in zip(gens, gens[1:]):
                assert tau_compare(a, b, params) is Ordering.GREATER

    @pytest.mark.slow
    def test_total_order(self):
        """Test antisymmetry and agreement of the comparator with the sort key"""
        rng = random.Random(7)
        for params in small_cells(5, 3):
            gens = enumerate_generators(params)
            for a, b in combinations(gens, 2):
                assert tau_compare(a, b, params) == -tau_compare(b, a, params)
                assert tau_compare(a, b, params) is not Ordering.EQUAL
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert sort_by_tau(shuffled, params) == gens
            by_compare = sorted(
                shuffled, key=cmp_to_key(lambda x, y: -tau_compare(x, y, params))
            )
            assert by_compare == gens


class TestOverlap:
    @pytest.mark.parametrize(
        "p,expected",
        [
            ((6, 6, 5, 2), 3),
            ((6, 5, 4, 4), 3),
            ((5, 5, 5, 4), 1),
            ((6, 5, 5, 3), 2),
            ((2, 2, 2, 1), 1),
            ((3, 2, 1, 1), 3),
            ((1, 1), 1),
        ],
    )
    def test_examples(self, p, expected):
        """Test the last strict descent"""
        assert index_of_overlap(p) == expected

    def test_length_one(self):
        """Test a single part has no index of overlap"""
        with pytest.raises(LengthOneError):
            index_of_overlap((3,))

    def test_matches_definition(self):
        """Test the descent rule against the search over larger partitions"""
        for c in range(2, 7):
            for m in range(2, 15):
                params = StarParams(s=c + 1, c=c, m=m)
                for p in enumerate_partitions(params):
                    if is_maximal_partition(p, params):
                        assert overlap_by_definition(p, params) is None
                    else:
                        assert overlap_by_definition(p, params) == index_of_overlap(p), p

    def test_maximal(self):
        """Test the alex maximum is c,...,c,r"""
        assert is_maximal_partition((3, 3, 1), StarParams(s=7, c=3, m=7))
        assert not is_maximal_partition((3, 2, 2), StarParams(s=7, c=3, m=7))
        assert is_maximal_partition((6, 6, 6, 1), StarParams(s=8, c=6, m=19))
        assert is_maximal_partition((4, 4), StarParams(s=7, c=4, m=8))


class TestMIndex:
    def test_examples(self):
        """Test the position of the last form of M inside B"""
        assert m_index(range(1, 6), (1, 1, 1, 0, 0)) == 3
        assert m_index({2, 4, 7}, (0, 1, 0, 1, 0, 0, 0)) == 2
        assert m_index({2, 4, 7}, (0, 0, 0, 0, 0, 0, 3)) == 3

    def test_outside(self):
        """Test a form outside B raises"""
        with pytest.raises(SupportOutsideError):
            m_index({1, 2}, (0, 0, 1))


class TestSets:
    def test_s3_c2_m2(self):
        """Test colon sets along the order for s=3, c=2, m=2"""
        params = StarParams(s=3, c=2, m=2)
        gens = enumerate_generators(params)
        assert [set_elements(g, params) for g in gens] == [
            frozenset(),
            frozenset({3}),
            frozenset({2}),
            frozenset({1}),
        ]
        assert [set_size(g, params) for g in gens] == [0, 1, 1, 1]

    def test_first_power(self):
        """Test colon sets of squarefree generators"""
        params = StarParams(s=3, c=2, m=1)
        gens = enumerate_generators(params)
        assert [set_size(g, params) for g in gens] == [0, 1, 1]
        assert set_elements((0, 1, 1), params) == frozenset({1})

    def test_first_power_closed(self):
        """Test m = 1 sizes are max(supp) - (s - c + 1)"""
        for params in small_cells(6, 1):
            for g in enumerate_generators(params):
                last = max(j for j, e in enumerate(g, start=1) if e)
                assert set_size(g, params) == last - params.free - 1

    def test_split_case(self):
        """Test M = (F1 F2 F3)(F2 F3) for s=4, c=3, m=3"""
        params = StarParams(s=4, c=3, m=3)
        M = (1, 2, 2, 0)
        assert set_case(M, params) == (SetCase.SPLIT, (2, 1), 1)
        assert set_elements(M, params) == frozenset({1, 4})
        assert set_size(M, params) == 2

    def test_cases(self):
        """Test each branch is recognized"""
        params = StarParams(s=3, c=2, m=2)
        assert set_case((1, 1, 1), params)[0] is SetCase.MAXIMAL
        assert set_case((2, 2, 0), params) == (SetCase.FLAT, (1, 1), 1)

    def test_flat_partition_all_three(self):
        """Test [4,4,1,1] generators of s=7, c=4, m=10 all have three colon forms"""
        params = StarParams(s=7, c=4, m=10)
        sizes = [
            set_size(g, params)
            for g in enumerate_generators(params)
            if partition_of(g, params) == (4, 4, 1, 1)
        ]
        assert len(sizes) == 35
        assert set(sizes) == {3}

    def test_split_partition_tally(self):
        """Test [3,3,3,1] generators of s=7, c=4, m=10 split 7 / 28 / 70"""
        params = StarParams(s=7, c=4, m=10)
        tally = Counter(
            set_size(g, params)
            for g in enumerate_generators(params)
            if partition_of(g, params) == (3, 3, 3, 1)
        )
        assert tally == Counter({1: 7, 2: 28, 3: 70})

    def test_size_is_element_count(self):
        """Test the closed size equals the listed set and stays below c"""
        for params in small_cells(6, 4):
            for g in enumerate_generators(params):
                elements = set_elements(g, params)
                assert set_size(g, params) == len(elements) < params.c
                assert all(1 <= j <= params.s for j in elements)

    def test_last_two_parts_one(self):
        """Test d_{t-1} = 1 forces c - 1 colon forms"""
        for params in small_cells(7, 5):
            for g in enumerate_generators(params):
                p = partition_of(g, params)
                if len(p) >= 2 and p[-2] == 1:
                    assert set_size(g, params) == params.c - 1
