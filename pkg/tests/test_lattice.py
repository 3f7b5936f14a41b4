import pytest

from weylfusion.lattice import (
    DominantWeight,
    Partition,
    RootVector,
    WeightVector,
    dominates,
    iter_dominant,
    lift_to_size,
    parse_partition,
    parse_weight,
    partition_to_weight,
    partitions,
    root_to_weight,
    simple_reflection,
    transpose,
    weight_to_partition,
    weight_to_root,
)
from weylfusion.utils.exceptions import InvalidWeight, ParseError, PartitionTooLong, RankMismatch


class TestRootToWeight:
    def test_simple_root_is_cartan_column(self, wv):
        assert root_to_weight(RootVector.simple(2, 1)) == wv(2, -1)

    def test_sum_of_simple_roots(self, wv):
        assert root_to_weight(RootVector.positive(2, 1, 2)) == wv(1, 1)

    def test_rank_three_root(self, wv):
        assert root_to_weight(RootVector.positive(3, 2, 3)) == wv(-1, 1, 1)

    def test_linear(self):
        a = RootVector(3, (1, 2, 0))
        b = RootVector(3, (0, 1, 4))
        assert root_to_weight(a + b) == root_to_weight(a) + root_to_weight(b)

    def test_inverse_on_root_lattice(self):
        root = RootVector(3, (2, 0, 1))
        assert weight_to_root(root_to_weight(root)) == root

    def test_fundamental_weight_is_not_in_root_lattice(self, wv):
        assert weight_to_root(wv(1, 0)) is None


class TestWeights:
    def test_negative_dominant_weight_rejected(self):
        with pytest.raises(InvalidWeight):
            DominantWeight(2, (1, -1))

    def test_rank_mismatch(self, wv):
        with pytest.raises(RankMismatch):
            wv(1, 0) + wv(1, 0, 0)

    def test_dominance(self, wv):
        top = wv(1, 0)
        lower = top - root_to_weight(RootVector.simple(2, 1))
        assert dominates(top, lower)
        assert not dominates(lower, top)

    def test_simple_reflection(self, wv):
        assert simple_reflection(1, wv(1, 0)) == wv(-1, 1)
        assert simple_reflection(2, wv(1, 0)) == wv(1, 0)

    def test_iter_dominant_order(self, dw):
        assert list(iter_dominant(2, 1)) == [dw(0, 0), dw(1, 0), dw(0, 1)]

    def test_fundamental_indices(self, dw):
        assert dw(2, 0, 1).fundamental_indices() == (1, 1, 3)


class TestPartition:
    def test_trailing_zeros_ignored(self):
        assert Partition((2, 1, 0)) == Partition((2, 1))
        assert hash(Partition((2, 1, 0))) == hash(Partition((2, 1)))

    def test_not_decreasing(self):
        with pytest.raises(InvalidWeight):
            Partition((1, 2))

    def test_transpose(self):
        assert transpose(Partition((3, 1))) == Partition((2, 1, 1))
        assert transpose(transpose(Partition((4, 2, 2, 1)))) == Partition((4, 2, 2, 1))

    def test_weight_to_partition(self, dw):
        xi = weight_to_partition(dw(2, 1))
        assert xi.parts == (3, 1, 0)

    def test_partition_to_weight(self, wv):
        assert partition_to_weight(Partition((3, 1)), 2) == wv(2, 1)

    def test_partition_too_long(self):
        with pytest.raises(PartitionTooLong, match="partition too long for rank"):
            partition_to_weight(Partition((1, 1, 1, 1)), 2)

    def test_round_trip(self, dw):
        for weight in iter_dominant(3, 3):
            assert partition_to_weight(weight_to_partition(weight), 3) == weight.as_weight()

    def test_lift_adds_full_columns(self, wv):
        assert lift_to_size(wv(0, 0), 3) == Partition((1, 1, 1))
        assert lift_to_size(wv(2, 0), 5) == Partition((3, 1, 1))

    def test_lift_impossible(self, wv):
        with pytest.raises(InvalidWeight):
            lift_to_size(wv(1, 0), 2)

    def test_partitions(self):
        assert list(partitions(3, 2)) == [Partition((3,)), Partition((2, 1))]
        assert len(list(partitions(4, 4))) == 5

    def test_n_statistic(self):
        assert Partition((2, 1, 1)).n_statistic() == 3


class TestParsing:
    def test_parse_weight(self, dw):
        assert parse_weight("2,1") == dw(2, 1)
        assert parse_weight(" 0 ") == dw(0)

    @pytest.mark.parametrize("text", ["", "a", "1,,2", "1;2", "1,-1"])
    def test_parse_weight_rejects(self, text):
        with pytest.raises(ParseError):
            parse_weight(text)

    def test_parse_weight_rank(self):
        with pytest.raises(ParseError):
            parse_weight("1,0", rank=3)

    def test_parse_partition(self):
        assert parse_partition("[3,1,1]") == Partition((3, 1, 1))
        assert parse_partition("[]") == Partition(())
        with pytest.raises(ParseError):
            parse_partition("[1,2]")
