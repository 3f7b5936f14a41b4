import pytest

from weylfusion.characters import (
    KOSTKA_READINGS,
    RESOLVED_READING,
    Tableau,
    charge,
    enum_ssyt,
    fermionic_character,
    kostka,
    kostka_number,
    resolve_kostka_reading,
    select_reading,
    verify_kostka,
)
from weylfusion.lattice import DominantWeight, Partition, iter_dominant, partitions
from weylfusion.qpoly import QPoly
from weylfusion.utils.exceptions import InvalidWeight


def P(*parts):
    return Partition(parts)


class TestCharge:
    def test_standard_words(self):
        assert charge((2, 1)) == 0
        assert charge((1, 2)) == 1
        assert charge((1, 2, 3)) == 3
        assert charge((3, 2, 1)) == 0

    def test_two_standard_subwords(self):
        # sous-mots 2 1 (charge 0) puis 1 2 (charge 1)
        assert charge((1, 2, 1, 2)) == 1
        assert charge((1, 1, 2, 2)) == 2
        assert charge((2, 1, 2, 1)) == 0

    def test_empty_word(self):
        assert charge(()) == 0

    def test_content_must_be_partition(self):
        with pytest.raises(InvalidWeight):
            charge((2, 2, 1))

    def test_tableau_reading_word(self):
        tableau = Tableau(((1, 1, 2), (2,)))
        assert tableau.reading_word() == (2, 1, 1, 2)
        assert tableau.shape == P(3, 1)
        assert tableau.content() == (2, 2)


class TestTableaux:
    def test_semistandard(self):
        assert Tableau(((1, 1), (2,))).is_semistandard()
        assert not Tableau(((1, 1), (1,))).is_semistandard()
        assert not Tableau(((2, 1),)).is_semistandard()

    def test_enum_ssyt(self):
        assert list(enum_ssyt(P(2, 1), (2, 1))) == [Tableau(((1, 1), (2,)))]
        assert len(list(enum_ssyt(P(2, 1), (1, 1, 1)))) == 2

    def test_enumerated_tableaux_are_valid(self):
        for tableau in enum_ssyt(P(3, 2, 1), (2, 2, 1, 1)):
            assert tableau.is_semistandard()
            assert tableau.content() == (2, 2, 1, 1)

    def test_size_mismatch(self):
        assert list(enum_ssyt(P(2), (1, 1, 1))) == []


class TestKostka:
    @pytest.mark.parametrize("shape, content, expected", [
        ((2,), (1, 1), (0, 1)),
        ((1, 1), (1, 1), (1,)),
        ((2, 1), (1, 1, 1), (0, 1, 1)),
        ((3,), (2, 1), (0, 1)),
        ((3,), (1, 1, 1), (0, 0, 0, 1)),
        ((2, 1), (2, 1), (1,)),
    ])
    def test_values(self, shape, content, expected):
        assert kostka(Partition(shape), Partition(content)) == QPoly(expected)

    def test_size_mismatch_is_zero(self):
        assert kostka(P(2), P(1)).is_zero()

    def test_dominance_zero(self):
        assert kostka(P(1, 1), P(2)).is_zero()

    def test_cocharge(self):
        assert kostka(P(2), P(1, 1), "cocharge") == QPoly.one()
        assert kostka(P(2, 1), P(1, 1, 1), "cocharge") == QPoly((0, 1, 1))

    def test_unknown_statistic(self):
        with pytest.raises(InvalidWeight):
            kostka(P(1), P(1), "major")

    def test_specializes_to_kostka_number(self):
        for n in range(1, 6):
            for shape in partitions(n, n):
                for content in partitions(n, n):
                    value = kostka(shape, content).eval_at_one()
                    assert value == kostka_number(shape, content.trimmed())

    def test_shape_equals_content(self):
        for shape in partitions(5, 5):
            assert kostka(shape, shape) == QPoly.one()


class TestVerifyKostka:
    def test_sl2_two_omega(self):
        result = verify_kostka(DominantWeight(1, (2,)))
        assert result.passed
        assert result.details["selected"] == "column/charge"
        assert result.details["decomposition"] == {"[2]": [1], "[1,1]": [0, 1]}

    def test_adjoint_rank_two(self):
        result = verify_kostka(DominantWeight(2, (1, 1)))
        assert result.passed, result.counterexample
        assert result.details["selected"] == "column/charge"
        assert result.details["decomposition"] == {"[2,1]": [1], "[1,1,1]": [0, 1]}

    def test_fundamental_single_term(self):
        result = verify_kostka(DominantWeight(2, (0, 1)))
        assert result.passed
        assert result.details["decomposition"] == {"[1,1]": [1]}
        assert "column/charge" in result.details["matching_readings"]

    def test_partition_reading_rejected(self):
        result = verify_kostka(DominantWeight(1, (2,)))
        assert "partition/charge" not in result.details["matching_readings"]

    def test_reuses_character(self):
        weight = DominantWeight(2, (2, 0))
        character = fermionic_character(weight)
        assert verify_kostka(weight, character).to_dict() == verify_kostka(weight).to_dict()

    def test_readings_listed_in_order(self):
        assert KOSTKA_READINGS[0] == ("partition", "charge")
        assert len(KOSTKA_READINGS) == 4

    @pytest.mark.slow
    def test_sweep(self):
        for rank in (1, 2):
            for weight in iter_dominant(rank, 3):
                result = verify_kostka(weight)
                assert result.passed, (weight, result.counterexample)
                assert result.details["selected"] == "column/charge", weight


class TestReadingResolution:
    ALL_READINGS = [f"{reading}/{statistic}" for reading, statistic in KOSTKA_READINGS]

    @pytest.mark.parametrize("m", [(0,), (1,), (0, 0), (1, 0), (0, 1)])
    def test_single_term_weights_keep_resolved_reading(self, m):
        result = verify_kostka(DominantWeight(len(m), m))
        assert result.passed
        assert result.details["matching_readings"] == self.ALL_READINGS
        assert result.details["discriminating"] is False
        assert result.details["selected"] == RESOLVED_READING == "column/charge"

    def test_discriminating_weight(self):
        result = verify_kostka(DominantWeight(1, (2,)))
        assert result.details["discriminating"] is True
        assert result.details["matching_readings"] == ["column/charge"]

    def test_select_reading(self):
        assert select_reading(self.ALL_READINGS) == "column/charge"
        assert select_reading(["partition/cocharge", "column/cocharge"]) == "partition/cocharge"
        assert select_reading([]) is None

    def test_resolution_over_sweep(self):
        results = [verify_kostka(weight) for rank in (1, 2) for weight in iter_dominant(rank, 2)]
        reading, common = resolve_kostka_reading(results)
        assert common == ["column/charge"]
        assert reading == "column/charge"

    def test_resolution_without_discriminating_weight(self):
        results = [verify_kostka(DominantWeight(2, (1, 0)))]
        reading, common = resolve_kostka_reading(results)
        assert common == self.ALL_READINGS
        assert reading == RESOLVED_READING
