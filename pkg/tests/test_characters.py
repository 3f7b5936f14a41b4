import pytest

from weylfusion.basis import count_basis
from weylfusion.characters import (
    ClassicalCharacter,
    GTPattern,
    GradedCharacter,
    character_from_basis,
    classical_character,
    decompose_graded,
    enum_gt_patterns,
    fermionic_character,
    recompose,
    sl2_graded_dimension,
    verify_demazure_factorization,
    verify_dimension,
    verify_fermionic_vs_basis,
    verify_grade_zero,
    verify_weyl_symmetry,
    weyl_dim,
)
from weylfusion.lattice import DominantWeight, Partition, WeightVector, iter_dominant, weight_to_partition
from weylfusion.qpoly import QPoly, qbinom
from weylfusion.utils.exceptions import DecompositionError, InvalidWeight
from weylfusion.utils.formatting import character_rows


def small_sweep():
    for rank, level in ((1, 4), (2, 3), (3, 2)):
        yield from iter_dominant(rank, level)


def full_sweep():
    for rank, level in ((1, 4), (2, 4), (3, 3)):
        yield from iter_dominant(rank, level)


class TestFermionic:
    def test_omega_sl2(self, dw, wv):
        ch = fermionic_character(dw(1))
        assert ch.table == {wv(1): QPoly.one(), wv(-1): QPoly.one()}

    def test_two_omega_sl2(self, dw, wv, poly):
        ch = fermionic_character(dw(2))
        assert ch.table == {wv(2): poly(1), wv(0): poly(1, 1), wv(-2): poly(1)}
        assert ch.mass() == 4

    def test_zero_weight(self, dw, wv):
        for rank in (1, 2, 3):
            ch = fermionic_character(DominantWeight.zero(rank))
            assert ch.table == {WeightVector.zero(rank): QPoly.one()}

    def test_defining_rep_rank_two(self, dw):
        ch = character_from_basis(dw(1, 0))
        assert len(ch) == 3
        assert all(ch[w] == QPoly.one() for w in ch)

    def test_adjoint_plus_trivial(self, dw, wv, poly):
        ch = fermionic_character(dw(1, 1))
        assert ch.mass() == 9
        assert ch[wv(0, 0)] == poly(2, 1)
        assert ch.top_grade() == 1

    def test_agrees_with_basis(self):
        for weight in small_sweep():
            assert fermionic_character(weight) == character_from_basis(weight), weight

    @pytest.mark.slow
    def test_agrees_with_basis_full(self):
        for weight in full_sweep():
            assert fermionic_character(weight) == character_from_basis(weight), weight

    def test_parallel_merge(self, dw):
        weight = dw(2, 1)
        assert fermionic_character(weight, threads=2) == fermionic_character(weight)
        assert character_from_basis(weight, threads=2) == character_from_basis(weight)

    def test_sl2_graded_dimension(self, dw):
        for n in range(9):
            expected = sum((qbinom(n, ell) for ell in range(n + 1)), QPoly.zero())
            assert sl2_graded_dimension(n) == expected
            assert character_from_basis(dw(n)).graded_dimension() == expected
            assert expected.eval_at_one() == 2 ** n


class TestClassical:
    def test_defining_rep(self, dw, wv):
        ch = classical_character(dw(1, 0))
        assert ch.table == {wv(1, 0): 1, wv(-1, 1): 1, wv(0, -1): 1}

    def test_adjoint(self, dw, wv):
        ch = classical_character(dw(1, 1))
        assert ch.dimension == 8
        assert ch[wv(0, 0)] == 2
        assert len(ch) == 7

    def test_sl2_string(self, dw):
        for n in range(6):
            ch = classical_character(dw(n))
            assert len(ch) == n + 1
            assert all(ch[w] == 1 for w in ch)

    @pytest.mark.parametrize("m, dim", [((1, 1), 8), ((0, 1, 0), 6), ((0, 0, 0), 1), ((2, 0), 6), ((1, 0, 1), 15)])
    def test_weyl_dim(self, m, dim):
        weight = DominantWeight(len(m), m)
        assert weyl_dim(weight) == dim
        assert classical_character(weight).dimension == dim

    def test_weyl_symmetric(self):
        for weight in iter_dominant(3, 2):
            assert classical_character(weight).is_weyl_symmetric()

    def test_gt_patterns_count(self, dw):
        patterns = list(enum_gt_patterns(weight_to_partition(dw(1, 1)), 2))
        assert len(patterns) == 8
        assert patterns[0].rows[0] == (2, 1, 0)

    def test_gt_pattern_interlacing(self):
        with pytest.raises(InvalidWeight):
            GTPattern(((2, 1, 0), (0, 1), (1,)))

    def test_gt_weight(self, wv):
        pattern = GTPattern(((2, 1, 0), (2, 0), (2,)))
        assert pattern.gl_weight() == (2, 0, 1)
        assert pattern.weight() == wv(2, -1)

    def test_product(self, dw):
        product = classical_character(dw(1, 0)) * classical_character(dw(0, 1))
        assert product.dimension == 9
        assert product == classical_character(dw(1, 1)) + classical_character(dw(0, 0))


class TestDecomposition:
    def test_two_omega(self, dw, poly):
        result = decompose_graded(fermionic_character(dw(2)))
        assert result == {Partition((2,)): poly(1), Partition((1, 1)): poly(0, 1)}

    def test_irreducible_graded(self, dw):
        assert decompose_graded(fermionic_character(dw(1, 0))) == {Partition((1,)): QPoly.one()}

    def test_classical_as_graded(self):
        for weight in iter_dominant(2, 3):
            result = decompose_graded(classical_character(weight).to_graded())
            assert result == {weight_to_partition(weight): QPoly.one()}

    def test_recompose_is_exact(self):
        for weight in small_sweep():
            ch = fermionic_character(weight)
            result = decompose_graded(ch)
            assert recompose(weight.rank, result) == ch
            assert all(c.is_nonnegative() for c in result.values())
            assert result[weight_to_partition(weight)] == QPoly.one()

    def test_explicit_size(self, dw, poly):
        result = decompose_graded(fermionic_character(dw(2)), size=4)
        assert result == {Partition((3, 1)): poly(1), Partition((2, 2)): poly(0, 1)}

    def test_not_a_character(self, wv):
        ch = GradedCharacter(1, {wv(2): QPoly.one(), wv(0): QPoly.one()})
        with pytest.raises(DecompositionError):
            decompose_graded(ch)

    def test_negative_coefficient(self, wv, poly):
        with pytest.raises(DecompositionError):
            decompose_graded(GradedCharacter(1, {wv(0): poly(-1)}))


class TestChecks:
    def test_demazure_factorization(self, dw):
        result = verify_demazure_factorization(dw(1, 1))
        assert result.passed
        assert result.details["mass"] == 9

    def test_demazure_sl2_binomial(self, dw, wv):
        from math import comb
        for n in range(6):
            at_one = fermionic_character(dw(n)).eval_at_one()
            assert at_one.table == {wv(n - 2 * k): comb(n, k) for k in range(n + 1)}
            assert verify_demazure_factorization(dw(n)).passed

    def test_sweep(self):
        for weight in small_sweep():
            ch = fermionic_character(weight)
            for result in (
                verify_dimension(weight, ch),
                verify_grade_zero(weight, ch),
                verify_weyl_symmetry(ch),
                verify_demazure_factorization(weight, ch),
            ):
                assert result.passed, (weight, result.name, result.counterexample)
            assert ch.mass() == count_basis(weight)

    def test_fermionic_vs_basis_check(self, dw):
        assert verify_fermionic_vs_basis(dw(1, 2)).passed

    def test_weyl_symmetry_detects_asymmetry(self, wv):
        ch = GradedCharacter(1, {wv(2): QPoly.one()})
        result = verify_weyl_symmetry(ch)
        assert not result.passed
        assert "t^0" in result.counterexample

    def test_json_schema(self, dw):
        data = fermionic_character(dw(2)).to_json()
        assert data == [
            {"weight": [-2], "poly": [1]},
            {"weight": [0], "poly": [1, 1]},
            {"weight": [2], "poly": [1]},
        ]

    def test_csv_rows(self, dw):
        rows = character_rows(fermionic_character(dw(2)).to_json())
        assert rows == [("-2", 0, 1), ("0", 0, 1), ("0", 1, 1), ("2", 0, 1)]

    def test_classical_trivial(self):
        assert ClassicalCharacter.trivial(2).dimension == 1
