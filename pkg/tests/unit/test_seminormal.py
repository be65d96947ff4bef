"""Tests for the seminormal generator matrices."""

import random
from fractions import Fraction

import pytest

from partition_algebra.diagrams.standardform import E, F, S, Word, parse_word
from partition_algebra.exactratio import ONE, Q, RatFunc, rf_parse
from partition_algebra.representations.bratteli import (
    AugShape,
    Direction,
    Partition,
    ShapeKind,
    dims,
    neighbors,
    partitions_of,
    tableaux,
    to_doubled,
    vertices,
)
from partition_algebra.representations.matrices import (
    identity,
    mat_equal,
    mat_mul,
    mat_scale,
    trace,
)
from partition_algebra.representations.seminormal import (
    AxialData,
    SeminormalForm,
    axial_distance,
    e_matrix,
    f_matrix,
    faithfulness_rank,
    hook_ratio,
    iter_generators,
    letter_available,
    rep_of_word,
    s_matrix,
    trace_of,
)
from partition_algebra.utils.exceptions import (
    CoordinateOutOfRangeError,
    DivisionByZeroError,
    NotACoveringChainError,
    NotOneBoxApartError,
    ReductiveUnsupportedError,
)


def _block(matrix, rows):
    return [[matrix[r][c] for c in rows] for r in rows]


class TestHookRatio:
    """Test ratios of augmented hook products."""

    @pytest.mark.parametrize(
        "big,small,expected",
        [
            (AugShape.tilde(), AugShape.hat(), "Q"),
            (AugShape.tilde(1), AugShape.hat(), "Q/(Q-1)"),
            (AugShape.tilde(1), AugShape.hat(1), "Q*(Q-2)/(Q-1)"),
            (AugShape.tilde(2), AugShape.hat(1), "2*(Q-2)/(Q-3)"),
            (AugShape.tilde(1, 1), AugShape.hat(1, 1), "Q*(Q-3)/(Q-1)"),
            (AugShape.tilde(1, 1), AugShape.hat(1), "2*Q/(Q-1)"),
            (AugShape.tilde(2), AugShape.hat(2), "(Q-1)*(Q-4)/(Q-3)"),
            (AugShape.tilde(2, 1), AugShape.hat(2), "3*(Q-1)/(2*(Q-2))"),
            (AugShape.tilde(2, 1), AugShape.hat(1, 1), "3*(Q-3)/(2*(Q-4))"),
            (AugShape.tilde(2, 1), AugShape.hat(2, 1), "(Q-1)*(Q-3)*(Q-5)/((Q-2)*(Q-4))"),
        ],
    )
    def test_golden_values(self, big, small, expected):
        """Test ratios shown in the worked E examples."""
        assert hook_ratio(big, small) == rf_parse(expected)

    @pytest.mark.parametrize(
        "big,small,expected",
        [
            (AugShape.tilde(), AugShape.hat(), "1/Q"),
            (AugShape.tilde(1), AugShape.hat(), "(Q-1)/Q"),
            (AugShape.tilde(1), AugShape.hat(1), "(Q-1)/(Q*(Q-2))"),
            (AugShape.tilde(2), AugShape.hat(1), "(Q-3)/(2*(Q-2))"),
            (AugShape.tilde(1, 1), AugShape.hat(1), "(Q-1)/(2*Q)"),
            (AugShape.tilde(2, 1), AugShape.hat(2), "2*(Q-2)/(3*(Q-1))"),
        ],
    )
    def test_reciprocal_golden_values(self, big, small, expected):
        """Test reciprocals shown in the worked F examples."""
        assert hook_ratio(big, small).inverse() == rf_parse(expected)

    def test_printed_form(self):
        """Test the string of 2(Q-2)/(Q-3)."""
        assert str(hook_ratio(AugShape.tilde(2), AugShape.hat(1))) == "(2*Q - 4) / (Q - 3)"

    @pytest.mark.parametrize("size", [0, 1, 2, 3, 4])
    def test_row_sums_are_q(self, size):
        """Test the ratios over every box removable from ~λ sum to Q."""
        for lam in partitions_of(size):
            big = AugShape(kind=ShapeKind.TILDE, core=lam)
            total = sum(
                (hook_ratio(big, small) for small in neighbors(big, Direction.DOWN)),
                RatFunc(),
            )
            assert total == Q, lam

    @pytest.mark.parametrize("size", [0, 1, 2, 3, 4])
    def test_column_sums_are_one(self, size):
        """Test the reciprocal ratios over every box addable to ^μ sum to 1."""
        for mu in partitions_of(size):
            small = AugShape(kind=ShapeKind.HAT, core=mu)
            total = sum(
                (hook_ratio(big, small).inverse() for big in neighbors(small, Direction.UP)),
                RatFunc(),
            )
            assert total == ONE, mu

    def test_not_one_box_apart_raises(self):
        """Test ^[2] is not ~[1] minus a box."""
        with pytest.raises(NotOneBoxApartError):
            hook_ratio(AugShape.tilde(1), AugShape.hat(2))
        with pytest.raises(NotOneBoxApartError):
            hook_ratio(AugShape.hat(1), AugShape.tilde(1))


class TestAxialDistance:
    """Test axial distances and the two-path blocks."""

    @pytest.mark.parametrize(
        "nu,mu,lam,expected",
        [((), (1,), (2,), 1), ((), (1,), (1, 1), -1), ((1,), (2,), (2, 1), -2)],
    )
    def test_examples(self, nu, mu, lam, expected):
        """Test the worked chains."""
        chain = [Partition(parts=p) for p in (nu, mu, lam)]
        assert axial_distance(*chain) == expected

    def test_not_a_chain_raises(self):
        """Test (1) does not cover (1)."""
        with pytest.raises(NotACoveringChainError):
            axial_distance(Partition(parts=(1,)), Partition(parts=(1,)), Partition(parts=(2,)))

    def test_two_path_block(self):
        """Test d = -2 with c = 1 gives [[-1/2, 3/4], [1, 1/2]]."""
        block = AxialData(d=-2, c=ONE).block()
        expected = [[Fraction(-1, 2), Fraction(3, 4)], [1, Fraction(1, 2)]]
        assert block == [[RatFunc.coerce(x) for x in row] for row in expected]

    def test_two_path_block_squares_to_identity(self):
        """Test the block is an involution for symbolic c."""
        block = AxialData(d=3, c=Q + 1).block()
        assert mat_mul(block, block) == identity(2)


class TestEMatrices:
    """Test images of e_i."""

    def test_cut_on_trivial_module(self):
        """Test e1 acts by Q on ~[] at level 1."""
        matrix = e_matrix(1, AugShape.tilde(), 1).matrix()
        assert matrix == [[Q]]

    def test_block_for_one_box(self):
        """Test the 2x2 block of e2 over ^[] and ^[1] on ~[1] at level 2."""
        rep = e_matrix(2, AugShape.tilde(1), 2)
        basis = [str(t) for t in rep.basis]
        rows = [basis.index("~[] ^[] ~[1] ^[] ~[1]"), basis.index("~[] ^[] ~[1] ^[1] ~[1]")]
        block = _block(rep.matrix(), rows)
        first, second = rf_parse("Q/(Q-1)"), rf_parse("Q*(Q-2)/(Q-1)")
        assert block == [[first, first], [second, second]]

    @pytest.mark.parametrize("level", [1, 2, 3])
    def test_cut_squared_is_q_times_cut(self, level):
        """Test E_i E_i = Q E_i on every module."""
        for target in vertices(level):
            for i in range(1, level + 1):
                m = e_matrix(i, target, level).matrix()
                assert mat_equal(mat_mul(m, m), mat_scale(m, Q))

    def test_out_of_range_raises(self):
        """Test e2 does not act at level 3/2."""
        with pytest.raises(CoordinateOutOfRangeError):
            e_matrix(2, AugShape.hat(), "3/2")


class TestFMatrices:
    """Test images of f_i."""

    def test_rows_over_empty_shape(self):
        """Test f1 on ~[] at level 2 has equal rows (1/Q, (Q-1)/Q)."""
        rep = f_matrix(1, AugShape.tilde(), 2)
        matrix = rep.matrix()
        basis = [str(t) for t in rep.basis]
        cols = [basis.index("~[] ^[] ~[] ^[] ~[]"), basis.index("~[] ^[] ~[1] ^[] ~[]")]
        expected = [rf_parse("1/Q"), rf_parse("(Q-1)/Q")]
        for r in cols:
            assert [matrix[r][c] for c in cols] == expected

    def test_rows_over_one_box(self):
        """Test f2 on ^[1] at level 5/2 has the three-column rows."""
        rep = f_matrix(2, AugShape.hat(1), "5/2")
        matrix = rep.matrix()
        basis = [str(t) for t in rep.basis]
        prefix = "~[] ^[] ~[1] ^[1] "
        cols = [basis.index(prefix + mid + " ^[1]") for mid in ("~[1]", "~[2]", "~[1,1]")]
        expected = [rf_parse(x) for x in ("(Q-1)/(Q*(Q-2))", "(Q-3)/(2*(Q-2))", "(Q-1)/(2*Q)")]
        for r in cols:
            assert [matrix[r][c] for c in cols] == expected

    @pytest.mark.parametrize("level", ["3/2", 2, "5/2", 3])
    def test_fusion_is_idempotent(self, level):
        """Test F_i F_i = F_i on every module."""
        form = SeminormalForm()
        for target in vertices(level):
            for i in (1, 2):
                if not letter_available(F(i), to_doubled(level)):
                    continue
                m = form.generator(F(i), target, level).matrix()
                assert mat_equal(mat_mul(m, m), m)


class TestSMatrices:
    """Test images of s_i."""

    @pytest.mark.parametrize("c", [1, 2])
    @pytest.mark.parametrize("level", [2, "5/2", 3])
    def test_transposition_is_an_involution(self, level, c):
        """Test S_i S_i = 1 on every module."""
        for target in vertices(level):
            size = len(tableaux(target, level))
            for i in (1, 2):
                if not letter_available(S(i), to_doubled(level)):
                    continue
                m = s_matrix(i, target, level, c=c).matrix()
                assert mat_equal(mat_mul(m, m), identity(size))

    def test_non_reductive_pair(self):
        """Test the two-path block through (2) and (1,1) on ~[2,1] at level 3."""
        rep = s_matrix(2, AugShape.tilde(2, 1), 3)
        basis = [str(t) for t in rep.basis]
        rows = [
            basis.index("~[] ^[] ~[1] ^[1] ~[2] ^[2] ~[2,1]"),
            basis.index("~[] ^[] ~[1] ^[1] ~[1,1] ^[1,1] ~[2,1]"),
        ]
        expected = [[Fraction(-1, 2), Fraction(3, 4)], [1, Fraction(1, 2)]]
        assert _block(rep.matrix(), rows) == [[RatFunc.coerce(x) for x in r] for r in expected]

    def test_zero_c_raises(self):
        """Test c = 0 raises DivisionByZeroError."""
        with pytest.raises(DivisionByZeroError):
            SeminormalForm(c=0)

    def test_untabulated_reductive_pattern_raises(self):
        """Test s3 on a reductive path at level 4 raises ReductiveUnsupportedError."""
        with pytest.raises(ReductiveUnsupportedError):
            s_matrix(3, AugShape.tilde(), 4)

    def test_header_lists_basis(self):
        """Test the matrix header names the letter, shape and tableaux."""
        rep = s_matrix(1, AugShape.tilde(1), 2)
        header = rep.header()
        assert header[0] == f"# s1 on ~[1] at level 2, dimension {rep.size}"
        assert header[1].startswith("# 1: ~[] ^[]")


class TestWords:
    """Test matrices of words."""

    def test_empty_word_is_identity(self):
        """Test the empty word on ~[1] at level 2."""
        size = dims(2)[AugShape.tilde(1)]
        assert rep_of_word(Word(), AugShape.tilde(1), 2) == identity(size)

    def test_fef_is_f(self):
        """Test f1 e1 f1 = f1 on every module at level 2."""
        for target in vertices(2):
            left = rep_of_word(parse_word("f1 e1 f1"), target, 2)
            assert mat_equal(left, f_matrix(1, target, 2).matrix())

    @pytest.mark.parametrize("c", [1, 2])
    def test_conjugating_cut_shifts_index(self, c):
        """Test s_i e_i s_i = e_{i+1} on every module at level 3."""
        for target in vertices(3):
            for i in (1, 2):
                left = rep_of_word(Word.of(S(i), E(i), S(i)), target, 3, c=c)
                assert mat_equal(left, e_matrix(i + 1, target, 3).matrix())

    def test_letter_out_of_range_raises(self):
        """Test f2 does not act at level 2."""
        with pytest.raises(CoordinateOutOfRangeError):
            rep_of_word(Word.of(F(2)), AugShape.tilde(), 2)


class TestTraces:
    """Test traces of words."""

    def test_empty_word_gives_dimensions(self):
        """Test trace of 1 is the dimension at level 3."""
        traces = trace_of(Word(), 3)
        assert {v: t for v, t in traces.items()} == {
            v: RatFunc.coerce(d) for v, d in dims(3).items()
        }

    def test_cut_on_trivial_module(self):
        """Test trace of e1 on ~[] at level 1 is Q."""
        assert trace_of(Word.of(E(1)), 1)[AugShape.tilde()] == Q

    def test_cyclicity_on_level_two(self):
        """Test tr(uv) = tr(vu) on seeded random words at level 2."""
        self._check_cyclicity(2, pairs=20, seed=1)

    @pytest.mark.slow
    def test_cyclicity_on_level_three(self):
        """Test tr(uv) = tr(vu) on 100 seeded random word pairs at level 3."""
        self._check_cyclicity(3, pairs=100, seed=0)

    @staticmethod
    def _check_cyclicity(level, pairs, seed):
        rng = random.Random(seed)
        letters = list(iter_generators(2 * level, level))
        form = SeminormalForm()
        for _ in range(pairs):
            u = Word(letters=tuple(rng.choice(letters) for _ in range(rng.randint(1, 3))))
            v = Word(letters=tuple(rng.choice(letters) for _ in range(rng.randint(1, 3))))
            for target in vertices(level):
                assert trace(form.word(u + v, target, level)) == trace(
                    form.word(v + u, target, level)
                )


class TestFaithfulness:
    """Test ranks of the diagram basis at a specialization."""

    @pytest.mark.parametrize("level,expected", [(1, 2), ("3/2", 5), (2, 15)])
    def test_small_levels(self, level, expected):
        """Test the rank equals the number of diagrams."""
        assert faithfulness_rank(level, q0=101) == expected

    @pytest.mark.slow
    def test_half_level(self):
        """Test rank 52 at level 5/2."""
        assert faithfulness_rank("5/2", q0=101) == 52

    @pytest.mark.slow
    def test_level_three(self):
        """Test rank 203 at level 3."""
        assert faithfulness_rank(3, q0=101) == 203

    @pytest.mark.slow
    def test_level_seven_halves(self):
        """Test rank 877 at level 7/2."""
        assert faithfulness_rank("7/2", q0=101) == 877
