import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkzmono import (
    DimensionMismatch,
    GaussRat,
    IntMatrix,
    InputError,
    hermite_normal_form,
    kernel_lattice_basis,
    lattice_member,
    parse_rational,
    smith_normal_form,
    solve_rational,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def is_hermite_canonical(H):
    pivots = []
    last = -1
    for row in H.data:
        cols = [j for j, x in enumerate(row) if x != 0]
        if not cols:
            last = H.cols  # zero rows only at the bottom from here on
            continue
        assert last < H.cols, "nonzero row below a zero row"
        p = cols[0]
        assert p > last, "pivots must move right"
        assert row[p] > 0, "pivot must be positive"
        pivots.append((len(pivots), p))
        last = p
    for r, p in pivots:
        for i in range(r):
            assert 0 <= H.data[i][p] < H.data[r][p], "entry above pivot not reduced"
    return True


class TestHermite:
    def test_identity(self):
        I = IntMatrix.identity(2)
        H, U = hermite_normal_form(I)
        assert H == I and U == I

    def test_already_in_form(self):
        M = IntMatrix([[2, 0], [0, 3]])
        H, U = hermite_normal_form(M)
        assert H == M and U == IntMatrix.identity(2)

    def test_2x2_with_remultiplication_oracle(self):
        M = IntMatrix([[2, 4], [1, 3]])
        H, U = hermite_normal_form(M)
        assert U @ M == H
        assert abs(U.det()) == 1
        assert abs(H.det()) == 2
        assert is_hermite_canonical(H)

    @settings(max_examples=80, deadline=None)
    @given(small_matrices)
    def test_properties(self, rows):
        M = IntMatrix(rows)
        H, U = hermite_normal_form(M)
        assert U @ M == H
        assert abs(U.det()) == 1
        assert is_hermite_canonical(H)
        # canonical form is a fixed point
        H2, _ = hermite_normal_form(H)
        assert H2 == H

    def test_determinism(self):
        M = IntMatrix([[3, -1, 2], [0, 4, 4], [7, 7, 7]])
        assert hermite_normal_form(M) == hermite_normal_form(M)

    def test_empty_rejected(self):
        with pytest.raises(DimensionMismatch):
            hermite_normal_form(IntMatrix([], cols=3))


class TestSmith:
    def test_identity(self):
        snf = smith_normal_form(IntMatrix.identity(3))
        assert snf.invariant_factors() == (1, 1, 1)

    @pytest.mark.parametrize(
        "rows,factors",
        [([[2, 0], [0, 3]], (1, 6)), ([[2, 0], [0, 2]], (2, 2))],
    )
    def test_invariant_factors(self, rows, factors):
        M = IntMatrix(rows)
        snf = smith_normal_form(M)
        assert snf.invariant_factors() == factors
        assert snf.U @ M @ snf.V == snf.S

    @settings(max_examples=80, deadline=None)
    @given(small_matrices)
    def test_properties(self, rows):
        M = IntMatrix(rows)
        snf = smith_normal_form(M)
        assert snf.U @ M @ snf.V == snf.S
        assert abs(snf.U.det()) == 1
        assert abs(snf.V.det()) == 1
        diag = [snf.S.data[i][i] for i in range(min(M.rows, M.cols))]
        for i in range(M.rows):
            for j in range(M.cols):
                if i != j:
                    assert snf.S.data[i][j] == 0
        assert all(x >= 0 for x in diag)
        nonzero = [x for x in diag if x != 0]
        assert diag[: len(nonzero)] == nonzero, "zeros must trail"
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0


class TestKernel:
    def test_injective(self):
        assert kernel_lattice_basis(IntMatrix.identity(2)) == ()

    def test_sum_map(self):
        assert kernel_lattice_basis(IntMatrix([[1, 1]])) == ((1, -1),)

    def test_quadric(self):
        assert kernel_lattice_basis(IntMatrix([[1, 1, 1], [0, 1, 2]])) == ((1, -2, 1),)

    def test_zero_rows(self):
        assert kernel_lattice_basis(IntMatrix([], cols=2)) == ((1, 0), (0, 1))

    @settings(max_examples=80, deadline=None)
    @given(small_matrices)
    def test_kernel_properties(self, rows):
        M = IntMatrix(rows)
        basis = kernel_lattice_basis(M)
        assert len(basis) == M.cols - M.rank()
        for u in basis:
            assert M.mat_vec(u) == tuple(0 for _ in range(M.rows))
        # saturation: small integer kernel vectors must already be members
        if M.cols <= 3:
            for cand in itertools.product(range(-3, 4), repeat=M.cols):
                if any(cand) and M.mat_vec(cand) == tuple(0 for _ in range(M.rows)):
                    assert lattice_member(basis, cand)


class TestSolve:
    def test_identity(self):
        x = solve_rational(IntMatrix.identity(2), [Fraction(5), Fraction(1, 3)])
        assert x == (Fraction(5), Fraction(1, 3))

    def test_underdetermined_by_substitution(self):
        A = IntMatrix([[1, 1]])
        x = solve_rational(A, [Fraction(3, 2)])
        assert x is not None
        assert sum(x) == Fraction(3, 2)

    def test_inconsistent(self):
        assert solve_rational(IntMatrix([[1, 0], [1, 0]]), [0, 1]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_rational(IntMatrix([[1, 0]]), [1, 2])


class TestLatticeMember:
    def test_standard_basis(self):
        basis = [(1, 0), (0, 1)]
        assert not lattice_member(basis, (Fraction(1, 2), 1))
        assert lattice_member(basis, (-3, 7))

    def test_scaled_lattice(self):
        L = [(2, 0), (0, 3)]
        assert lattice_member(L, (4, 3))
        assert not lattice_member(L, (1, 3))

    def test_empty_lattice(self):
        assert lattice_member([], (0, 0))
        assert not lattice_member([], (0, 1))

    def test_brute_force_agreement_3x3(self):
        rng = random.Random(5)
        for _ in range(40):
            L = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(3)]
            # planted member with coefficients bounded by 5
            coeffs = [rng.randint(-5, 5) for _ in range(3)]
            v = tuple(sum(c * row[k] for c, row in zip(coeffs, L)) for k in range(3))
            assert lattice_member(L, v)
            # brute-force certificate implies membership for arbitrary targets
            w = tuple(rng.randint(-6, 6) for _ in range(3))
            brute = any(
                tuple(sum(c * row[k] for c, row in zip(cs, L)) for k in range(3)) == w
                for cs in itertools.product(range(-5, 6), repeat=3)
            )
            if brute:
                assert lattice_member(L, w)

    def test_mismatched_lengths(self):
        with pytest.raises(DimensionMismatch):
            lattice_member([(1, 0, 0)], (1, 0))


class TestGaussRat:
    def test_parse_forms(self):
        assert GaussRat.parse("3/6") == GaussRat(Fraction(1, 2))
        assert GaussRat.parse(-2) == GaussRat(Fraction(-2))
        assert GaussRat.parse({"re": "1/2", "im": "-1/3"}) == GaussRat(
            Fraction(1, 2), Fraction(-1, 3)
        )

    def test_rejects_floats_and_garbage(self):
        for bad in ("0.5", "1e3", "1/0", "pi", ""):
            with pytest.raises(InputError):
                parse_rational(bad)
        with pytest.raises(InputError):
            GaussRat.parse(0.5)
        with pytest.raises(InputError):
            GaussRat.parse({"re": "1", "imag": "2"})

    def test_arithmetic(self):
        a = GaussRat(Fraction(1, 2), Fraction(1))
        b = GaussRat(Fraction(1, 2), Fraction(-1))
        assert a + b == GaussRat(Fraction(1))
        assert a - a == GaussRat()
        assert a * b == GaussRat(Fraction(5, 4))
        assert -a == GaussRat(Fraction(-1, 2), Fraction(-1))
        assert 2 * a == GaussRat(Fraction(1), Fraction(2))

    def test_predicates_and_json(self):
        assert GaussRat(Fraction(3)).is_integer
        assert not GaussRat(Fraction(1, 2)).is_integer
        assert GaussRat(Fraction(1, 2)).to_json() == "1/2"
        assert GaussRat(Fraction(0), Fraction(1)).to_json() == {"re": "0", "im": "1"}
        assert str(GaussRat(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3*i"


class TestIntMatrix:
    def test_requires_true_integers(self):
        with pytest.raises(TypeError):
            IntMatrix([[Fraction(1, 2)]])

    def test_ragged_rejected(self):
        with pytest.raises(DimensionMismatch):
            IntMatrix([[1, 2], [3]])

    def test_det_and_rank(self):
        M = IntMatrix([[2, 4], [1, 3]])
        assert M.det() == 2
        assert M.rank() == 2
        assert IntMatrix([[1, 2], [2, 4]]).rank() == 1

    def test_hashable_and_immutable(self):
        M = IntMatrix([[1]])
        assert hash(M) == hash(IntMatrix([[1]]))
        with pytest.raises(AttributeError):
            M.rows = 2
