"""Tests for the matrix representations and the exact Hom/Ext oracle."""

import numpy as np
import pytest

from dinfty_cluster.ar_translate import ARSequence, sequence_ending_at
from dinfty_cluster.exceptions import TruncationError
from dinfty_cluster.label_core import DimVector, a, a0, a1, b, dim_vector, labels_up_to
from dinfty_cluster.matrix_oracle import (
    RATIONAL,
    ExactField,
    build_rep,
    compose_nonzero,
    euler_form,
    ext_solve,
    hom_solve,
    nullspace_mod,
    oracle_hom,
    pair_bound,
    rref_mod,
    validate_ar_sequence,
)


class TestModularElimination:
    """Test row reduction and kernels over GF(p)."""

    def test_rref_detects_dependent_rows(self):
        """Test that proportional rows give a single pivot."""
        reduced, pivots = rref_mod(np.array([[2, 4], [1, 2]]), 5)
        assert pivots == [0]
        assert reduced[0].tolist() == [1, 2]
        assert not reduced[1].any()

    def test_nullspace_mod(self):
        """Test that kernel columns are annihilated by the matrix."""
        matrix = np.array([[1, 1, 0], [0, 1, 1]])
        basis = nullspace_mod(matrix, 7)
        assert basis.shape == (3, 1)
        assert not ((matrix @ basis) % 7).any()

    def test_full_rank_has_trivial_kernel(self):
        """Test an invertible matrix."""
        assert nullspace_mod(np.eye(3, dtype=np.int64), 11).shape == (3, 0)

    def test_rational_nullspace(self):
        """Test the sympy-backed kernel over the rationals."""
        basis = RATIONAL.nullspace(np.array([[1, 1]]))
        assert basis.shape == (2, 1)
        assert basis[0, 0] + basis[1, 0] == 0

    def test_field_names(self):
        """Test the printed names of fields."""
        assert str(ExactField.gf(1009)) == "GF(1009)"
        assert str(RATIONAL) == "QQ"


class TestBuildRep:
    """Test the realisation of labels as matrix representations."""

    def test_interval_is_identity_chain(self):
        """Test A(3,5) on the truncation to 0..7."""
        rep = build_rep(a(3, 5), 7)
        assert rep.dims == (0, 0, 0, 1, 1, 1, 0, 0)
        assert rep.maps[(4, 3)].tolist() == [[1]]
        assert rep.maps[(4, 5)].tolist() == [[1]]
        assert rep.maps[(6, 5)].shape == (1, 0)

    def test_degenerate_b(self):
        """Test B(1,2), which has no two-dimensional space."""
        rep = build_rep(b(1, 2), 5)
        assert rep.dims == (1, 1, 1, 0, 0, 0)
        assert rep.maps[(2, 0)].tolist() == [[1]]
        assert rep.maps[(2, 1)].tolist() == [[1]]
        assert rep.maps[(2, 3)].shape == (0, 1)

    def test_b_with_two_dimensional_range(self):
        """Test the dimension vector and brick property of B(3,6)."""
        rep = build_rep(b(3, 6), 8)
        assert rep.dims == (1, 1, 2, 2, 1, 1, 1, 0, 0)
        assert rep.dim_vector == dim_vector(b(3, 6))
        assert hom_solve(rep, rep).dim == 1

    def test_truncation_too_small(self):
        """Test that a support beyond the bound is rejected."""
        with pytest.raises(TruncationError):
            build_rep(a(3, 5), 4)
        with pytest.raises(TruncationError):
            build_rep(a1(1), 2)

    def test_every_label_is_a_brick(self):
        """Test End = k for every label supported in 0..7."""
        for label in labels_up_to(7):
            rep = build_rep(label, 8)
            assert hom_solve(rep, rep).dim == 1, label

    def test_bricks_over_the_rationals(self):
        """Test End = k over QQ for the labels supported in 0..5."""
        for label in labels_up_to(5):
            rep = build_rep(label, 6)
            assert hom_solve(rep, rep, RATIONAL).dim == 1, label


class TestHomSolve:
    """Test oracle Hom dimensions."""

    def test_projective_into_quasi_simple(self):
        """Test Hom(A1(1), B(1,2)) = 1."""
        bound = pair_bound(a1(1), b(1, 2))
        assert hom_solve(build_rep(a1(1), bound), build_rep(b(1, 2), bound)).dim == 1

    def test_disjoint_supports(self):
        """Test Hom(A0(1), A1(1)) = 0."""
        assert oracle_hom(a0(1), a1(1)) == 0

    def test_projective_hom_reads_dimension(self):
        """Test that Hom(P_5, B(5,7)) is the dimension at vertex 5 of the target."""
        assert oracle_hom(a(5, 5), b(5, 7)) == 2

    @pytest.mark.parametrize(
        "source, target",
        [
            (a1(1), b(1, 2)),
            (a(5, 5), b(5, 7)),
            (b(2, 5), a(3, 4)),
            (a0(3), a1(5)),
            (b(3, 6), b(1, 4)),
            (a(2, 3), a(2, 5)),
        ],
    )
    def test_truncation_independence(self, source, target):
        """Test that truncations past the supports, of either parity, give the same dimension."""
        base = pair_bound(source, target)
        dims = {hom_solve(build_rep(source, n), build_rep(target, n)).dim for n in range(base, base + 4)}
        assert dims == {oracle_hom(source, target)}

    def test_mismatched_truncations(self):
        """Test that both representations must use the same truncation."""
        with pytest.raises(TruncationError):
            hom_solve(build_rep(a(3, 5), 6), build_rep(a(3, 5), 7))

    def test_basis_morphisms_commute(self):
        """Test that each basis morphism satisfies the commutativity equations."""
        source, target = build_rep(a(5, 5), 8), build_rep(b(5, 7), 8)
        space = hom_solve(source, target)
        zero = {v: np.zeros((target.dims[v], source.dims[v]), dtype=np.int64) for v in range(9)}
        for morphism in space.basis:
            for (x, y), arrow in target.maps.items():
                left = arrow @ morphism.get(x, zero[x])
                right = morphism.get(y, zero[y]) @ source.maps[(x, y)]
                assert not ((left - right) % 1009).any()


class TestEulerForm:
    """Test the Euler form and oracle Ext."""

    def test_simple_at_sink(self):
        """Test <e0, e0> = 1."""
        assert euler_form(DimVector((1,)), DimVector((1,))) == 1

    def test_projective_pair(self):
        """Test the form and Ext for B(1,3) = P_2 against A(3,3)."""
        assert euler_form(dim_vector(b(1, 3)), dim_vector(a(3, 3))) == 0
        assert ext_solve(b(1, 3), a(3, 3)) == 0

    def test_boundary_extension(self):
        """Test Ext^1(A0(3), A1(1)) = 1."""
        assert ext_solve(a0(3), a1(1)) == 1


class TestComposeNonzero:
    """Test factorization witnesses."""

    def test_projective_through_boundary_successor(self):
        """Test P_5 -> A0(5) -> B(2,5)."""
        assert compose_nonzero(a(5, 5), a0(5), b(2, 5))

    def test_identity_composite(self):
        """Test that a brick composes with itself."""
        assert compose_nonzero(b(1, 2), b(1, 2), b(1, 2))

    def test_zero_first_factor(self):
        """Test that an empty first factor space gives False."""
        assert oracle_hom(a1(1), a0(3)) == 0
        assert not compose_nonzero(a1(1), a0(3), b(1, 2))


class TestValidateSequence:
    """Test certification of almost split sequences."""

    def test_mouth_sequence(self):
        """Test 0 -> A(3,4) -> B(1,4) -> B(1,2) -> 0."""
        sequence = sequence_ending_at(b(1, 2))
        assert sequence == ARSequence(a(3, 4), (b(1, 4),), b(1, 2))
        assert validate_ar_sequence(sequence, 6).passed

    def test_branch_sequence(self):
        """Test 0 -> B(2,4) -> A0(2) + A1(2) + A(2,4) -> A(2,2) -> 0."""
        sequence = ARSequence(b(2, 4), (a0(2), a1(2), a(2, 4)), a(2, 2))
        report = validate_ar_sequence(sequence, 6)
        assert report.passed
        assert report.ext == 1

    def test_corrupted_sequence_fails_additivity(self):
        """Test a sequence whose middle term has a wrong index."""
        report = validate_ar_sequence(ARSequence(a(3, 4), (b(1, 5),), b(1, 2)), 6)
        assert not report.passed
        assert "additive" in report.detail

    def test_terms_must_fit(self):
        """Test that the truncation must hold every term."""
        with pytest.raises(TruncationError):
            validate_ar_sequence(ARSequence(a(3, 4), (b(1, 4),), b(1, 2)), 3)
