"""Core state operations: construction, oracle, reflection, decomposition."""

import math

import numpy as np
import pytest

from groverlab import (
    CapacityError,
    DegeneratePlaneError,
    NormalizationError,
    SearchProblem,
    ShapeMismatchError,
    StateVector,
    apply_oracle,
    decompose_in_plane,
    inner_product,
    nonsolution_axis,
    reflect_about,
    solution_axis,
    success_probability,
    uniform_superposition,
)


def random_state(rng, dim):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(z / np.linalg.norm(z))


def plane_state(problem, angle):
    """State at a given plane angle, built from the two axes."""
    a = nonsolution_axis(problem).amplitudes
    b = solution_axis(problem).amplitudes
    return StateVector(math.cos(angle) * a + math.sin(angle) * b)


class TestStateVector:
    def test_construction_copies_input(self):
        raw = np.array([1.0, 0.0], dtype=np.complex128)
        sv = StateVector(raw)
        raw[0] = 99.0
        assert sv.amplitudes[0] == 1.0

    def test_rejects_non_unit_norm(self):
        with pytest.raises(NormalizationError):
            StateVector([1.0, 1.0])

    def test_rejects_empty_and_2d(self):
        with pytest.raises(ShapeMismatchError):
            StateVector([])
        with pytest.raises(ShapeMismatchError):
            StateVector(np.eye(2))

    def test_basis_state(self):
        e1 = StateVector.basis_state(4, 1)
        assert e1.amplitudes[1] == 1.0
        assert e1.norm() == 1.0
        with pytest.raises(ShapeMismatchError):
            StateVector.basis_state(4, 4)

    def test_from_unnormalized(self):
        sv = StateVector.from_unnormalized([3.0, 4.0])
        assert abs(sv.amplitudes[0] - 0.6) < 1e-15
        with pytest.raises(NormalizationError):
            StateVector.from_unnormalized([0.0, 0.0])


class TestSearchProblem:
    def test_basic_fields(self):
        p = SearchProblem(3, [5, 2])
        assert p.N == 8
        assert p.M == 2
        assert list(p.marked_indices()) == [2, 5]

    def test_rejects_empty_marked(self):
        with pytest.raises(DegeneratePlaneError):
            SearchProblem(3, [])

    def test_rejects_out_of_range(self):
        with pytest.raises(ShapeMismatchError):
            SearchProblem(2, [4])
        with pytest.raises(ShapeMismatchError):
            SearchProblem(2, [-1])

    def test_rejects_n_below_one(self):
        with pytest.raises(CapacityError):
            SearchProblem(0, [0])


class TestUniformSuperposition:
    def test_n1(self):
        sv = uniform_superposition(1)
        assert np.allclose(sv.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-15)

    def test_n2(self):
        sv = uniform_superposition(2)
        assert np.array_equal(sv.amplitudes, np.full(4, 0.5 + 0j))

    def test_n10_norm(self):
        assert abs(uniform_superposition(10).norm() - 1.0) < 1e-12

    def test_capacity_errors(self):
        with pytest.raises(CapacityError):
            uniform_superposition(0)
        with pytest.raises(CapacityError):
            uniform_superposition(25)
        # cap is configurable
        assert uniform_superposition(25, max_qubits=25).dim == 1 << 25


class TestInnerProduct:
    def test_self_is_one(self):
        rng = np.random.default_rng(3)
        sv = random_state(rng, 16)
        assert abs(inner_product(sv, sv) - 1.0) < 1e-12

    def test_orthogonal_basis(self):
        e0 = StateVector.basis_state(4, 0)
        e1 = StateVector.basis_state(4, 1)
        assert inner_product(e0, e1) == 0.0

    def test_uniform_vs_basis(self):
        assert inner_product(uniform_superposition(2),
                             StateVector.basis_state(4, 3)) == 0.5

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(4)
        a, b = random_state(rng, 8), random_state(rng, 8)
        assert inner_product(a, b) == pytest.approx(
            inner_product(b, a).conjugate(), abs=1e-15)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            inner_product(uniform_superposition(1), uniform_superposition(2))


class TestReflectAbout:
    def test_fixed_point(self):
        rng = np.random.default_rng(5)
        chi = random_state(rng, 8)
        out = reflect_about(chi, chi)
        assert np.allclose(out.amplitudes, chi.amplitudes, atol=1e-12)

    def test_orthogonal_negated(self):
        e0 = StateVector.basis_state(4, 0)
        e2 = StateVector.basis_state(4, 2)
        out = reflect_about(e0, e2)
        assert np.allclose(out.amplitudes, -e2.amplitudes, atol=1e-15)

    def test_planar_mirror(self):
        a = 0.7
        axis = StateVector([1.0, 0.0])
        target = StateVector([math.cos(a), math.sin(a)])
        out = reflect_about(axis, target)
        assert np.allclose(out.amplitudes, [math.cos(a), -math.sin(a)],
                           atol=1e-15)

    def test_involution(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            chi, phi = random_state(rng, 16), random_state(rng, 16)
            back = reflect_about(chi, reflect_about(chi, phi))
            assert np.max(np.abs(back.amplitudes - phi.amplitudes)) < 1e-10

    def test_non_unit_axis_rejected(self):
        bad = StateVector.from_unnormalized([1.0, 1.0])
        bad.amplitudes *= 1.001  # corrupt past the axis tolerance
        with pytest.raises(NormalizationError):
            reflect_about(bad, StateVector.basis_state(2, 0))

    def test_matches_dense_matrix(self):
        # brute-force oracle: the explicit matrix 2|chi><chi| - I
        rng = np.random.default_rng(7)
        for dim in (2, 8, 64):
            chi, phi = random_state(rng, dim), random_state(rng, dim)
            dense = 2.0 * np.outer(chi.amplitudes, chi.amplitudes.conj()) \
                - np.eye(dim)
            expected = dense @ phi.amplitudes
            got = reflect_about(chi, phi).amplitudes
            assert np.max(np.abs(got - expected)) < 1e-12


class TestApplyOracle:
    def test_sign_flip_at_marked(self):
        p = SearchProblem(2, [3])
        out = apply_oracle(p, uniform_superposition(2))
        assert np.allclose(out.amplitudes, [0.5, 0.5, 0.5, -0.5], atol=1e-15)

    def test_involution(self):
        rng = np.random.default_rng(8)
        p = SearchProblem(4, [1, 7, 9])
        sv = random_state(rng, 16)
        back = apply_oracle(p, apply_oracle(p, sv))
        assert np.array_equal(back.amplitudes, sv.amplitudes)

    def test_probabilities_unchanged(self):
        rng = np.random.default_rng(9)
        p = SearchProblem(3, [0, 5])
        sv = random_state(rng, 8)
        out = apply_oracle(p, sv)
        assert np.allclose(np.abs(out.amplitudes) ** 2,
                           np.abs(sv.amplitudes) ** 2, atol=1e-15)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            apply_oracle(SearchProblem(3, [0]), uniform_superposition(2))


class TestDecomposeInPlane:
    def test_uniform_single_marked(self):
        for n in (2, 5, 10):
            p = SearchProblem(n, [0])
            coords = decompose_in_plane(p, uniform_superposition(n))
            expected = math.asin(1.0 / math.sqrt(p.N))
            assert abs(coords.angle - expected) < 1e-12
            assert coords.residual < 1e-12

    def test_solution_axis_is_right_angle(self):
        p = SearchProblem(4, [3, 11])
        coords = decompose_in_plane(p, solution_axis(p))
        assert coords.angle == pytest.approx(math.pi / 2, abs=1e-15)

    def test_angles_beyond_right_angle_preserved(self):
        # the convention must keep obtuse in-plane angles distinguishable
        p = SearchProblem(4, [2])
        for angle in (0.3, 1.2, math.pi / 2, 2.0, 2.9):
            coords = decompose_in_plane(p, plane_state(p, angle))
            assert abs(coords.angle - angle) < 1e-12
            assert coords.residual < 1e-12

    def test_global_phase_removed(self):
        p = SearchProblem(3, [1])
        base = plane_state(p, 0.8)
        rotated = StateVector(base.amplitudes * np.exp(0.77j))
        c0 = decompose_in_plane(p, base)
        c1 = decompose_in_plane(p, rotated)
        assert abs(c0.angle - c1.angle) < 1e-12

    def test_out_of_plane_residual_reported(self):
        rng = np.random.default_rng(10)
        p = SearchProblem(4, [0])
        sv = random_state(rng, 16)
        coords = decompose_in_plane(p, sv)
        assert coords.residual > 0.1

    def test_degenerate_when_all_marked(self):
        p = SearchProblem(2, [0, 1, 2, 3])
        with pytest.raises(DegeneratePlaneError):
            decompose_in_plane(p, uniform_superposition(2))


class TestSuccessProbability:
    def test_uniform(self):
        p = SearchProblem(3, [1, 2])
        assert success_probability(p, uniform_superposition(3)) == \
            pytest.approx(0.25, abs=1e-15)

    def test_solution_axis(self):
        p = SearchProblem(3, [4])
        assert success_probability(p, solution_axis(p)) == 1.0


def test_unitarity_chain():
    # long random compositions of the two operators keep unit norm
    rng = np.random.default_rng(11)
    p = SearchProblem(5, [3, 17])
    axes = [random_state(rng, 32) for _ in range(4)]
    state = uniform_superposition(5)
    for i in range(1000):
        if rng.integers(2):
            state = apply_oracle(p, state)
        else:
            state = reflect_about(axes[int(rng.integers(4))], state)
        assert abs(state.norm() - 1.0) < 1e-10, f"norm drifted at step {i}"


def test_plane_confinement():
    # axes inside the plane keep the dynamics inside the plane
    rng = np.random.default_rng(12)
    p = SearchProblem(6, [7])
    state = uniform_superposition(6)
    for i in range(200):
        if rng.integers(2):
            state = apply_oracle(p, state)
        else:
            state = reflect_about(plane_state(p, rng.uniform(0, math.pi)),
                                  state)
        residual = decompose_in_plane(p, state).residual
        assert residual < 1e-10, f"left the plane at step {i}"
