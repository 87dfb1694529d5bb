"""Tests for operator constructors and seeded samplers."""

import math

import numpy as np
import pytest

from entpow.densemat import frobenius_norm_sq, matmul, trace, unitarity_defect
from entpow.entanglement import state_linear_entropy
from entpow.operators import (
    ControlledUSpec,
    PureStateVector,
    controlled_u,
    exp_swap,
    haar_unitary,
    identity_op,
    max_entangled_projector,
    product_state_batch,
    random_product_state,
    swap_op,
)
from entpow.rearrange import partial_transpose_first, realign


def haar_spec(d, seed):
    """Controlled-U spec with d independent Haar blocks."""
    return ControlledUSpec(d, tuple(haar_unitary(d, seed + n) for n in range(d)))


class TestIdentityAndSwap:
    def test_identity_matrix(self):
        assert np.array_equal(identity_op(2).mat, np.eye(4, dtype=complex))
        assert identity_op(3).mat.shape == (9, 9)

    def test_identity_is_exactly_unitary(self):
        assert unitarity_defect(identity_op(3).mat) == 0.0

    def test_swap_d2_by_hand(self):
        expected = np.array(
            [
                [1, 0, 0, 0],
                [0, 0, 1, 0],
                [0, 1, 0, 0],
                [0, 0, 0, 1],
            ],
            dtype=complex,
        )
        assert np.array_equal(swap_op(2).mat, expected)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_swap_squares_to_identity(self, d):
        s = swap_op(d).mat
        assert np.array_equal(matmul(s, s), identity_op(d).mat)

    @pytest.mark.parametrize("d", [2, 3])
    def test_swap_action_on_basis(self, d):
        s = swap_op(d).mat
        for i in range(d):
            for j in range(d):
                vec = np.zeros(d * d, dtype=complex)
                vec[i * d + j] = 1.0
                out = s @ vec
                assert out[j * d + i] == 1.0
                assert np.count_nonzero(out) == 1

    def test_rejects_small_dimension(self):
        for ctor in (identity_op, swap_op, max_entangled_projector):
            with pytest.raises(ValueError):
                ctor(1)


class TestMaxEntangledProjector:
    def test_d2_by_hand(self):
        expected = 0.5 * np.array(
            [
                [1, 0, 0, 1],
                [0, 0, 0, 0],
                [0, 0, 0, 0],
                [1, 0, 0, 1],
            ],
            dtype=complex,
        )
        assert np.array_equal(max_entangled_projector(2).mat, expected)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_idempotent_rank_one(self, d):
        p = max_entangled_projector(d).mat
        np.testing.assert_allclose(p @ p, p, atol=1e-15)
        assert trace(p).real == pytest.approx(1.0, abs=1e-14)
        assert frobenius_norm_sq(p) == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_is_realigned_identity(self, d):
        expected = realign(identity_op(d)).mat
        assert np.array_equal(d * max_entangled_projector(d).mat, expected)


class TestExpSwap:
    def test_t_zero_is_identity(self):
        assert exp_swap(3, 0.0).mat.tobytes() == identity_op(3).mat.tobytes()

    def test_t_half_pi_is_minus_i_swap(self):
        got = exp_swap(2, math.pi / 2).mat
        np.testing.assert_allclose(got, -1j * swap_op(2).mat, atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3])
    def test_unitary_along_the_family(self, d):
        for t in np.linspace(-2.0, 2.0, 9):
            assert unitarity_defect(exp_swap(d, t).mat) <= 1e-12

    @pytest.mark.parametrize("d", [2, 3])
    def test_group_law(self, d):
        rng = np.random.default_rng(61)
        for _ in range(10):
            t, s = rng.uniform(-3, 3, size=2)
            product = matmul(exp_swap(d, t).mat, exp_swap(d, s).mat)
            assert np.abs(product - exp_swap(d, t + s).mat).max() <= 1e-12

    def test_sqrt_swap_squares_to_swap_phase(self):
        v = exp_swap(2, math.pi / 4).mat
        assert np.abs(matmul(v, v) - exp_swap(2, math.pi / 2).mat).max() <= 1e-12

    def test_rejects_non_finite_parameter(self):
        with pytest.raises(ValueError, match="finite"):
            exp_swap(2, math.nan)
        with pytest.raises(ValueError, match="finite"):
            exp_swap(2, math.inf)


class TestControlledU:
    def test_cnot_matrix(self):
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        gate = controlled_u(ControlledUSpec(2, (np.eye(2), x)))
        expected = np.array(
            [
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 0, 1],
                [0, 0, 1, 0],
            ],
            dtype=complex,
        )
        assert np.array_equal(gate.mat, expected)

    @pytest.mark.parametrize("d", [2, 3])
    def test_action_on_product_basis(self, d):
        spec = haar_spec(d, seed=200 + d)
        gate = controlled_u(spec)
        rng = np.random.default_rng(71)
        phi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        phi /= np.linalg.norm(phi)
        for n in range(d):
            e_n = np.zeros(d, dtype=complex)
            e_n[n] = 1.0
            state = np.kron(e_n, phi)
            expected = np.kron(e_n, spec.blocks[n] @ phi)
            assert np.abs(gate.mat @ state - expected).max() <= 1e-12

    @pytest.mark.parametrize("d", [2, 3])
    def test_invariant_under_first_partial_transpose(self, d):
        gate = controlled_u(haar_spec(d, seed=210 + d))
        assert partial_transpose_first(gate).mat.tobytes() == gate.mat.tobytes()

    def test_wrong_block_count(self):
        with pytest.raises(ValueError, match="exactly 3 blocks"):
            ControlledUSpec(3, (np.eye(3), np.eye(3)))

    def test_non_unitary_block_named(self):
        with pytest.raises(ValueError, match="block 1"):
            ControlledUSpec(2, (np.eye(2), 2.0 * np.eye(2)))

    def test_wrong_block_shape_named(self):
        with pytest.raises(ValueError, match="block 0"):
            ControlledUSpec(2, (np.eye(3), np.eye(2)))


class TestHaarUnitary:
    @pytest.mark.parametrize("d_total", [2, 4, 9])
    def test_unitarity(self, d_total):
        for seed in range(5):
            assert unitarity_defect(haar_unitary(d_total, seed)) <= 1e-12

    def test_deterministic_in_seed(self):
        a = haar_unitary(4, seed=42)
        b = haar_unitary(4, seed=42)
        assert a.tobytes() == b.tobytes()

    def test_different_seeds_differ(self):
        a = haar_unitary(4, seed=1)
        b = haar_unitary(4, seed=2)
        assert np.abs(a - b).max() > 1e-6

    def test_one_dimensional_case_is_phase(self):
        u = haar_unitary(1, seed=7)
        assert u.shape == (1, 1)
        assert abs(abs(u[0, 0]) - 1.0) <= 1e-12

    def test_rejects_non_positive_dimension(self):
        with pytest.raises(ValueError):
            haar_unitary(0, seed=1)

    def test_trace_moment(self):
        # For Haar measure, E[|Tr U|^2] = 1 at any dimension.
        samples = [abs(np.trace(haar_unitary(4, seed))) ** 2 for seed in range(2000)]
        assert np.mean(samples) == pytest.approx(1.0, abs=0.1)


class TestProductStates:
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_normalized(self, d):
        psi = random_product_state(d, seed=5)
        assert np.sum(np.abs(psi.amplitudes) ** 2) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_zero_linear_entropy(self, d):
        psi = random_product_state(d, seed=6)
        assert abs(state_linear_entropy(psi.coefficient_matrix())) <= 1e-12

    def test_deterministic_in_seed(self):
        a = random_product_state(3, seed=9)
        b = random_product_state(3, seed=9)
        assert a.amplitudes.tobytes() == b.amplitudes.tobytes()

    def test_matches_batch_sampler(self):
        d, seed = 3, 17
        single = random_product_state(d, seed)
        batch = product_state_batch(np.random.default_rng(seed), 1, d)
        assert single.amplitudes.tobytes() == batch[0].tobytes()

    def test_batch_rows_are_product_states(self):
        d = 3
        batch = product_state_batch(np.random.default_rng(23), 50, d)
        norms = np.sum(np.abs(batch) ** 2, axis=1)
        np.testing.assert_allclose(norms, 1.0, atol=1e-12)
        for row in batch[:10]:
            assert abs(state_linear_entropy(row.reshape(d, d))) <= 1e-12


class TestPureStateVector:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="not normalized"):
            PureStateVector(2, np.array([1.0, 1.0, 0.0, 0.0]))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="amplitudes"):
            PureStateVector(2, np.zeros(3, dtype=complex))

    def test_coefficient_matrix_layout(self):
        amp = np.zeros(4, dtype=complex)
        amp[1] = 1.0  # the |0>|1> basis state
        psi = PureStateVector(2, amp)
        a = psi.coefficient_matrix()
        assert a[0, 1] == 1.0
        assert np.count_nonzero(a) == 1

    def test_amplitudes_read_only(self):
        psi = random_product_state(2, seed=3)
        with pytest.raises(ValueError):
            psi.amplitudes[0] = 0.0
