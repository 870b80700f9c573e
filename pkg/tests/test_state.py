"""Tests for the four-qubit state value (core/state.py)."""

import itertools
import math

import numpy as np
import pytest

from conftest import random_state
from fourq_slocc.core.errors import NonFinite, QubitOutOfRange, WrongLength, ZeroState
from fourq_slocc.core.state import (
    ComplexTolerance,
    basis_bits,
    basis_index,
    equal_up_to_global_phase,
    inner_product,
    linear_combination,
    make_state,
    scale_state,
    state_from_terms,
    swap_qubits,
)

C = 1 / (2 * math.sqrt(2))


def ket(label: str):
    return state_from_terms({label: 1.0})


class TestMakeState:
    def test_basis_ket(self):
        state = make_state([1] + [0] * 15)
        assert state.norm == 1.0
        assert state[0] == 1.0

    def test_chi_amplitude_list(self):
        amps = [0.0] * 16
        for k in (0, 6, 9, 10, 12, 15):
            amps[k] = C
        for k in (3, 5):
            amps[k] = -C
        state = make_state(amps)
        assert state.norm == pytest.approx(1.0, abs=1e-15)

    def test_not_normalized(self):
        state = make_state([3, 4] + [0] * 14)
        assert state.norm == pytest.approx(5.0)
        assert state[1] == 4.0

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroState):
            make_state([0] * 16)

    @pytest.mark.parametrize("n", [0, 15, 17])
    def test_wrong_length(self, n):
        with pytest.raises(WrongLength):
            make_state([1] * n)

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), complex(0, float("-inf"))])
    def test_non_finite(self, bad):
        with pytest.raises(NonFinite):
            make_state([1] * 15 + [bad])

    def test_amplitudes_are_read_only(self):
        state = make_state([1] + [0] * 15)
        with pytest.raises(ValueError):
            state.amplitudes[0] = 2.0

    def test_input_array_is_copied(self):
        raw = np.zeros(16, dtype=complex)
        raw[0] = 1
        state = make_state(raw)
        raw[0] = 5
        assert state[0] == 1.0

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            make_state([0] * 16)


class TestBasisIndex:
    @pytest.mark.parametrize(
        "bits, expected",
        [((0, 0, 0, 0), 0), ((1, 1, 1, 1), 15), ((1, 0, 0, 1), 9), ((0, 1, 1, 0), 6)],
    )
    def test_examples(self, bits, expected):
        assert basis_index(*bits) == expected

    def test_bijection(self):
        indices = {basis_index(*bits) for bits in itertools.product((0, 1), repeat=4)}
        assert indices == set(range(16))

    def test_inverse(self):
        for k in range(16):
            assert basis_index(*basis_bits(k)) == k

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            basis_index(2, 0, 0, 0)


class TestInnerProduct:
    def test_chi_normalized(self, chi):
        assert inner_product(chi, chi) == pytest.approx(1.0, abs=1e-15)

    def test_chi_coefficient(self, chi):
        assert inner_product(ket("0000"), chi) == pytest.approx(C, abs=1e-15)

    def test_chi_orthogonal_to_phi_m1(self, chi, phi_m1):
        assert abs(inner_product(phi_m1, chi)) < 1e-15

    def test_self_product_is_squared_norm(self, rng):
        for _ in range(20):
            state = scale_state(random_state(rng), 1.7 - 0.3j)
            value = inner_product(state, state)
            assert value.imag == pytest.approx(0.0, abs=1e-14)
            assert value.real == pytest.approx(state.norm**2, rel=1e-12)

    def test_conjugate_linear_in_bra(self, rng):
        a, b = random_state(rng), random_state(rng)
        assert inner_product(scale_state(a, 1j), b) == pytest.approx(-1j * inner_product(a, b))


class TestGlobalPhase:
    def test_pure_phase(self, chi):
        assert equal_up_to_global_phase(chi, scale_state(chi, 1j), ComplexTolerance())

    def test_random_phase_symmetric(self, rng):
        tol = ComplexTolerance()
        state = random_state(rng)
        turned = scale_state(state, np.exp(0.83j))
        assert equal_up_to_global_phase(state, turned, tol)
        assert equal_up_to_global_phase(turned, state, tol)

    def test_different_states(self, chi, phi_m1):
        assert not equal_up_to_global_phase(chi, phi_m1, ComplexTolerance())

    def test_orthogonal_kets(self):
        assert not equal_up_to_global_phase(ket("0000"), ket("0001"), ComplexTolerance())

    def test_scale_is_not_a_phase(self, chi):
        assert not equal_up_to_global_phase(scale_state(chi, 2.0), chi, ComplexTolerance())

    def test_transitive(self, rng):
        tol = ComplexTolerance()
        a = random_state(rng)
        b = scale_state(a, np.exp(0.4j))
        c = scale_state(b, np.exp(-2.1j))
        assert equal_up_to_global_phase(a, b, tol)
        assert equal_up_to_global_phase(b, c, tol)
        assert equal_up_to_global_phase(a, c, tol)


class TestTolerance:
    def test_defaults(self):
        tol = ComplexTolerance()
        assert tol.abs_tol == 1e-10
        assert tol.rel_tol == 1e-9

    @pytest.mark.parametrize("kwargs", [{"abs_tol": 0.0}, {"rel_tol": -1.0}, {"abs_tol": float("inf")}])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            ComplexTolerance(**kwargs)


class TestQubitHelpers:
    def test_swap_moves_bits(self):
        moved = swap_qubits(ket("0001"), 2, 4)
        assert moved[basis_index(0, 1, 0, 0)] == 1.0

    def test_swap_is_involution(self, rng):
        state = random_state(rng)
        back = swap_qubits(swap_qubits(state, 1, 3), 1, 3)
        assert np.array_equal(back.amplitudes, state.amplitudes)

    def test_chi_symmetric_under_swap_23(self, chi):
        assert np.array_equal(swap_qubits(chi, 2, 3).amplitudes, chi.amplitudes)

    def test_swap_rejects_bad_qubit(self, chi):
        with pytest.raises(QubitOutOfRange):
            swap_qubits(chi, 0, 2)

    def test_linear_combination(self):
        combo = linear_combination(2.0, ket("0000"), -1j, ket("1111"))
        assert combo[0] == 2.0
        assert combo[15] == -1j

    def test_linear_combination_zero(self, chi):
        with pytest.raises(ZeroState):
            linear_combination(1.0, chi, -1.0, chi)

    def test_bad_ket_label(self):
        with pytest.raises(ValueError):
            state_from_terms({"012": 1.0})
