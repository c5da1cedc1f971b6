import cmath

import numpy as np
import pytest

from ldikit.exceptions import BudgetExceeded, CommutationError, DimensionMismatch, NotPrimeError
from ldikit.schemas import DenseState, GeneratorMatrix, PauliVector
from ldikit.services import (
    apply_pauli,
    hamming_family,
    lookup,
    phi_encode,
    stabilized_state,
    stabilizes,
    symplectic_product,
)
from ldikit.services.statecheck import expectation, omega


class TestApplyPauli:

    def test_shift_and_clock(self):
        q = 3
        shifted = apply_pauli(DenseState.basis(q, [0]), phi_encode("X"))
        assert np.allclose(shifted.amplitudes, DenseState.basis(q, [1]).amplitudes)
        clocked = apply_pauli(DenseState.basis(q, [1]), phi_encode("Z"))
        assert np.allclose(clocked.amplitudes, omega(q) * DenseState.basis(q, [1]).amplitudes)
        back = apply_pauli(DenseState.basis(q, [2]), phi_encode("X^-1"))
        assert np.allclose(back.amplitudes, DenseState.basis(q, [1]).amplitudes)

    def test_register_order(self):
        state = apply_pauli(DenseState.basis(2, [0, 0]), phi_encode("X I"))
        assert state.amplitudes[2] == 1

    def test_commutation_phase(self):
        q = 5
        rng = np.random.default_rng(13)
        for _ in range(30):
            u = PauliVector(n=2, entries=rng.integers(0, q, size=4).tolist())
            v = PauliVector(n=2, entries=rng.integers(0, q, size=4).tolist())
            start = DenseState.basis(q, rng.integers(0, q, size=2).tolist())
            uv = apply_pauli(apply_pauli(start, u), v)
            vu = apply_pauli(apply_pauli(start, v), u)
            phase = omega(q) ** symplectic_product(u, v)
            assert np.allclose(uv.amplitudes, phase * vu.amplitudes)

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            apply_pauli(DenseState.basis(2, [0]), phi_encode("X X"))


class TestStabilizedState:

    def test_two_register(self, pair):
        state = stabilized_state(pair, 3)
        amp = 1 / np.sqrt(3)
        expected = np.zeros(9, dtype=complex)
        expected[[0, 5, 7]] = amp
        assert np.allclose(state.amplitudes, expected)

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_two_register_any_q(self, pair, q):
        state = stabilized_state(pair, q)
        expected = np.zeros(q * q, dtype=complex)
        expected[[j * q + (q - j) % q for j in range(q)]] = 1 / np.sqrt(q)
        assert np.allclose(state.amplitudes, expected, atol=1e-8)
        for row in pair.rows:
            assert stabilizes(state, row)

    def test_steane_with_logical(self, steane):
        z_bar = PauliVector.from_parts([0] * 7, [1, -1, 1, -1, 1, -1, 1])
        code = steane.with_rows(list(steane.rows) + [z_bar])
        state = stabilized_state(code, 2)
        assert stabilizes(state, z_bar)
        x_bar = PauliVector.from_parts([1] * 7, [0] * 7)
        assert abs(expectation(state, x_bar)) < 1e-8

    @pytest.mark.parametrize("ref, q", [("steane_ldi", 3), ("toric:2", 3), ("hamming:3", 2)])
    def test_catalog_codes(self, ref, q):
        code = lookup(ref).matrix
        state = stabilized_state(code, q)
        assert all(stabilizes(state, row) for row in code.rows)

    def test_qubit_phase_scale(self):
        # X^1Z^1 has order 4 over qubits
        code = GeneratorMatrix.from_rows(1, [[1, 1]])
        state = stabilized_state(code, 2)
        assert stabilizes(state, code.rows[0])
        assert abs(abs(state.amplitudes[1]) - 1 / np.sqrt(2)) < 1e-12

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            stabilized_state(hamming_family(4).matrix, 2)
        with pytest.raises(BudgetExceeded):
            stabilized_state(lookup("steane_ldi").matrix, 2, state_budget=100)

    def test_rejects_bad_base(self, pair, xx_zz):
        with pytest.raises(NotPrimeError):
            stabilized_state(pair, 4)
        with pytest.raises(CommutationError):
            stabilized_state(xx_zz, 3)


class TestOmega:

    def test_root_of_unity(self):
        for q in (2, 3, 5):
            assert abs(omega(q) ** q - 1) < 1e-12
            assert abs(omega(q) - cmath.exp(2j * cmath.pi / q)) < 1e-15
