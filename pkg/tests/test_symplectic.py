import numpy as np
import pytest

from ldikit.exceptions import CommutationError, DimensionMismatch, ParseError
from ldikit.schemas import Integers, Modulo, PauliVector, Prime, Reals, RealsModulo
from ldikit.services import (
    commutes_mod,
    parse_local_dimension,
    pauli_weight,
    phi_decode,
    phi_encode,
    product_matrix,
    require_commuting,
    symplectic_product,
    syndrome_of,
)


class TestPhi:

    def test_encode_tokens(self):
        assert phi_encode("X X^-1").entries == (1, -1, 0, 0)
        assert phi_encode("X^1Z^-1 Z^3").entries == (1, 0, -1, 3)
        assert phi_encode("I Z^{2}").entries == (0, 0, 0, 2)

    def test_encode_compact_run(self):
        v = phi_encode("XXXXIII", n=7)
        assert v.x == (1, 1, 1, 1, 0, 0, 0)
        assert v.z == (0,) * 7

    def test_decode_steane_row(self, steane):
        assert phi_decode(steane.rows[3]) == "Z Z^-1 Z Z^-1 I I I"
        assert phi_encode(phi_decode(steane.rows[3])) == steane.rows[3]

    def test_decode_mixed_site(self):
        assert phi_decode(PauliVector.from_parts([2, 0], [-1, 0])) == "X^2Z^-1 I"

    def test_round_trip_random(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 6))
            v = PauliVector(n=n, entries=rng.integers(-4, 5, size=2 * n).tolist())
            assert phi_encode(phi_decode(v)) == v

    @pytest.mark.parametrize("text", ["Q", "X^", "ZX", "X^aZ"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            phi_encode(text)

    def test_wrong_site_count(self):
        with pytest.raises(ParseError):
            phi_encode("X X", n=3)


class TestProducts:

    def test_qubit_pair_fails_over_integers(self):
        assert symplectic_product(phi_encode("X X"), phi_encode("Z Z")) == 2
        assert symplectic_product(phi_encode("X X^-1"), phi_encode("Z Z")) == 0

    def test_antisymmetry(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            u = PauliVector(n=3, entries=rng.integers(-3, 4, size=6).tolist())
            v = PauliVector(n=3, entries=rng.integers(-3, 4, size=6).tolist())
            assert symplectic_product(u, v) == -symplectic_product(v, u)
            assert symplectic_product(u, u) == 0

    def test_mismatched_registers(self):
        with pytest.raises(DimensionMismatch):
            symplectic_product(PauliVector.zero(2), PauliVector.zero(3))

    def test_commutes_mod(self):
        u, v = phi_encode("X X"), phi_encode("Z Z")
        assert commutes_mod(u, v, 2)
        assert not commutes_mod(u, v, 3)

    def test_product_matrix(self, xx_zz, steane):
        products = product_matrix(xx_zz)
        assert products[0, 1] == 2 and products[1, 0] == -2
        assert not np.any(product_matrix(steane) != 0)

    def test_weight(self):
        assert pauli_weight(phi_encode("X I Z X^2Z^3")) == 3
        assert pauli_weight(PauliVector.zero(4)) == 0


class TestSyndromes:

    def test_integer_syndrome(self, xx_zz):
        syndrome = syndrome_of(xx_zz, phi_encode("X I"))
        assert syndrome.values == (0, -1)
        assert syndrome.modulus is None

    def test_reduced_syndrome(self, xx_zz):
        assert syndrome_of(xx_zz, phi_encode("X I"), modulus=2).values == (0, 1)

    def test_mismatch(self, steane):
        with pytest.raises(DimensionMismatch):
            syndrome_of(steane, phi_encode("X X"))


class TestCommutation:

    def test_require_commuting(self, xx_zz):
        require_commuting(xx_zz, 2)
        with pytest.raises(CommutationError) as info:
            require_commuting(xx_zz, 3)
        assert (info.value.i, info.value.j, info.value.product) == (0, 1, 2)


class TestLocalDimension:

    def test_tags(self):
        assert parse_local_dimension("7") == Prime(q=7)
        assert parse_local_dimension("6") == Modulo(m=6)
        assert parse_local_dimension("Z") == Integers()
        assert parse_local_dimension("R") == Reals()
        assert parse_local_dimension("R6.28") == RealsModulo(p=6.28)

    def test_wrapped_reals_label_keeps_digits(self):
        dim = RealsModulo(p=6.283185307179586)
        assert dim.label == "R6.283185307179586"
        assert parse_local_dimension(dim.label) == dim

    @pytest.mark.parametrize("text", ["1", "0", "abc", "R-"])
    def test_bad_tags(self, text):
        with pytest.raises(ParseError):
            parse_local_dimension(text)
