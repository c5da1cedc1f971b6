import numpy as np
import pytest

from ldikit.exceptions import ParseError
from ldikit.schemas import GeneratorMatrix, Prime
from ldikit.services import (
    hamming_family,
    integer_rank,
    lookup,
    product_matrix,
    random_commuting_code,
    rank_gf,
    rank_mod,
    steane_ldi,
    steane_standard,
    toric_code,
    two_register_example,
    verify_ldi,
)
from ldikit.services.catalog import (
    STEANE_X,
    STEANE_Z,
    _css_rows,
    catalog_names,
    declared_k,
    hamming_checks,
)

# steane register c sits at hamming register HAMMING_ORDER[c]
HAMMING_ORDER = [3, 5, 6, 4, 1, 2, 0]


class TestFixedEntries:

    def test_steane_rows(self):
        entry = steane_ldi()
        assert entry.declared.n == 7 and entry.declared.k == 1 and entry.declared.d == 3
        assert entry.matrix.to_lists()[3] == [0] * 7 + [1, -1, 1, -1, 0, 0, 0]
        assert entry.matrix.dim == Prime(q=2)

    def test_printed_steane_row_breaks_commutation(self):
        printed = [list(row) for row in STEANE_Z]
        printed[1] = [0, 1, -1, 0, 1, -1, 0]
        m = GeneratorMatrix.from_rows(7, _css_rows(STEANE_X, printed, 7))
        assert verify_ldi(m).violations == ((2, 4, -2),)
        assert not np.any(product_matrix(m) % 2 != 0)

    def test_steane_row_signs(self):
        entry = steane_ldi()
        assert entry.matrix.to_lists()[4] == [0] * 7 + [0, 1, -1, 0, -1, 1, 0]
        assert verify_ldi(entry.matrix).is_ldi

    def test_two_register(self):
        entry = two_register_example()
        assert entry.matrix.to_lists() == [[1, -1, 0, 0], [0, 0, 1, 1]]
        assert entry.declared.dim.label == "3"
        assert two_register_example(5).declared.dim.label == "5"

    def test_standard_is_not_ldi(self):
        entry = steane_standard()
        assert not entry.is_ldi
        assert not verify_ldi(entry.matrix).is_ldi
        assert not np.any(product_matrix(entry.matrix) % 2 != 0)

    def test_declared_k(self):
        for ref in ("steane_ldi", "steane_standard", "two_register", "hamming:3", "toric:2", "toric:3"):
            entry = lookup(ref)
            assert declared_k(entry) == entry.declared.k, ref


class TestHamming:

    def test_checks_permute_to_steane(self):
        H = hamming_checks(3)
        assert [[row[HAMMING_ORDER[c]] for c in range(7)] for row in H] == STEANE_X

    def test_same_code_as_steane(self):
        ham = hamming_family(3).matrix.to_array()
        columns = HAMMING_ORDER + [7 + c for c in HAMMING_ORDER]
        permuted = ham[:, columns] % 2
        steane = steane_ldi().matrix.to_array() % 2
        assert rank_gf(permuted, 2) == rank_gf(steane, 2) == 6
        assert rank_gf(np.vstack([permuted, steane]), 2) == 6

    def test_family_member(self):
        entry = hamming_family(4)
        assert entry.matrix.n == 15
        assert entry.declared.k == 7
        assert rank_gf(entry.matrix, 2) == 8
        assert verify_ldi(entry.matrix).is_ldi
        assert entry.matrix.max_entry == 1

    def test_too_small(self):
        with pytest.raises(ValueError):
            hamming_family(2)


class TestToric:

    @pytest.mark.parametrize("N", [2, 3])
    def test_rank_everywhere(self, N):
        m = toric_code(N).matrix
        expected = 2 * N * N - 2
        assert verify_ldi(m).is_ldi
        assert integer_rank(m) == expected
        for modulus in range(2, 7):
            assert rank_mod(m, modulus) == expected

    def test_opposite_powers(self):
        m = toric_code(3)
        for row in m.matrix.rows:
            nonzero = [e for e in row.entries if e]
            assert sorted(nonzero) == [-1, -1, 1, 1]

    def test_too_small(self):
        with pytest.raises(ValueError):
            toric_code(1)


class TestLookup:

    def test_names(self):
        names = catalog_names()
        assert "steane_ldi" in names and "toric:N" in names

    def test_family_refs(self):
        assert lookup("toric:2").matrix.n == 8
        assert lookup(" hamming:3 ").name == "hamming:3"

    @pytest.mark.parametrize("ref", ["shor", "toric", "toric:x", "steane_ldi:2"])
    def test_unknown(self, ref):
        with pytest.raises(ParseError):
            lookup(ref)


class TestRandomCodes:

    def test_commute_with_requested_rank(self):
        rng = np.random.default_rng(17)
        for seed in range(60):
            n = int(rng.integers(1, 6))
            r = int(rng.integers(0, n + 1))
            q = int(rng.choice([2, 3, 5, 7]))
            code = random_commuting_code(n, r, q, seed=seed)
            assert code.num_rows == r
            assert not np.any(product_matrix(code) % q != 0)
            if r:
                assert rank_gf(code, q) == r
            assert code.max_entry < q

    def test_seeded(self):
        assert random_commuting_code(4, 2, 3, seed=5) == random_commuting_code(4, 2, 3, seed=5)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            random_commuting_code(3, 4, 3)
