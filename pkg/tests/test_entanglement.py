"""Tests for reduced density matrices and marginal purities (core/entanglement.py)."""

import itertools
import math

import numpy as np
import pytest

from conftest import random_state
from fourq_slocc.core.entanglement import (
    marginal_purity,
    marginal_table,
    max_entanglement_report,
    partial_trace,
    purity,
)
from fourq_slocc.core.errors import EmptySubset, QubitOutOfRange
from fourq_slocc.core.local_ops import apply_quartet, random_quartet
from fourq_slocc.core.state import scale_state, state_from_terms

EXACT = 1e-12


class TestPartialTrace:
    def test_ghz_single(self, ghz4):
        rdm = partial_trace(ghz4, [1])
        assert np.allclose(rdm.entries, np.eye(2) / 2, atol=EXACT)
        assert rdm.dim == 2

    def test_zero_ket_pair(self, zero_ket):
        rdm = partial_trace(zero_ket, [1, 2])
        expected = np.zeros((4, 4))
        expected[0, 0] = 1
        assert np.allclose(rdm.entries, expected, atol=EXACT)

    def test_coherence_on_kept_qubit(self):
        r = 1 / math.sqrt(2)
        plus_on_two = state_from_terms({"0000": r, "0100": r})
        rdm = partial_trace(plus_on_two, [2])
        assert np.allclose(rdm.entries, np.full((2, 2), 0.5), atol=EXACT)

    def test_kept_order_is_ascending(self, rng):
        state = random_state(rng)
        a = partial_trace(state, [3, 1])
        b = partial_trace(state, (1, 3, 3))
        assert a.kept == (1, 3)
        assert a.label == "13"
        assert np.array_equal(a.entries, b.entries)

    def test_density_matrix_properties(self, rng):
        state = scale_state(random_state(rng), 4.2)
        for size in (1, 2, 3, 4):
            for keep in itertools.combinations((1, 2, 3, 4), size):
                rho = partial_trace(state, keep).entries
                assert np.trace(rho).real == pytest.approx(1.0, abs=EXACT)
                assert np.allclose(rho, rho.conj().T, atol=EXACT)
                assert np.linalg.eigvalsh(rho).min() >= -EXACT

    def test_full_keep_is_pure(self, rng):
        assert marginal_purity(random_state(rng), [1, 2, 3, 4]) == pytest.approx(1.0, abs=EXACT)

    def test_empty_subset(self, chi):
        with pytest.raises(EmptySubset):
            partial_trace(chi, [])

    def test_bad_qubit(self, chi):
        with pytest.raises(QubitOutOfRange):
            partial_trace(chi, [1, 5])


class TestPurity:
    def test_maximally_mixed_single(self, ghz4):
        assert purity(partial_trace(ghz4, [4])) == pytest.approx(0.5, abs=EXACT)

    def test_complementary_subsets_agree(self, rng):
        state = random_state(rng)
        for keep in itertools.combinations((1, 2, 3, 4), 2):
            rest = [q for q in (1, 2, 3, 4) if q not in keep]
            assert marginal_purity(state, keep) == pytest.approx(marginal_purity(state, rest), abs=EXACT)

    def test_bounds(self, rng):
        state = random_state(rng)
        for size in (1, 2):
            for keep in itertools.combinations((1, 2, 3, 4), size):
                value = marginal_purity(state, keep)
                assert 1 / 2**size - EXACT <= value <= 1 + EXACT

    def test_local_unitary_invariance(self, rng):
        state = random_state(rng)
        image = apply_quartet(random_quartet(rng, "su"), state)
        for keep in ([1], [2, 3], [1, 4]):
            assert marginal_purity(image, keep) == pytest.approx(marginal_purity(state, keep), abs=EXACT)


class TestReport:
    @pytest.mark.parametrize("name", ["chi", "phi_m1", "phi_m2"])
    def test_chi_family_singles_maximally_mixed(self, name, request):
        report = max_entanglement_report(request.getfixturevalue(name))
        assert report.maximally_mixed_singles
        assert set(report.single) == {"1", "2", "3", "4"}
        for value in report.single.values():
            assert value == pytest.approx(0.5, abs=1e-10)

    def test_zero_ket(self, zero_ket):
        report = max_entanglement_report(zero_ket)
        assert not report.maximally_mixed_singles
        assert all(v == pytest.approx(1.0) for v in report.single.values())
        assert all(v == pytest.approx(1.0) for v in report.pairs.values())

    def test_ghz(self, ghz4):
        report = max_entanglement_report(ghz4)
        assert report.maximally_mixed_singles
        assert all(v == pytest.approx(0.5, abs=EXACT) for v in report.pairs.values())

    def test_pair_labels(self, chi):
        report = max_entanglement_report(chi)
        assert list(report.pairs) == ["12", "13", "14", "23", "24", "34"]

    def test_table_shape(self, chi):
        table = marginal_table(chi)
        assert len(table) == 10
        assert list(table.columns) == ["subset", "size", "dim", "purity"]
        assert set(table["dim"]) == {2, 4}
