"""Tests for the named fixture states (core/catalog.py)."""

import math

import numpy as np
import pytest

from fourq_slocc.core.catalog import catalog_entry, catalog_names, named_state
from fourq_slocc.core.errors import UnknownName

C = 1 / (2 * math.sqrt(2))


def test_names():
    assert catalog_names() == ["chi", "phi_m1", "phi_m2", "ghz4", "w4", "cluster4", "zero_ket"]


@pytest.mark.parametrize("name", ["chi", "phi_m1", "phi_m2", "ghz4", "w4", "cluster4", "zero_ket"])
def test_unit_norm(name):
    assert named_state(name).norm == pytest.approx(1.0, abs=1e-15)


def test_chi_amplitudes():
    expected = np.zeros(16)
    expected[[0, 6, 9, 10, 12, 15]] = C
    expected[[3, 5]] = -C
    assert np.array_equal(named_state("chi").amplitudes, expected)


def test_phi_m1_amplitudes():
    a = named_state("phi_m1").amplitudes
    assert a[9] == -0.5
    assert a[0] == a[7] == a[14] == 0.5
    assert np.count_nonzero(a) == 4


def test_phi_m2_amplitudes():
    a = named_state("phi_m2").amplitudes
    assert a[7] == -0.5
    assert a[0] == a[9] == a[14] == 0.5


def test_cluster_sign():
    assert named_state("cluster4")[15] == -0.5


def test_zero_ket():
    a = named_state("zero_ket").amplitudes
    assert a[0] == 1.0
    assert np.count_nonzero(a) == 1


def test_lookup_is_case_insensitive():
    assert catalog_entry(" CHI ").name == "chi"


def test_provenance_text():
    assert "|1001>" in catalog_entry("chi").provenance


def test_unknown_name():
    with pytest.raises(UnknownName) as info:
        named_state("bell")
    assert "bell" in str(info.value)
