# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Test the validated density matrix.
"""
import numpy as np
import numpy.testing as npt
import pytest

from .. import (
    MAX_DIMENSION,
    DensityMatrix,
    DimensionMismatchError,
    HermiticityError,
    InvalidDimensionsError,
    InvalidIndexError,
    NegativeDiagonalError,
    NoiseFamilyParams,
    PSDError,
    TraceError,
    ValidationConfig,
    ValidationError,
    ghz,
    ghz_white_noise,
    maximally_mixed,
)


@pytest.fixture(name="mixed8")
def fixture_mixed8():
    "The maximally mixed state of 3 qubits"
    return DensityMatrix.build([2, 2, 2], np.eye(8) / 8)


def test_build_maximally_mixed(mixed8):
    "Check that the identity over D is a valid state"
    assert mixed8.total == 8
    assert mixed8.is_qubit
    assert not mixed8.psd_checked
    npt.assert_allclose(mixed8.trace, 1)
    npt.assert_allclose(mixed8.diagonal, np.full(8, 1 / 8))


def test_entries_are_read_only(mixed8):
    "Check that the stored matrix can't be modified"
    with pytest.raises(ValueError):
        mixed8.entries[0, 0] = 1


def test_build_copies_input():
    "Check that changing the input array doesn't change the state"
    entries = np.eye(4) / 4
    rho = DensityMatrix([2, 2], entries)
    entries[0, 0] = 10
    assert rho.entry(1, 1) == 0.25


def test_equality_compares_entries():
    "Check that states with the same dimensions but other entries differ"
    assert ghz(3) != maximally_mixed([2, 2, 2])
    assert ghz(3) == DensityMatrix([2, 2, 2], ghz(3).entries)
    assert maximally_mixed([2, 2, 2]) != maximally_mixed([4, 2])
    assert len({ghz(3), maximally_mixed([2, 2, 2]), ghz(3)}) == 2


def test_hermiticity_violation():
    """
    Check that an asymmetric off-diagonal is rejected
    """
    entries = np.eye(4, dtype=complex) / 4
    entries[0, 1] = 1
    with pytest.raises(HermiticityError):
        DensityMatrix.build([2, 2], entries)


def test_trace_violation():
    "Check that a trace different from 1 is rejected"
    with pytest.raises(TraceError):
        DensityMatrix.build([2, 2], np.eye(4) / 2)


def test_dimension_mismatch():
    """
    Check that the matrix must match the dimensions
    """
    with pytest.raises(DimensionMismatchError):
        DensityMatrix.build([2, 2], np.eye(8) / 8)
    with pytest.raises(DimensionMismatchError):
        DensityMatrix.build([2, 2], np.ones((4, 2)) / 4)
    entries = np.eye(4) / 4
    entries[1, 1] = np.nan
    with pytest.raises(DimensionMismatchError):
        DensityMatrix.build([2, 2], entries)


def test_negative_diagonal():
    "Check that a negative diagonal entry is rejected"
    entries = np.diag([0.5, 0.6, -0.1, 0.0])
    with pytest.raises(NegativeDiagonalError):
        DensityMatrix.build([2, 2], entries)


def test_tiny_negative_diagonal_accepted():
    "Check that rounding errors on the diagonal are tolerated and clamped"
    entries = np.diag([0.5 + 1e-12, 0.5, -1e-12, 0.0])
    rho = DensityMatrix.build([2, 2], entries)
    assert rho.diagonal[2] == 0


def test_psd_check():
    """
    Check that the eigenvalue test is only applied when requested
    """
    # Hermitian, unit trace, nonnegative diagonal, but not positive
    entries = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)
    entries[1, 2] = entries[2, 1] = 0.3
    rho = DensityMatrix.build([2, 2], entries)
    npt.assert_allclose(rho.min_eigenvalue(), -0.3, atol=1e-12)
    with pytest.raises(PSDError):
        DensityMatrix.build([2, 2], entries, ValidationConfig(check_psd=True))
    # Every validation error is a ValueError
    with pytest.raises(ValidationError):
        DensityMatrix.build([2, 2], entries, ValidationConfig(check_psd=True))
    with pytest.raises(ValueError):
        DensityMatrix.build([2, 2], entries, ValidationConfig(check_psd=True))


def test_psd_check_passes_on_states():
    "Check that physical states pass the eigenvalue test"
    config = ValidationConfig(check_psd=True)
    rho = DensityMatrix.build([2, 2, 2], ghz(3).entries, config)
    assert rho.psd_checked


def test_validation_config_invalid():
    "Check that negative tolerances are rejected"
    with pytest.raises(ValueError):
        ValidationConfig(trace_tol=-1)
    with pytest.raises(ValueError):
        ValidationConfig(psd_tol=np.nan)


def test_dimension_cap():
    "Check that dimensions above the dense storage cap are rejected"
    total = 2**13
    assert total > MAX_DIMENSION
    with pytest.raises(InvalidDimensionsError):
        DensityMatrix([2] * 13, np.zeros((1, 1)))


def test_entry(mixed8):
    """
    Check element access with 1-based indices
    """
    assert mixed8.entry(1, 1) == 1 / 8
    rho = ghz(3)
    assert rho.entry(1, 8) == 0.5
    assert rho.entry(8, 1) == 0.5
    assert rho.entry(2, 2) == 0
    with pytest.raises(InvalidIndexError):
        rho.entry(0, 1)
    with pytest.raises(InvalidIndexError):
        rho.entry(1, 9)


def test_entry_conjugate_symmetry():
    "Check that entry(i, j) is the conjugate of entry(j, i)"
    rng = np.random.default_rng(3)
    vector = rng.normal(size=6) + 1j * rng.normal(size=6)
    vector /= np.linalg.norm(vector)
    rho = DensityMatrix([2, 3], np.outer(vector, vector.conj()))
    for i in range(1, 7):
        for j in range(1, 7):
            npt.assert_allclose(rho.entry(i, j), np.conj(rho.entry(j, i)), atol=1e-15)


@pytest.mark.parametrize(
    "rho,expected",
    [
        (maximally_mixed([2, 2]), 0.25),
        (ghz(3), 0),
        (ghz_white_noise(NoiseFamilyParams(3, 0.8)), 0.1),
    ],
    ids=["mixed", "ghz", "ghz-noise"],
)
def test_min_eigenvalue(rho, expected):
    "Check the smallest eigenvalue of a few states"
    npt.assert_allclose(rho.min_eigenvalue(), expected, atol=1e-12)


def test_conjugate():
    "Check that conjugation flips the phases of the off-diagonals"
    entries = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)
    entries[0, 3] = 0.5j
    entries[3, 0] = -0.5j
    rho = DensityMatrix([2, 2], entries)
    assert rho.conjugate().entry(1, 4) == -0.5j
    assert rho.conjugate().dims == rho.dims
