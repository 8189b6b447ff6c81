# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Validated dense density matrices.
"""
import attr
import numpy as np

from ._exceptions import (
    DimensionMismatchError,
    HermiticityError,
    InvalidIndexError,
    NegativeDiagonalError,
    NumericFailureError,
    PSDError,
    TraceError,
)
from ._tensor_index import SubsystemDims


def _check_tolerance(instance, attribute, value):
    "Check that a tolerance is nonnegative"
    if not value >= 0:
        raise ValueError(
            f"Invalid {attribute.name} '{value}'. Should be nonnegative."
        )


@attr.s(frozen=True)
class ValidationConfig:
    """
    Tolerances used to decide whether a matrix is a density matrix.

    Parameters
    ----------
    hermiticity_tol : float
        Largest accepted :math:`|\\rho_{i,j} - \\rho_{j,i}^*|`.
    trace_tol : float
        Largest accepted deviation of the trace from 1.
    psd_tol : float
        Largest accepted magnitude of a negative diagonal entry or (if
        ``check_psd``) of a negative eigenvalue.
    check_psd : bool
        If True, also compute the smallest eigenvalue and reject the matrix
        if it is below ``-psd_tol``. Off by default because the criteria only
        read matrix entries.
    """

    hermiticity_tol = attr.ib(default=1e-10, validator=_check_tolerance)
    trace_tol = attr.ib(default=1e-10, validator=_check_tolerance)
    psd_tol = attr.ib(default=1e-9, validator=_check_tolerance)
    check_psd = attr.ib(default=False, converter=bool)


DEFAULT_VALIDATION = ValidationConfig()


def _as_dims(value):
    "Accept a SubsystemDims or a plain list of levels"
    if isinstance(value, SubsystemDims):
        return value
    return SubsystemDims(value)


def _as_readonly_matrix(value):
    "Copy the entries into a complex array that can't be modified in place"
    matrix = np.array(value, dtype=complex)
    matrix.flags.writeable = False
    return matrix


def _smallest_eigenvalue(matrix):
    "Smallest eigenvalue of a Hermitian matrix"
    try:
        eigenvalues = np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as error:
        raise NumericFailureError(
            f"Hermitian eigensolver failed to converge: {error}"
        ) from error
    return float(eigenvalues[0])


@attr.s(frozen=True)
class DensityMatrix:
    r"""
    The density matrix of an n-partite quantum state.

    The entries :math:`\rho_{i,j}` are stored densely in the computational
    product basis. Instantiating the class validates the entries: the
    matrix must be square with side :math:`D = d_1 \cdots d_n`, Hermitian, of
    unit trace, and with nonnegative diagonal (all within the tolerances of
    ``config``). Invalid input is rejected, never repaired.

    **This class is read-only:** Input parameters and attributes cannot be
    changed after instantiation.

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims` or list of int
        The local dimensions of the parties.
    entries : 2D array
        The :math:`D \times D` complex matrix.
    config : :class:`intrication.ValidationConfig`
        The validation tolerances. Defaults to
        :data:`intrication.DEFAULT_VALIDATION`.

    Examples
    --------

    >>> import numpy as np
    >>> rho = DensityMatrix([2, 2], np.eye(4) / 4)
    >>> print(rho.entry(1, 1))
    (0.25+0j)
    >>> print(f"{rho.min_eigenvalue():.2f}")
    0.25

    """

    dims = attr.ib(converter=_as_dims)
    entries = attr.ib(
        converter=_as_readonly_matrix,
        eq=attr.cmp_using(eq=np.array_equal),
        hash=False,
        repr=False,
    )
    config = attr.ib(default=DEFAULT_VALIDATION, eq=False, repr=False)

    @entries.validator
    def _check_entries(self, entries, value):
        "Check the shape and the physical constraints on the entries"
        total = self.dims.total
        if value.shape != (total, total):
            raise DimensionMismatchError(
                f"Invalid matrix shape '{value.shape}'. Should be "
                f"({total}, {total}) for dimensions {self.dims.dims}."
            )
        if not np.all(np.isfinite(value)):
            raise DimensionMismatchError("Matrix entries must be finite numbers.")
        asymmetry = np.max(np.abs(value - value.conj().T))
        if asymmetry > self.config.hermiticity_tol:
            raise HermiticityError(
                f"Matrix is not Hermitian: largest |rho_ij - conj(rho_ji)| is "
                f"'{asymmetry}'."
            )
        trace = np.trace(value).real
        if abs(trace - 1) > self.config.trace_tol:
            raise TraceError(f"Invalid trace '{trace}'. Should be 1.")
        diagonal = np.diagonal(value).real
        lowest = int(np.argmin(diagonal))
        if diagonal[lowest] < -self.config.psd_tol:
            raise NegativeDiagonalError(
                f"Invalid diagonal entry '{diagonal[lowest]}' at index "
                f"{lowest + 1}. Should be nonnegative."
            )
        if self.config.check_psd:
            smallest = _smallest_eigenvalue(value)
            if smallest < -self.config.psd_tol:
                raise PSDError(
                    f"Matrix is not positive semidefinite: smallest eigenvalue "
                    f"is '{smallest}'."
                )

    @classmethod
    def build(cls, dims, entries, config=None):
        """
        Validate the entries and create the density matrix.

        Same as calling the class, with ``config=None`` meaning the default
        tolerances.
        """
        if config is None:
            config = DEFAULT_VALIDATION
        return cls(dims, entries, config)

    @property
    def psd_checked(self):
        "True if positivity of the spectrum was verified at construction."
        return self.config.check_psd

    @property
    def total(self):
        "The side of the matrix, :math:`D`."
        return self.dims.total

    @property
    def is_qubit(self):
        "True if every party is a qubit."
        return self.dims.is_qubit

    @property
    def diagonal(self):
        """
        The real part of the diagonal, with tiny negative values set to 0.
        """
        return np.clip(np.diagonal(self.entries).real, 0, None)

    @property
    def trace(self):
        "The trace of the matrix (real part)."
        return float(np.trace(self.entries).real)

    def entry(self, i, j):
        r"""
        The entry :math:`\rho_{i,j}` with 1-based row and column indices.

        Parameters
        ----------
        i, j : int
            Row and column, between 1 and :math:`D`.

        Returns
        -------
        value : complex
        """
        total = self.total
        for index in (i, j):
            if not 1 <= index <= total:
                raise InvalidIndexError(
                    f"Invalid index '{index}'. Should be between 1 and {total}."
                )
        return complex(self.entries[i - 1, j - 1])

    def min_eigenvalue(self):
        """
        The smallest eigenvalue of the matrix.

        Raises :class:`intrication.NumericFailureError` if the eigensolver
        doesn't converge.
        """
        return _smallest_eigenvalue(self.entries)

    def conjugate(self):
        """
        The complex conjugate matrix (the same state in the conjugated basis).
        """
        return DensityMatrix(self.dims, self.entries.conj(), self.config)
