# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Exceptions raised by Intrication.

All of them derive from the builtin exception that would be raised for the
same problem (mostly :class:`ValueError`) so that catching the builtin still
works.
"""


class InvalidIndexError(ValueError):
    "A multi-index digit or a 1-based matrix index is out of range."


class InvalidPairError(InvalidIndexError):
    "A pair of party labels is not a valid ordered pair of distinct parties."


class InvalidDimensionsError(ValueError):
    "The subsystem dimensions are not valid (too few parties, levels < 2, too large)."


class ValidationError(ValueError):
    "The entries of a matrix don't describe a valid density matrix."


class DimensionMismatchError(ValidationError):
    "The shape of the matrix doesn't match the subsystem dimensions."


class HermiticityError(ValidationError):
    "The matrix is not Hermitian within tolerance."


class TraceError(ValidationError):
    "The trace of the matrix is not 1 within tolerance."


class NegativeDiagonalError(ValidationError):
    "A diagonal entry is negative beyond tolerance."


class PSDError(ValidationError):
    "The matrix has an eigenvalue below the negative tolerance."


class InvalidPartitionError(ValueError):
    "A bipartition is not a split of the parties into two nonempty groups."


class UnsupportedDimensionError(ValueError):
    "A criterion was applied to a system it is not defined for."


class BracketError(ValueError):
    "The margin of a criterion doesn't change sign on the search interval."


class NumericFailureError(RuntimeError):
    "A numerical routine failed to converge or produced inconsistent results."


class StateFileError(ValueError):
    "A state file is malformed."
