# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Mixed-radix index algebra for multipartite product bases.

Matrix entries are addressed with the 1-based linear indices of the
computational product basis :math:`|i_1 i_2 \\cdots i_n\\rangle`. Internally
everything is 0-based, only the public functions speak 1-based.
"""
import itertools
import math

import attr
import numpy as np

from ._exceptions import (
    InvalidDimensionsError,
    InvalidIndexError,
    InvalidPairError,
    InvalidPartitionError,
)


def _int_tuple(values):
    "Convert a sequence of integer-like values into a tuple of ints."
    return tuple(int(value) for value in values)


def _party_set(values):
    "Convert a collection of party labels into a frozenset of ints."
    return frozenset(int(value) for value in values)


# Largest Hilbert space dimension stored densely (12 qubits)
MAX_DIMENSION = 4096


@attr.s(frozen=True)
class SubsystemDims:
    r"""
    The local dimensions of an n-partite system.

    **This class is read-only:** Input parameters and attributes cannot be
    changed after instantiation.

    Parameters
    ----------
    dims : list of int
        The number of levels of each party, in party order.
        Definition: :math:`d_1, d_2, \ldots, d_n`. Each must be at least 2 and
        there must be at least 2 parties. The product of all levels can be at
        most :data:`intrication.MAX_DIMENSION`.

    Examples
    --------

    >>> dims = SubsystemDims([3, 2, 2])
    >>> print(dims.n, dims.total)
    3 12
    >>> print(dims.is_qubit)
    False
    >>> print(SubsystemDims.qubits(4).dims)
    (2, 2, 2, 2)

    """

    dims = attr.ib(converter=_int_tuple)

    @dims.validator
    def _check_dims(self, dims, value):
        "Check the number of parties, their levels, and the total dimension"
        if len(value) < 2:
            raise InvalidDimensionsError(
                f"Invalid number of parties '{len(value)}'. Should be at least 2."
            )
        for position, levels in enumerate(value, start=1):
            if levels < 2:
                raise InvalidDimensionsError(
                    f"Invalid number of levels '{levels}' for party {position}. "
                    "Should be at least 2."
                )
        total = math.prod(value)
        if total > MAX_DIMENSION:
            raise InvalidDimensionsError(
                f"Invalid dimension '{total}' for levels {value}. Dense storage is "
                f"limited to {MAX_DIMENSION}."
            )

    @classmethod
    def qubits(cls, n):
        "Dimensions of an n-qubit system."
        return cls([2] * n)

    @classmethod
    def uniform(cls, n, d):
        "Dimensions of n parties with d levels each."
        return cls([d] * n)

    @property
    def n(self):
        "The number of parties."
        return len(self.dims)

    @property
    def total(self):
        r"""
        The dimension of the full Hilbert space.
        Definition: :math:`D = d_1 d_2 \cdots d_n`.
        """
        return math.prod(self.dims)

    @property
    def is_qubit(self):
        "True if every party is a qubit."
        return all(levels == 2 for levels in self.dims)

    @property
    def strides(self):
        r"""
        The place value of each digit: :math:`d_{k+1} d_{k+2} \cdots d_n`.
        The last one is the empty product, 1.
        """
        return tuple(math.prod(self.dims[k + 1 :]) for k in range(self.n))


@attr.s(frozen=True)
class MultiIndex:
    """
    The digits :math:`(i_1, i_2, \\ldots, i_n)` of a product basis state.

    Digits are 0-based levels. Whether they fit the radix of each party is
    checked when the index is used together with a :class:`SubsystemDims`.

    Parameters
    ----------
    digits : list of int
        The level of each party.
    """

    digits = attr.ib(converter=_int_tuple)

    @digits.validator
    def _check_digits(self, digits, value):
        "Check that no digit is negative"
        for position, digit in enumerate(value, start=1):
            if digit < 0:
                raise InvalidIndexError(
                    f"Invalid digit '{digit}' at position {position}. "
                    "Should be nonnegative."
                )


@attr.s(frozen=True)
class Bipartition:
    """
    A split of the parties :math:`\\{1, \\ldots, n\\}` into two nonempty groups.

    Parties are labelled from 1, as in the notation
    :math:`j_1 \\cdots j_k | j_{k+1} \\cdots j_n`.

    Parameters
    ----------
    left : set of int
        The parties in the first group.
    right : set of int
        The parties in the second group, the complement of ``left``.

    Examples
    --------

    >>> partition = Bipartition.from_left([1], n=3)
    >>> print(partition)
    1|2,3
    >>> print(Bipartition.parse("1,3|2").right == {2})
    True

    """

    left = attr.ib(converter=_party_set)
    right = attr.ib(converter=_party_set)

    @right.validator
    def _check_groups(self, right, value):
        "Check that left and right are nonempty and complementary"
        if not self.left or not value:
            raise InvalidPartitionError(
                "Invalid bipartition: both groups of parties must be nonempty."
            )
        if self.left & value:
            raise InvalidPartitionError(
                f"Invalid bipartition: parties '{sorted(self.left & value)}' "
                "appear in both groups."
            )
        parties = self.left | value
        if parties != set(range(1, len(parties) + 1)):
            raise InvalidPartitionError(
                f"Invalid bipartition: parties '{sorted(parties)}' should be "
                f"exactly 1 to {len(parties)}."
            )

    @classmethod
    def from_left(cls, left, n):
        "Create the bipartition with the given left group of n parties."
        left = _party_set(left)
        return cls(left, set(range(1, n + 1)) - left)

    @classmethod
    def parse(cls, text):
        """
        Read a bipartition written as ``"1,2|3"``.
        """
        try:
            left, right = text.split("|")
            return cls(left.split(","), right.split(","))
        except ValueError as error:
            raise InvalidPartitionError(
                f"Invalid bipartition '{text}'. Should look like '1,2|3'."
            ) from error

    @property
    def n(self):
        "The number of parties."
        return len(self.left) + len(self.right)

    def __str__(self):
        left = ",".join(str(party) for party in sorted(self.left))
        right = ",".join(str(party) for party in sorted(self.right))
        return f"{left}|{right}"


def _check_digits_fit(digits, dims):
    "Raise if the digits don't fit the radices of dims."
    if len(digits) != dims.n:
        raise InvalidIndexError(
            f"Invalid multi-index length '{len(digits)}'. "
            f"Should be {dims.n} for dimensions {dims.dims}."
        )
    for position, (digit, radix) in enumerate(zip(digits, dims.dims), start=1):
        if not 0 <= digit < radix:
            raise InvalidIndexError(
                f"Invalid digit '{digit}' for radix {radix} at position {position}."
            )


def _check_linear(index, total):
    "Raise if a 1-based index is outside [1, total]."
    if not 1 <= index <= total:
        raise InvalidIndexError(
            f"Invalid index '{index}'. Should be between 1 and {total}."
        )


def linear_index(multi_index, dims):
    r"""
    The 1-based linear index of a product basis state.

    .. math::

        i = \sum_{k=1}^{n-1} i_k d_{k+1} d_{k+2} \cdots d_n + i_n + 1

    Parameters
    ----------
    multi_index : :class:`intrication.MultiIndex` or list of int
        The digits :math:`(i_1, \ldots, i_n)`.
    dims : :class:`intrication.SubsystemDims`
        The local dimensions.

    Returns
    -------
    index : int
        The linear index, between 1 and :math:`D`.

    Examples
    --------

    >>> linear_index([2, 1, 0], SubsystemDims([3, 3, 3]))
    22
    >>> linear_index([1, 1, 1], SubsystemDims.qubits(3))
    8

    """
    if not isinstance(multi_index, MultiIndex):
        multi_index = MultiIndex(multi_index)
    digits = multi_index.digits
    _check_digits_fit(digits, dims)
    return sum(digit * stride for digit, stride in zip(digits, dims.strides)) + 1


def multi_index(index, dims):
    """
    The digits of the product basis state with the given 1-based index.

    Inverse of :func:`intrication.linear_index`.

    Examples
    --------

    >>> print(multi_index(22, SubsystemDims([3, 3, 3])).digits)
    (2, 1, 0)

    """
    _check_linear(index, dims.total)
    digits = np.unravel_index(index - 1, dims.dims)
    return MultiIndex(digits)


def complement(multi_index, dims):
    """
    Replace every digit :math:`i_k` by :math:`d_k - 1 - i_k`.
    """
    _check_digits_fit(multi_index.digits, dims)
    return MultiIndex(
        levels - 1 - digit for digit, levels in zip(multi_index.digits, dims.dims)
    )


def mirror_index(index, total):
    """
    The index paired with ``index`` on the anti-diagonal: :math:`D - i + 1`.

    Mirroring a linear index is the same as complementing every digit of its
    multi-index.

    Examples
    --------

    >>> mirror_index(2, 8)
    7
    >>> mirror_index(14, 27)
    14

    """
    _check_linear(index, total)
    return total - index + 1


def corner_indices(dims):
    r"""
    The corner index set :math:`A`.

    All linear indices whose digits are extreme, :math:`i_k \in \{0, d_k - 1\}`,
    except the all-zeros and all-maximum indices (1 and :math:`D`). There are
    always :math:`2^n - 2` of them.

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims`
        The local dimensions.

    Returns
    -------
    indices : tuple of int
        The 1-based indices, sorted in ascending order.

    Examples
    --------

    >>> corner_indices(SubsystemDims([3, 3, 3]))
    (3, 7, 9, 19, 21, 25)
    >>> corner_indices(SubsystemDims([2, 3]))
    (3, 4)

    """
    extremes = [(0, levels - 1) for levels in dims.dims]
    indices = {linear_index(digits, dims) for digits in itertools.product(*extremes)}
    indices -= {1, dims.total}
    return tuple(sorted(indices))


def single_excitation_indices(n):
    """
    Linear indices of the n-qubit basis states with exactly one qubit set.

    The k-th element (k from 1) is :math:`2^{n-k} + 1`, the index of the state
    with qubit k set.

    Examples
    --------

    >>> single_excitation_indices(4)
    [9, 5, 3, 2]

    """
    if n < 2:
        raise InvalidDimensionsError(
            f"Invalid number of qubits '{n}'. Should be at least 2."
        )
    return [2 ** (n - k) + 1 for k in range(1, n + 1)]


def pair_excitation_index(i, j, n):
    """
    Linear index of the n-qubit basis state with qubits i and j set.

    Returns :math:`2^{n-i} + 2^{n-j} + 1`. Qubits are labelled from 1.

    Examples
    --------

    >>> pair_excitation_index(2, 1, 3)
    7
    >>> pair_excitation_index(3, 1, 3)
    6

    """
    if i == j:
        raise InvalidPairError(f"Invalid pair '({i}, {j})'. Qubits must differ.")
    for qubit in (i, j):
        if not 1 <= qubit <= n:
            raise InvalidPairError(
                f"Invalid qubit '{qubit}'. Should be between 1 and {n}."
            )
    return 2 ** (n - i) + 2 ** (n - j) + 1


def bipartitions(n):
    """
    All the ways of splitting n parties into two nonempty groups.

    Each split is listed once, with party 1 in the left group. There are
    :math:`2^{n-1} - 1` of them.

    Examples
    --------

    >>> [str(partition) for partition in bipartitions(3)]
    ['1|2,3', '1,2|3', '1,3|2']

    """
    if n < 2:
        raise InvalidDimensionsError(
            f"Invalid number of parties '{n}'. Should be at least 2."
        )
    others = range(2, n + 1)
    return [
        Bipartition.from_left({1, *extra}, n)
        for size in range(n - 1)
        for extra in itertools.combinations(others, size)
    ]


def partition_corner_pair(dims, partition):
    """
    The pair of mirrored corner indices singled out by a bipartition.

    The first index has digits :math:`d_k - 1` on the left group and 0 on the
    right group, the second is its mirror. For a pure state that factorizes
    across the bipartition,
    :math:`|\\rho_{1,D}| = \\sqrt{\\rho_{a,a} \\rho_{b,b}}`.

    Returns
    -------
    a, b : int
        The 1-based corner indices.

    Examples
    --------

    >>> partition_corner_pair(SubsystemDims.qubits(3), Bipartition({1}, {2, 3}))
    (5, 4)

    """
    if partition.n != dims.n:
        raise InvalidPartitionError(
            f"Invalid bipartition '{partition}' for {dims.n} parties."
        )
    digits = [
        levels - 1 if party in partition.left else 0
        for party, levels in enumerate(dims.dims, start=1)
    ]
    first = linear_index(digits, dims)
    return first, mirror_index(first, dims.total)
