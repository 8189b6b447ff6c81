# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Named states (GHZ, W, white-noise mixtures) and seeded samplers of random
separable and biseparable states.
"""
import enum
import functools
import math
from warnings import warn

import attr
import numpy as np

from ._density_matrix import DensityMatrix, _as_dims
from ._exceptions import InvalidPartitionError
from ._tensor_index import SubsystemDims, bipartitions, single_excitation_indices

# Seeds are 64-bit integers. Negative values wrap around.
SEED_MASK = 2**64 - 1


class SamplingMode(enum.Enum):
    """
    How the pure components of a random mixture factorize.
    """

    #: Product of single-party states
    FULLY_SEPARABLE = "fully_separable"
    #: Product across the same bipartition for every component
    BISEPARABLE_FIXED = "biseparable_fixed"
    #: Product across a random bipartition drawn for each component
    BISEPARABLE_MIXED = "biseparable_mixed_partitions"


@attr.s(frozen=True)
class NoiseFamilyParams:
    r"""
    Parameters of the GHZ state mixed with white noise.

    .. math::

        \rho(p) = (1 - p) |\mathrm{GHZ}_n\rangle\langle\mathrm{GHZ}_n|
            + \dfrac{p}{2^n} I

    Parameters
    ----------
    n : int
        Number of qubits (at least 2).
    p : float
        Weight of the white noise, between 0 and 1.
    """

    n = attr.ib(converter=int)
    p = attr.ib(converter=float)

    @n.validator
    def _check_n(self, n, value):
        "Check that there are at least 2 qubits"
        if value < 2:
            raise ValueError(f"Invalid number of qubits '{value}'. Should be >= 2.")

    @p.validator
    def _check_p(self, p, value):
        "Check that the noise weight is a probability"
        if not 0 <= value <= 1:
            raise ValueError(
                f"Invalid noise weight '{value}'. Should be between 0 and 1."
            )


@attr.s(frozen=True)
class SeparableSampleSpec:
    """
    Describes a random mixture of separable or biseparable pure states.

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims` or list of int
        The local dimensions.
    num_terms : int
        Number of pure states in the mixture (at least 1).
    seed : int
        The 64-bit seed. The same parameters always produce the same matrix.
    mode : :class:`intrication.SamplingMode` or str
        How each pure component factorizes.
    partition : :class:`intrication.Bipartition` or None
        The bipartition used by the ``biseparable_fixed`` mode. Required for
        that mode and ignored by the others.
    """

    dims = attr.ib(converter=_as_dims)
    num_terms = attr.ib(default=1, converter=int)
    seed = attr.ib(default=0, converter=int)
    mode = attr.ib(default=SamplingMode.FULLY_SEPARABLE, converter=SamplingMode)
    partition = attr.ib(default=None)

    @num_terms.validator
    def _check_num_terms(self, num_terms, value):
        "Check that the mixture has at least one term"
        if value < 1:
            raise ValueError(
                f"Invalid number of terms '{value}'. Should be at least 1."
            )

    @partition.validator
    def _check_partition(self, partition, value):
        "Check that the partition matches the mode and the dimensions"
        if self.mode is SamplingMode.BISEPARABLE_FIXED and value is None:
            raise InvalidPartitionError(
                "A bipartition is required for the 'biseparable_fixed' mode."
            )
        if value is None:
            return
        if value.n != self.dims.n:
            raise InvalidPartitionError(
                f"Invalid bipartition '{value}' for {self.dims.n} parties."
            )
        if self.mode is not SamplingMode.BISEPARABLE_FIXED:
            warn(f"Bipartition '{value}' is ignored by the '{self.mode.value}' mode.")


def _rng(seed, *key):
    "A generator seeded by the 64-bit seed and an optional spawn key"
    sequence = np.random.SeedSequence(int(seed) & SEED_MASK, spawn_key=key)
    return np.random.default_rng(sequence)


def _haar_vector(rng, dimension):
    "A Haar-random unit vector: normalized standard complex Gaussian amplitudes"
    vector = rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)
    return vector / np.linalg.norm(vector)


def _product_vector(rng, dims):
    "Tensor product of independent Haar-random single-party vectors"
    factors = [_haar_vector(rng, levels) for levels in dims.dims]
    return functools.reduce(np.kron, factors)


def _biseparable_vector(rng, dims, partition):
    "Haar-random vectors on each group of a bipartition, in party order"
    left = sorted(partition.left)
    right = sorted(partition.right)
    order = [party - 1 for party in left + right]
    shape = [dims.dims[axis] for axis in order]
    first = _haar_vector(rng, math.prod(dims.dims[party - 1] for party in left))
    second = _haar_vector(rng, math.prod(dims.dims[party - 1] for party in right))
    tensor = np.kron(first, second).reshape(shape)
    return np.transpose(tensor, np.argsort(order)).reshape(-1)


def _projector(vector):
    "The rank-1 projector onto a unit vector"
    return np.outer(vector, vector.conj())


def _uniform_support_state(dims, support):
    "Projector onto the equal superposition of the given 1-based basis states"
    entries = np.zeros((dims.total, dims.total), dtype=complex)
    rows = np.asarray(support) - 1
    entries[np.ix_(rows, rows)] = 1 / len(support)
    return DensityMatrix(dims, entries)


def maximally_mixed(dims):
    """
    The maximally mixed state :math:`I/D`.
    """
    dims = _as_dims(dims)
    return DensityMatrix(dims, np.eye(dims.total) / dims.total)


def ghz_qudit(n, d):
    r"""
    The n-partite qudit GHZ state.

    Projector onto :math:`\frac{1}{\sqrt{d}} \sum_{k=0}^{d-1} |k k \cdots k\rangle`.

    Parameters
    ----------
    n : int
        Number of parties (at least 2).
    d : int
        Number of levels of every party (at least 2).

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`

    Examples
    --------

    >>> rho = ghz_qudit(3, 3)
    >>> print(f"{rho.entry(1, 27).real:.4f}")
    0.3333

    """
    dims = SubsystemDims.uniform(n, d)
    step = sum(dims.strides)
    return _uniform_support_state(dims, [k * step + 1 for k in range(d)])


def ghz(n):
    """
    The n-qubit GHZ state
    :math:`(|0 \\cdots 0\\rangle + |1 \\cdots 1\\rangle)/\\sqrt{2}`.

    The only nonzero entries are
    :math:`\\rho_{1,1} = \\rho_{1,D} = \\rho_{D,1} = \\rho_{D,D} = 1/2`.

    Examples
    --------

    >>> rho = ghz(3)
    >>> print(rho.entry(1, 8).real, rho.entry(2, 2).real)
    0.5 0.0

    """
    return ghz_qudit(n, 2)


def w_state(n):
    """
    The n-qubit W state, the equal superposition of all basis states with a
    single qubit set.

    Examples
    --------

    >>> rho = w_state(4)
    >>> print([i for i in range(1, 17) if rho.entry(i, i).real > 0])
    [2, 3, 5, 9]

    """
    dims = SubsystemDims.qubits(n)
    return _uniform_support_state(dims, sorted(single_excitation_indices(n)))


def white_noise(state, p):
    """
    Mix a state with white noise: :math:`(1 - p) \\rho + p I / D`.

    Parameters
    ----------
    state : :class:`intrication.DensityMatrix`
        The state to degrade.
    p : float
        Weight of the noise, between 0 and 1.

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`
    """
    if not 0 <= p <= 1:
        raise ValueError(f"Invalid noise weight '{p}'. Should be between 0 and 1.")
    total = state.total
    entries = (1 - p) * state.entries + (p / total) * np.eye(total)
    return DensityMatrix(state.dims, entries, state.config)


def ghz_white_noise(params):
    """
    The GHZ state mixed with white noise.

    Parameters
    ----------
    params : :class:`intrication.NoiseFamilyParams`
        Number of qubits and noise weight.

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`

    Examples
    --------

    >>> rho = ghz_white_noise(NoiseFamilyParams(n=3, p=0.8))
    >>> print(f"{rho.entry(1, 8).real:.4f} {rho.entry(2, 2).real:.4f}")
    0.1000 0.1000

    """
    return white_noise(ghz(params.n), params.p)


def fit_ghz_noise(rho, tol=1e-10):
    """
    Recognize a member of the GHZ white-noise family.

    Parameters
    ----------
    rho : :class:`intrication.DensityMatrix`
        Any state.
    tol : float
        Largest accepted entry-wise difference from the family member.

    Returns
    -------
    params : :class:`intrication.NoiseFamilyParams` or None
        The parameters of the matching member, or None if the state is not in
        the family.
    """
    if not rho.is_qubit:
        return None
    p = rho.total * rho.diagonal[1]
    if not -tol <= p <= 1 + tol:
        return None
    params = NoiseFamilyParams(rho.dims.n, min(max(p, 0.0), 1.0))
    member = ghz_white_noise(params)
    if np.max(np.abs(member.entries - rho.entries)) > tol:
        return None
    return params


def random_pure_product(dims, seed):
    """
    A random fully separable pure state.

    Each party gets an independent Haar-random pure state (normalized complex
    Gaussian amplitudes).

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims` or list of int
        The local dimensions.
    seed : int
        The 64-bit seed. The same seed gives the same matrix, bit for bit.

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`
    """
    dims = _as_dims(dims)
    return DensityMatrix(dims, _projector(_product_vector(_rng(seed), dims)))


def random_biseparable_pure(dims, partition, seed):
    """
    A random pure state that factorizes across the given bipartition.

    Each group of parties gets an independent Haar-random pure state.
    """
    dims = _as_dims(dims)
    if partition.n != dims.n:
        raise InvalidPartitionError(
            f"Invalid bipartition '{partition}' for {dims.n} parties."
        )
    vector = _biseparable_vector(_rng(seed), dims, partition)
    return DensityMatrix(dims, _projector(vector))


def random_separable_mixture(spec):
    """
    A random convex mixture of separable or biseparable pure states.

    The weights are uniform on the simplex (normalized exponential variates).
    The components are drawn according to ``spec.mode``. The mixture weights
    and each component use their own generator spawned from ``spec.seed``, so
    the result only depends on the spec.

    Parameters
    ----------
    spec : :class:`intrication.SeparableSampleSpec`

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`
    """
    dims = spec.dims
    children = np.random.SeedSequence(spec.seed & SEED_MASK).spawn(spec.num_terms + 1)
    weights = np.random.default_rng(children[0]).exponential(size=spec.num_terms)
    weights /= weights.sum()
    if spec.mode is SamplingMode.BISEPARABLE_MIXED:
        splits = bipartitions(dims.n)
    entries = np.zeros((dims.total, dims.total), dtype=complex)
    for weight, child in zip(weights, children[1:]):
        rng = np.random.default_rng(child)
        if spec.mode is SamplingMode.FULLY_SEPARABLE:
            vector = _product_vector(rng, dims)
        elif spec.mode is SamplingMode.BISEPARABLE_FIXED:
            vector = _biseparable_vector(rng, dims, spec.partition)
        else:
            partition = splits[rng.integers(len(splits))]
            vector = _biseparable_vector(rng, dims, partition)
        entries += weight * _projector(vector)
    return DensityMatrix(dims, entries)
