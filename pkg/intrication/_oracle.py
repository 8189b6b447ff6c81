# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Brute-force verification of the criteria on sampled separable states and of
the equalities that hold for pure product states.
"""
import logging

import attr
import numpy as np

from ._criteria import (
    CRITERIA,
    DEFAULT_TOLERANCE,
    GENUINE_CRITERIA,
    CriterionId,
    check_fullsep_ghz_type,
    parse_criteria,
)
from ._density_matrix import _as_dims
from ._exceptions import InvalidPartitionError
from ._states import (
    SEED_MASK,
    SamplingMode,
    SeparableSampleSpec,
    random_biseparable_pure,
    random_pure_product,
    random_separable_mixture,
)
from ._tensor_index import (
    bipartitions,
    pair_excitation_index,
    partition_corner_pair,
    single_excitation_indices,
)

LOGGER = logging.getLogger(__name__)

#: Default number of samples for qubit systems
QUBIT_SAMPLES = 10_000
#: Default number of samples for systems with a qudit
QUDIT_SAMPLES = 1_000

# Fixed position of each mode in the per-sample seed derivation
_MODE_KEYS = {mode: key for key, mode in enumerate(SamplingMode)}


def _modes(values):
    "Convert a list of modes (or mode names) into a tuple of SamplingMode"
    if isinstance(values, (str, SamplingMode)):
        values = [values]
    return tuple(SamplingMode(value) for value in values)


def _criteria_tuple(value):
    "Convert a criteria selection into a tuple of CriterionId"
    return tuple(parse_criteria(value))


def _default_samples(spec):
    "Default sample count for the run dimensions"
    return QUBIT_SAMPLES if spec.dims.is_qubit else QUDIT_SAMPLES


def _check_at_least_one(instance, attribute, value):
    "Check that a count is at least 1"
    if value < 1:
        raise ValueError(f"Invalid {attribute.name} '{value}'. Should be at least 1.")


@attr.s(frozen=True)
class OracleRunSpec:
    """
    Describes a soundness run of the criteria on random separable states.

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims` or list of int
        The local dimensions.
    samples : int
        Number of random states drawn for each mode. Defaults to 10 000 for
        qubit systems and 1 000 otherwise.
    seed : int
        The 64-bit seed of the run.
    modes : list of :class:`intrication.SamplingMode` or str
        The kinds of separable states to draw. All by default.
    criteria : None, str, or list
        The criteria to test (see :func:`intrication.parse_criteria`). All by
        default.
    tol : float
        Margins above this value count as violations.
    num_terms : int
        Number of pure states in each random mixture.
    partition : :class:`intrication.Bipartition` or None
        Bipartition for the ``biseparable_fixed`` mode. If None, samples cycle
        through every bipartition.
    """

    dims = attr.ib(converter=_as_dims)
    samples = attr.ib(
        default=attr.Factory(_default_samples, takes_self=True),
        converter=int,
        validator=_check_at_least_one,
    )
    seed = attr.ib(default=0, converter=int)
    modes = attr.ib(default=tuple(SamplingMode), converter=_modes)
    criteria = attr.ib(default=None, converter=_criteria_tuple)
    tol = attr.ib(default=DEFAULT_TOLERANCE, converter=float)
    num_terms = attr.ib(default=1, converter=int, validator=_check_at_least_one)
    partition = attr.ib(default=None)

    @partition.validator
    def _check_partition(self, partition, value):
        "Check that the partition has the right number of parties"
        if value is not None and value.n != self.dims.n:
            raise InvalidPartitionError(
                f"Invalid bipartition '{value}' for {self.dims.n} parties."
            )


@attr.s(frozen=True)
class CriterionSummary:
    """
    Aggregated results of one criterion over a soundness run.

    Attributes
    ----------
    criterion : :class:`intrication.CriterionId`
    samples : int
        Number of states the criterion was evaluated on.
    max_margin : float
        The largest margin found. Should never exceed the tolerance.
    max_abs_margin : float
        The largest margin magnitude found.
    violations : int
        Number of states that violated the criterion. Must be 0.
    worst_seed : int
        Seed of the state with the largest margin. Passing it to
        :func:`intrication.random_separable_mixture` with the same dimensions,
        number of terms, and ``worst_mode`` (and bipartition, in the
        ``biseparable_fixed`` mode) reproduces that state.
    worst_mode : :class:`intrication.SamplingMode`
    """

    criterion = attr.ib()
    samples = attr.ib()
    max_margin = attr.ib()
    max_abs_margin = attr.ib()
    violations = attr.ib()
    worst_seed = attr.ib()
    worst_mode = attr.ib()


@attr.s(frozen=True)
class OracleSummary:
    """
    The result of :func:`intrication.run_soundness`.

    Attributes
    ----------
    spec : :class:`intrication.OracleRunSpec`
    results : tuple of :class:`intrication.CriterionSummary`
    skipped : tuple of (criterion, mode, reason)
        Criterion and mode pairs that were not tested. ``mode`` is None when
        the criterion was skipped altogether.
    """

    spec = attr.ib()
    results = attr.ib(converter=tuple)
    skipped = attr.ib(converter=tuple, factory=tuple)

    @property
    def violations(self):
        "Total number of violations. Zero for a sound run."
        return sum(result.violations for result in self.results)

    @property
    def sound(self):
        "True if no criterion was violated."
        return self.violations == 0


class _Tally:
    "Running maximum and violation count of one criterion"

    def __init__(self, criterion):
        self.criterion = criterion
        self.samples = 0
        self.max_margin = -np.inf
        self.max_abs_margin = 0.0
        self.violations = 0
        self.worst_seed = None
        self.worst_mode = None

    def add(self, report, seed, mode):
        self.samples += 1
        self.max_abs_margin = max(self.max_abs_margin, abs(report.margin))
        if report.violated:
            self.violations += 1
            LOGGER.warning(
                "%s violated by sample seed=%d mode=%s: margin=%.3g",
                self.criterion.value,
                seed,
                mode.value,
                report.margin,
            )
        if report.margin > self.max_margin:
            self.max_margin = report.margin
            self.worst_seed = seed
            self.worst_mode = mode

    def freeze(self):
        return CriterionSummary(
            criterion=self.criterion,
            samples=self.samples,
            max_margin=float(self.max_margin),
            max_abs_margin=float(self.max_abs_margin),
            violations=self.violations,
            worst_seed=self.worst_seed,
            worst_mode=self.worst_mode,
        )


def _criterion_skip_reason(criterion, dims):
    "Why a criterion can't be part of a soundness run on these dimensions"
    if criterion is CriterionId.GHZ_NOISE_EXACT_T5:
        return "exact test of the GHZ white-noise family, not a soundness check"
    if not dims.is_qubit and criterion in (
        CriterionId.BISEP_QUBIT_T1,
        CriterionId.W_TYPE_T3,
        CriterionId.FULLSEP_GHZ_TYPE_T4A,
        CriterionId.FULLSEP_W_TYPE_T4B,
    ):
        return "defined for qubit systems only"
    return None


def _tests_mode(criterion, mode):
    "True if every state drawn in this mode must satisfy the criterion"
    return criterion in GENUINE_CRITERIA or mode is SamplingMode.FULLY_SEPARABLE


def sample_seed(seed, mode, sample):
    """
    The seed of one sample of a soundness run.

    Derived from the run seed, the mode, and the sample number only, so any
    sample can be regenerated independently of the others.
    """
    sequence = np.random.SeedSequence(
        int(seed) & SEED_MASK, spawn_key=(_MODE_KEYS[mode], sample)
    )
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def run_soundness(spec):
    """
    Check that random separable states never violate the criteria.

    For each mode, draws ``spec.samples`` random mixtures with
    :func:`intrication.random_separable_mixture` and evaluates the requested
    criteria on them. Biseparable states are only tested against the
    biseparability criteria (they may legitimately violate the full
    separability ones). A violation is a soundness failure that is reported
    in the summary, not raised.

    Parameters
    ----------
    spec : :class:`intrication.OracleRunSpec`

    Returns
    -------
    summary : :class:`intrication.OracleSummary`
    """
    dims = spec.dims
    skipped = []
    runnable = []
    for criterion in spec.criteria:
        reason = _criterion_skip_reason(criterion, dims)
        if reason is None:
            runnable.append(criterion)
        else:
            skipped.append((criterion, None, reason))
    tallies = {criterion: _Tally(criterion) for criterion in runnable}
    splits = bipartitions(dims.n)
    LOGGER.info(
        "Soundness run: dims=%s samples=%d modes=%s criteria=%s",
        dims.dims,
        spec.samples,
        [mode.value for mode in spec.modes],
        [criterion.value for criterion in runnable],
    )
    for mode in spec.modes:
        criteria = [c for c in runnable if _tests_mode(c, mode)]
        for criterion in runnable:
            if criterion not in criteria:
                skipped.append(
                    (criterion, mode, "biseparable states may violate it")
                )
        if not criteria:
            continue
        for sample in range(spec.samples):
            seed = sample_seed(spec.seed, mode, sample)
            partition = None
            if mode is SamplingMode.BISEPARABLE_FIXED:
                partition = spec.partition
                if partition is None:
                    partition = splits[sample % len(splits)]
            rho = random_separable_mixture(
                SeparableSampleSpec(dims, spec.num_terms, seed, mode, partition)
            )
            for criterion in criteria:
                tallies[criterion].add(CRITERIA[criterion](rho, spec.tol), seed, mode)
    results = [tally.freeze() for tally in tallies.values() if tally.samples]
    summary = OracleSummary(spec, results, skipped)
    LOGGER.info("Soundness run finished with %d violations", summary.violations)
    return summary


def check_pure_biseparable_identity(dims, partition, seed):
    r"""
    Deviation from the anti-diagonal identity of biseparable pure states.

    For a pure state that factorizes across a bipartition,
    :math:`|\rho_{1,D}| = \sqrt{\rho_{a,a} \rho_{b,b}}` where :math:`a, b` are
    the corner indices selected by the bipartition
    (:func:`intrication.partition_corner_pair`).

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims` or list of int
    partition : :class:`intrication.Bipartition`
    seed : int
        Seed of the random biseparable pure state.

    Returns
    -------
    deviation : float
        The absolute difference between the two sides.

    Examples
    --------

    >>> from intrication import Bipartition
    >>> deviation = check_pure_biseparable_identity(
    ...     [2, 2, 2], Bipartition({1}, {2, 3}), seed=42
    ... )
    >>> print(deviation < 1e-12)
    True

    """
    dims = _as_dims(dims)
    rho = random_biseparable_pure(dims, partition, seed)
    first, second = partition_corner_pair(dims, partition)
    diagonal = rho.diagonal
    bound = np.sqrt(diagonal[first - 1] * diagonal[second - 1])
    return float(abs(abs(rho.entry(1, rho.total)) - bound))


def check_pure_product_equalities(dims, seed):
    r"""
    Largest deviation from the equalities satisfied by pure product states.

    For a fully separable pure state the GHZ-type full separability
    inequality is an equality. For qubits, every pair of single excitations
    also satisfies
    :math:`|\rho_{2^i+1,2^j+1}| = \sqrt{\rho_{1,1} \rho_{2^i+2^j+1,2^i+2^j+1}}`.

    Parameters
    ----------
    dims : :class:`intrication.SubsystemDims` or list of int
    seed : int
        Seed of the random product state.

    Returns
    -------
    deviation : float
        The largest absolute difference between the two sides over all the
        equalities that apply to ``dims``.
    """
    dims = _as_dims(dims)
    rho = random_pure_product(dims, seed)
    deviations = [abs(check_fullsep_ghz_type(rho).margin)]
    if dims.is_qubit:
        n = dims.n
        singles = single_excitation_indices(n)
        diagonal = rho.diagonal
        for i in range(2, n + 1):
            for j in range(1, i):
                coherence = abs(rho.entry(singles[i - 1], singles[j - 1]))
                double = pair_excitation_index(i, j, n)
                bound = np.sqrt(diagonal[0] * diagonal[double - 1])
                deviations.append(abs(coherence - bound))
    return float(max(deviations))
