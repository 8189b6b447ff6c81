# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Test the soundness runs and the pure state identities.
"""
import pytest

from .. import (
    QUBIT_SAMPLES,
    QUDIT_SAMPLES,
    Bipartition,
    CriterionId,
    InvalidPartitionError,
    OracleRunSpec,
    SamplingMode,
    SeparableSampleSpec,
    bipartitions,
    check_bisep_qudit,
    check_pure_biseparable_identity,
    check_pure_product_equalities,
    random_separable_mixture,
    run_soundness,
    sample_seed,
)


def test_spec_defaults():
    "Check the default sample counts and selections"
    spec = OracleRunSpec([2, 2, 2])
    assert spec.samples == QUBIT_SAMPLES
    assert spec.modes == tuple(SamplingMode)
    assert CriterionId.GHZ_NOISE_EXACT_T5 not in spec.criteria
    assert spec.num_terms == 1
    assert OracleRunSpec([3, 3]).samples == QUDIT_SAMPLES
    spec = OracleRunSpec([2, 2], samples=5, modes="fully_separable", criteria="t1")
    assert spec.modes == (SamplingMode.FULLY_SEPARABLE,)
    assert spec.criteria == (CriterionId.BISEP_QUBIT_T1,)


def test_spec_invalid():
    "Check that invalid runs are rejected"
    with pytest.raises(ValueError):
        OracleRunSpec([2, 2], samples=0)
    with pytest.raises(ValueError):
        OracleRunSpec([2, 2], num_terms=0)
    with pytest.raises(ValueError):
        OracleRunSpec([2, 2], modes=["bell"])
    with pytest.raises(InvalidPartitionError):
        OracleRunSpec([2, 2], partition=Bipartition.from_left([1], n=3))


def test_soundness_biseparable_qubits():
    """
    Check that mixtures of biseparable states never violate the
    anti-diagonal biseparability criterion
    """
    spec = OracleRunSpec(
        [2, 2, 2],
        samples=10_000,
        seed=0,
        modes=[SamplingMode.BISEPARABLE_MIXED],
        criteria="t1",
        num_terms=3,
    )
    summary = run_soundness(spec)
    assert summary.sound
    assert summary.violations == 0
    (result,) = summary.results
    assert result.criterion is CriterionId.BISEP_QUBIT_T1
    assert result.samples == 10_000
    assert result.violations == 0
    assert result.max_margin <= spec.tol


@pytest.mark.slow
@pytest.mark.parametrize("mode", ["biseparable_fixed", "biseparable_mixed_partitions"])
@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 2, 2)], ids=str)
def test_soundness_biseparable_full_run(dims, mode):
    """
    Check the genuine multipartite criteria on the full number of qubit
    samples drawn from biseparable states
    """
    spec = OracleRunSpec(
        dims, samples=QUBIT_SAMPLES, seed=1, modes=mode, criteria="t1,t2,t3"
    )
    summary = run_soundness(spec)
    assert summary.sound
    assert [result.criterion for result in summary.results] == [
        CriterionId.BISEP_QUBIT_T1,
        CriterionId.BISEP_QUDIT_T2,
        CriterionId.W_TYPE_T3,
    ]
    for result in summary.results:
        assert result.samples == QUBIT_SAMPLES
        assert result.max_margin <= spec.tol


@pytest.mark.slow
@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 2, 2)], ids=str)
def test_soundness_fully_separable_full_run(dims):
    """
    Check the full separability criteria on the full number of qubit samples
    drawn from mixtures of product states
    """
    spec = OracleRunSpec(
        dims,
        samples=QUBIT_SAMPLES,
        seed=2,
        modes="fully_separable",
        criteria="t4a,t4b",
        num_terms=3,
    )
    summary = run_soundness(spec)
    assert summary.sound
    for result in summary.results:
        assert result.samples == QUBIT_SAMPLES
        assert result.max_margin <= spec.tol


@pytest.mark.slow
def test_soundness_qutrits_full_run():
    """
    Check the qudit criteria on the full number of qutrit samples of every
    mode (the full separability one only on fully separable samples)
    """
    spec = OracleRunSpec([3, 3, 3], seed=3, criteria="t2,t6", num_terms=2)
    assert spec.samples == QUDIT_SAMPLES
    summary = run_soundness(spec)
    assert summary.sound
    counts = {result.criterion: result.samples for result in summary.results}
    assert counts == {
        CriterionId.BISEP_QUDIT_T2: 3 * QUDIT_SAMPLES,
        CriterionId.FULLSEP_QUDIT_T6: QUDIT_SAMPLES,
    }


def test_soundness_fully_separable_qutrits():
    """
    Check that the qudit full separability criterion holds on mixtures of
    product states
    """
    spec = OracleRunSpec(
        [3, 3, 3],
        samples=1000,
        seed=7,
        modes="fully_separable",
        criteria="t6",
        num_terms=2,
    )
    summary = run_soundness(spec)
    assert summary.sound
    (result,) = summary.results
    assert result.criterion is CriterionId.FULLSEP_QUDIT_T6
    assert result.max_margin <= spec.tol


def test_soundness_pure_products_on_boundary():
    """
    Check that a single pure product state sits on the boundary of the GHZ-type
    criterion
    """
    spec = OracleRunSpec([2, 2], samples=1, modes="fully_separable", criteria="t4a")
    summary = run_soundness(spec)
    (result,) = summary.results
    assert result.samples == 1
    assert result.max_abs_margin <= 1e-10
    assert summary.sound


def test_soundness_every_mode():
    """
    Check a run of all modes and criteria, with full separability criteria
    skipped on biseparable samples
    """
    spec = OracleRunSpec([2, 2, 2], samples=200, seed=3, num_terms=4)
    summary = run_soundness(spec)
    assert summary.sound
    counts = {result.criterion: result.samples for result in summary.results}
    assert counts[CriterionId.BISEP_QUBIT_T1] == 600
    assert counts[CriterionId.W_TYPE_T3] == 600
    assert counts[CriterionId.FULLSEP_GHZ_TYPE_T4A] == 200
    assert counts[CriterionId.FULLSEP_W_TYPE_T4B] == 200
    skipped = {(criterion, mode) for criterion, mode, _ in summary.skipped}
    assert (CriterionId.FULLSEP_W_TYPE_T4B, SamplingMode.BISEPARABLE_FIXED) in skipped
    assert (CriterionId.FULLSEP_GHZ_TYPE_T4A, SamplingMode.BISEPARABLE_MIXED) in (
        skipped
    )
    assert (CriterionId.BISEP_QUBIT_T1, SamplingMode.FULLY_SEPARABLE) not in skipped


def test_soundness_skipped_criteria():
    "Check that criteria that can't be run are listed with a reason"
    spec = OracleRunSpec([3, 2], samples=5, criteria="t1,t3,t5,t2")
    summary = run_soundness(spec)
    skipped = {criterion: reason for criterion, mode, reason in summary.skipped}
    assert set(skipped) == {
        CriterionId.BISEP_QUBIT_T1,
        CriterionId.W_TYPE_T3,
        CriterionId.GHZ_NOISE_EXACT_T5,
    }
    assert all(skipped.values())
    assert [result.criterion for result in summary.results] == [
        CriterionId.BISEP_QUDIT_T2
    ]


def test_worst_seed_reproduces_sample():
    """
    Check that the reported seed regenerates the state with the largest margin
    """
    spec = OracleRunSpec(
        [2, 2, 2],
        samples=50,
        seed=11,
        modes="biseparable_mixed_partitions",
        criteria="t1",
        num_terms=2,
    )
    (result,) = run_soundness(spec).results
    rho = random_separable_mixture(
        SeparableSampleSpec([2, 2, 2], 2, result.worst_seed, result.worst_mode)
    )
    assert check_bisep_qudit(rho).margin == result.max_margin
    seeds = [sample_seed(11, result.worst_mode, sample) for sample in range(50)]
    assert result.worst_seed in seeds


def test_sample_seed():
    "Check that sample seeds are reproducible and distinct"
    mode = SamplingMode.FULLY_SEPARABLE
    assert sample_seed(5, mode, 3) == sample_seed(5, mode, 3)
    seeds = {sample_seed(5, mode, sample) for sample in range(100)}
    assert len(seeds) == 100
    assert sample_seed(5, mode, 0) != sample_seed(6, mode, 0)
    assert sample_seed(5, mode, 0) != sample_seed(5, SamplingMode.BISEPARABLE_MIXED, 0)
    assert 0 <= sample_seed(-1, mode, 0) < 2**64


@pytest.mark.parametrize(
    "dims,partition",
    [
        ((2, 2, 2), "1|2,3"),
        ((3, 3, 3), "1,2|3"),
        ((2, 2), "1|2"),
        ((2, 3, 4), "1,3|2"),
    ],
    ids=["qubits", "qutrits", "two-qubits", "mixed"],
)
def test_pure_biseparable_identity(dims, partition):
    """
    Check the anti-diagonal identity of pure states that factorize across a
    bipartition
    """
    partition = Bipartition.parse(partition)
    for seed in range(20):
        assert check_pure_biseparable_identity(dims, partition, seed) <= 1e-12


@pytest.mark.parametrize("n", range(2, 9))
def test_pure_biseparable_identity_every_partition(n):
    "Check the identity for every bipartition of up to 8 qubits"
    for seed, partition in enumerate(bipartitions(n)[:20]):
        deviation = check_pure_biseparable_identity([2] * n, partition, seed)
        assert deviation <= 1e-10


@pytest.mark.parametrize(
    "dims", [(2, 2, 2), (2, 2, 2, 2), (3, 2), (3, 3, 3)], ids=str
)
def test_pure_product_equalities(dims):
    "Check the equalities satisfied by pure product states"
    for seed in range(1000):
        assert check_pure_product_equalities(dims, seed) <= 1e-10
