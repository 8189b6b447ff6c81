# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# Import functions/classes to make the public API
from ._criteria import (
    CRITERIA,
    DEFAULT_TOLERANCE,
    FULL_SEPARABILITY_CRITERIA,
    GENUINE_CRITERIA,
    INEQUALITY_CRITERIA,
    NOISE_FAMILIES,
    CriterionId,
    CriterionReport,
    Evaluation,
    Implication,
    NoiseClass,
    NoiseClassification,
    Verdict,
    check_bisep_qudit,
    check_fullsep_ghz_type,
    check_fullsep_w_type,
    check_ghz_noise_exact,
    check_w_type,
    classify_ghz_noise,
    closed_form_threshold,
    critical_noise,
    evaluate,
    ghz_noise_threshold,
    inapplicable_reason,
    overall_classification,
    parse_criteria,
)
from ._density_matrix import (
    DEFAULT_VALIDATION,
    DensityMatrix,
    ValidationConfig,
)
from ._exceptions import (
    BracketError,
    DimensionMismatchError,
    HermiticityError,
    InvalidDimensionsError,
    InvalidIndexError,
    InvalidPairError,
    InvalidPartitionError,
    NegativeDiagonalError,
    NumericFailureError,
    PSDError,
    StateFileError,
    TraceError,
    UnsupportedDimensionError,
    ValidationError,
)
from ._io import (
    evaluation_to_dict,
    format_evaluation,
    format_summary,
    read_state_file,
    report_to_dict,
    state_from_dict,
    state_to_dict,
    summary_to_dict,
    write_state_file,
)
from ._oracle import (
    QUBIT_SAMPLES,
    QUDIT_SAMPLES,
    CriterionSummary,
    OracleRunSpec,
    OracleSummary,
    check_pure_biseparable_identity,
    check_pure_product_equalities,
    run_soundness,
    sample_seed,
)
from ._states import (
    NoiseFamilyParams,
    SamplingMode,
    SeparableSampleSpec,
    fit_ghz_noise,
    ghz,
    ghz_qudit,
    ghz_white_noise,
    maximally_mixed,
    random_biseparable_pure,
    random_pure_product,
    random_separable_mixture,
    w_state,
    white_noise,
)
from ._tensor_index import (
    MAX_DIMENSION,
    Bipartition,
    MultiIndex,
    SubsystemDims,
    bipartitions,
    complement,
    corner_indices,
    linear_index,
    mirror_index,
    multi_index,
    pair_excitation_index,
    partition_corner_pair,
    single_excitation_indices,
)
from ._version import __version__
