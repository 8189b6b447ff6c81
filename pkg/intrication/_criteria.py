# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Element-wise separability criteria.

Every criterion is an inequality between matrix entries that holds for all
biseparable (or all fully separable) states. A violation certifies the
corresponding kind of entanglement. Satisfying it proves nothing, except for
the GHZ white-noise family where the fully separable GHZ-type inequality is
also sufficient.
"""
import enum
import functools
import logging

import attr
import numpy as np

from ._exceptions import BracketError, NumericFailureError, UnsupportedDimensionError
from ._states import fit_ghz_noise, ghz, ghz_white_noise, w_state, white_noise
from ._tensor_index import (
    corner_indices,
    pair_excitation_index,
    single_excitation_indices,
)

LOGGER = logging.getLogger(__name__)

#: Default tolerance on the margin before a criterion is considered violated
DEFAULT_TOLERANCE = 1e-10

# Upper bound on bisection steps in critical_noise
MAX_BISECTIONS = 200


class CriterionId(enum.Enum):
    """
    The separability criteria. Values are the short ids used on the command
    line and in report files.
    """

    BISEP_QUBIT_T1 = "t1"
    BISEP_QUDIT_T2 = "t2"
    W_TYPE_T3 = "t3"
    FULLSEP_GHZ_TYPE_T4A = "t4a"
    FULLSEP_W_TYPE_T4B = "t4b"
    GHZ_NOISE_EXACT_T5 = "t5"
    FULLSEP_QUDIT_T6 = "t6"

    @property
    def long_name(self):
        "A descriptive name for reports."
        return _LONG_NAMES[self]


_LONG_NAMES = {
    CriterionId.BISEP_QUBIT_T1: "BisepQubit_T1",
    CriterionId.BISEP_QUDIT_T2: "BisepQudit_T2",
    CriterionId.W_TYPE_T3: "WType_T3",
    CriterionId.FULLSEP_GHZ_TYPE_T4A: "FullSepGhzType_T4a",
    CriterionId.FULLSEP_W_TYPE_T4B: "FullSepWType_T4b",
    CriterionId.GHZ_NOISE_EXACT_T5: "GhzNoiseExact_T5",
    CriterionId.FULLSEP_QUDIT_T6: "FullSepQudit_T6",
}

#: Criteria whose violation certifies genuine multipartite entanglement
GENUINE_CRITERIA = frozenset(
    [CriterionId.BISEP_QUBIT_T1, CriterionId.BISEP_QUDIT_T2, CriterionId.W_TYPE_T3]
)
#: Criteria whose violation certifies that the state is not fully separable
FULL_SEPARABILITY_CRITERIA = frozenset(
    [
        CriterionId.FULLSEP_GHZ_TYPE_T4A,
        CriterionId.FULLSEP_W_TYPE_T4B,
        CriterionId.FULLSEP_QUDIT_T6,
        CriterionId.GHZ_NOISE_EXACT_T5,
    ]
)
#: The inequalities selected by "all". The exact GHZ white-noise test has to
#: be requested by name.
INEQUALITY_CRITERIA = tuple(
    criterion
    for criterion in CriterionId
    if criterion is not CriterionId.GHZ_NOISE_EXACT_T5
)


class Verdict(enum.Enum):
    "Outcome of evaluating one inequality."

    VIOLATED = "violated"
    SATISFIED = "satisfied"


class Implication(enum.Enum):
    "What a criterion outcome says about the entanglement of the state."

    GENUINE_MULTIPARTITE_ENTANGLED = "genuine_multipartite_entangled"
    NOT_FULLY_SEPARABLE = "not_fully_separable"
    FULLY_SEPARABLE = "fully_separable"
    INCONCLUSIVE = "inconclusive"


class NoiseClass(enum.Enum):
    "Exact class of a GHZ white-noise state."

    FULLY_SEPARABLE = "fully_separable"
    ENTANGLED = "entangled"


def _implication(criterion, verdict):
    "The class implied by the verdict of a criterion"
    if verdict is Verdict.SATISFIED:
        if criterion is CriterionId.GHZ_NOISE_EXACT_T5:
            return Implication.FULLY_SEPARABLE
        return Implication.INCONCLUSIVE
    if criterion in GENUINE_CRITERIA:
        return Implication.GENUINE_MULTIPARTITE_ENTANGLED
    return Implication.NOT_FULLY_SEPARABLE


@attr.s(frozen=True)
class CriterionReport:
    """
    The result of evaluating a criterion on a state.

    Use :meth:`CriterionReport.from_sides` to create one so that the margin,
    verdict, and implication are consistent.

    Attributes
    ----------
    criterion : :class:`intrication.CriterionId`
        Which inequality was evaluated.
    lhs, rhs : float
        Left and right-hand sides of the inequality ``lhs <= rhs``.
    margin : float
        ``lhs - rhs``. Positive margins beyond the tolerance are violations.
    verdict : :class:`intrication.Verdict`
    implication : :class:`intrication.Implication`
    tolerance : float
        The tolerance the margin was compared against.
    """

    criterion = attr.ib()
    lhs = attr.ib(converter=float)
    rhs = attr.ib(converter=float)
    margin = attr.ib(converter=float)
    verdict = attr.ib()
    implication = attr.ib()
    tolerance = attr.ib(converter=float)

    @classmethod
    def from_sides(cls, criterion, lhs, rhs, tolerance):
        "Create a report from the two sides of the inequality."
        margin = float(lhs) - float(rhs)
        verdict = Verdict.VIOLATED if margin > tolerance else Verdict.SATISFIED
        LOGGER.debug(
            "%s: lhs=%.17g rhs=%.17g margin=%.3g %s",
            criterion.value,
            lhs,
            rhs,
            margin,
            verdict.value,
        )
        return cls(
            criterion=criterion,
            lhs=lhs,
            rhs=rhs,
            margin=margin,
            verdict=verdict,
            implication=_implication(criterion, verdict),
            tolerance=tolerance,
        )

    @property
    def violated(self):
        "True if the inequality is violated."
        return self.verdict is Verdict.VIOLATED


@functools.lru_cache(maxsize=None)
def _corners(dims):
    "0-based corner indices and their mirrors"
    corners = np.array(corner_indices(dims)) - 1
    mirrors = dims.total - 1 - corners
    return corners, mirrors


def _qubit_count(rho, criterion):
    "Number of qubits, raising if any party is not a qubit"
    if not rho.is_qubit:
        raise UnsupportedDimensionError(
            f"Criterion '{criterion.value}' is defined for qubits only. "
            f"Got dimensions {rho.dims.dims}."
        )
    return rho.dims.n


def _excitation_terms(rho):
    """
    The three sums shared by the W-type inequalities: coherences between
    single-excitation states, the matching bounds from the vacuum and
    double-excitation populations, and the single-excitation populations.
    """
    n = rho.dims.n
    singles = np.array(single_excitation_indices(n)) - 1
    pairs = [(i, j) for i in range(2, n + 1) for j in range(1, i)]
    rows = singles[[i - 1 for i, _ in pairs]]
    columns = singles[[j - 1 for _, j in pairs]]
    doubles = np.array([pair_excitation_index(i, j, n) for i, j in pairs]) - 1
    diagonal = rho.diagonal
    coherences = float(np.sum(np.abs(rho.entries[rows, columns])))
    bounds = float(np.sum(np.sqrt(diagonal[0] * diagonal[doubles])))
    populations = float(np.sum(diagonal[singles]))
    return coherences, bounds, populations


def _corner_geometric_mean(rho):
    "Geometric mean of the corner diagonal entries, computed with logarithms"
    corners, _ = _corners(rho.dims)
    values = rho.diagonal[corners]
    if np.any(values <= 0):
        return 0.0
    return float(np.exp(np.mean(np.log(values))))


def check_bisep_qudit(rho, tol=DEFAULT_TOLERANCE):
    r"""
    Biseparability criterion on the anti-diagonal corner.

    Every biseparable state satisfies

    .. math::

        |\rho_{1,D}| \leq \frac{1}{2} \sum_{i \in A}
            \sqrt{\rho_{i,i} \rho_{D-i+1,D-i+1}}

    in which :math:`A` is the corner index set
    (:func:`intrication.corner_indices`). A violation means the state is
    genuinely multipartite entangled. For qubit systems :math:`A` is
    :math:`\{2, \ldots, 2^n - 1\}` and the report is labelled
    ``t1`` instead of ``t2``.

    Parameters
    ----------
    rho : :class:`intrication.DensityMatrix`
        The state to test.
    tol : float
        The margin must exceed this value to count as a violation.

    Returns
    -------
    report : :class:`intrication.CriterionReport`

    Examples
    --------

    >>> from intrication import ghz
    >>> report = check_bisep_qudit(ghz(3))
    >>> print(report.lhs, report.rhs, report.verdict.value)
    0.5 0.0 violated
    >>> print(report.implication.value)
    genuine_multipartite_entangled

    """
    corners, mirrors = _corners(rho.dims)
    diagonal = rho.diagonal
    lhs = abs(rho.entries[0, -1])
    rhs = 0.5 * np.sum(np.sqrt(diagonal[corners] * diagonal[mirrors]))
    if rho.is_qubit:
        criterion = CriterionId.BISEP_QUBIT_T1
    else:
        criterion = CriterionId.BISEP_QUDIT_T2
    return CriterionReport.from_sides(criterion, lhs, rhs, tol)


def check_w_type(rho, tol=DEFAULT_TOLERANCE):
    r"""
    Biseparability criterion on the single-excitation block of n qubits.

    With :math:`r_k = 2^{n-k} + 1` and
    :math:`q_{ij} = 2^{n-i} + 2^{n-j} + 1`, every biseparable state satisfies

    .. math::

        \sum_{1 \leq j < i \leq n} |\rho_{r_i, r_j}| \leq
        \sum_{1 \leq j < i \leq n} \sqrt{\rho_{1,1} \rho_{q_{ij}, q_{ij}}}
        + \frac{n - 2}{2} \sum_{i=1}^n \rho_{r_i, r_i}

    A violation means the state is genuinely multipartite entangled.

    Raises :class:`intrication.UnsupportedDimensionError` if any party is not
    a qubit.

    Examples
    --------

    >>> from intrication import w_state
    >>> report = check_w_type(w_state(3))
    >>> print(f"{report.lhs:.4f} {report.rhs:.4f} {report.verdict.value}")
    1.0000 0.5000 violated

    """
    n = _qubit_count(rho, CriterionId.W_TYPE_T3)
    coherences, bounds, populations = _excitation_terms(rho)
    rhs = bounds + (n - 2) / 2 * populations
    return CriterionReport.from_sides(CriterionId.W_TYPE_T3, coherences, rhs, tol)


def check_fullsep_ghz_type(rho, tol=DEFAULT_TOLERANCE):
    r"""
    Full separability criterion on the anti-diagonal corner.

    Every fully separable state satisfies

    .. math::

        |\rho_{1,D}| \leq \left( \prod_{i \in A} \rho_{i,i} \right)^{1/(2^n-2)}

    with equality for pure product states. A violation means the state is
    not fully separable. The report is labelled ``t4a`` for qubit systems and
    ``t6`` otherwise.

    The geometric mean is evaluated with logarithms because the product of
    :math:`2^n - 2` small numbers underflows for large n.

    Examples
    --------

    >>> from intrication import NoiseFamilyParams, ghz_white_noise
    >>> report = check_fullsep_ghz_type(ghz_white_noise(NoiseFamilyParams(3, 0.5)))
    >>> print(f"{report.lhs:.4f} {report.rhs:.4f} {report.verdict.value}")
    0.2500 0.0625 violated

    """
    lhs = abs(rho.entries[0, -1])
    rhs = _corner_geometric_mean(rho)
    if rho.is_qubit:
        criterion = CriterionId.FULLSEP_GHZ_TYPE_T4A
    else:
        criterion = CriterionId.FULLSEP_QUDIT_T6
    return CriterionReport.from_sides(criterion, lhs, rhs, tol)


def check_fullsep_w_type(rho, tol=DEFAULT_TOLERANCE):
    r"""
    Full separability criterion on the single-excitation block of n qubits.

    Every fully separable state satisfies

    .. math::

        \sum_{0 \leq i < j \leq n-1} |\rho_{2^i+1, 2^j+1}| \leq
        \sum_{0 \leq i < j \leq n-1} \sqrt{\rho_{1,1} \rho_{2^i+2^j+1, 2^i+2^j+1}}

    with equality for pure product states. A violation means the state is
    not fully separable.

    Raises :class:`intrication.UnsupportedDimensionError` if any party is not
    a qubit.
    """
    _qubit_count(rho, CriterionId.FULLSEP_W_TYPE_T4B)
    coherences, bounds, _ = _excitation_terms(rho)
    return CriterionReport.from_sides(
        CriterionId.FULLSEP_W_TYPE_T4B, coherences, bounds, tol
    )


def check_ghz_noise_exact(rho, tol=DEFAULT_TOLERANCE):
    """
    Exact full separability test for GHZ states mixed with white noise.

    For this family the GHZ-type full separability inequality is necessary
    and sufficient: a satisfied report implies the state is fully separable.

    Raises :class:`intrication.UnsupportedDimensionError` if the state is not
    a member of the family (see :func:`intrication.fit_ghz_noise`).
    """
    if fit_ghz_noise(rho) is None:
        raise UnsupportedDimensionError(
            "Criterion 't5' applies only to GHZ states mixed with white noise."
        )
    lhs = abs(rho.entries[0, -1])
    rhs = _corner_geometric_mean(rho)
    return CriterionReport.from_sides(CriterionId.GHZ_NOISE_EXACT_T5, lhs, rhs, tol)


#: The function that evaluates each criterion
CRITERIA = {
    CriterionId.BISEP_QUBIT_T1: check_bisep_qudit,
    CriterionId.BISEP_QUDIT_T2: check_bisep_qudit,
    CriterionId.W_TYPE_T3: check_w_type,
    CriterionId.FULLSEP_GHZ_TYPE_T4A: check_fullsep_ghz_type,
    CriterionId.FULLSEP_W_TYPE_T4B: check_fullsep_w_type,
    CriterionId.GHZ_NOISE_EXACT_T5: check_ghz_noise_exact,
    CriterionId.FULLSEP_QUDIT_T6: check_fullsep_ghz_type,
}


def parse_criteria(selection=None):
    """
    Turn a criteria selection into a list of :class:`intrication.CriterionId`.

    Parameters
    ----------
    selection : None, str, or list
        ``None`` or ``"all"`` select every inequality (all criteria except
        ``t5``). A string is a comma separated list of short ids
        (``"t1,t4a"``). A list may contain ids or short id strings.

    Returns
    -------
    criteria : list of :class:`intrication.CriterionId`

    Examples
    --------

    >>> [c.value for c in parse_criteria("t1, T4a")]
    ['t1', 't4a']

    """
    if selection is None:
        return list(INEQUALITY_CRITERIA)
    if isinstance(selection, str):
        if selection.strip().lower() == "all":
            return list(INEQUALITY_CRITERIA)
        selection = [item for item in selection.split(",") if item.strip()]
    criteria = []
    for item in selection:
        if isinstance(item, str):
            item = item.strip().lower()
        try:
            criteria.append(CriterionId(item))
        except ValueError as error:
            valid = ", ".join(c.value for c in CriterionId)
            raise ValueError(
                f"Invalid criterion '{item}'. Should be one of: {valid}, all."
            ) from error
    return criteria


def inapplicable_reason(criterion, rho):
    """
    Why a criterion can't be evaluated on a state, or None if it can.
    """
    if not rho.is_qubit:
        if criterion is CriterionId.BISEP_QUBIT_T1:
            return "qubit-only criterion; its qudit form is reported as t2"
        if criterion is CriterionId.FULLSEP_GHZ_TYPE_T4A:
            return "qubit-only criterion; its qudit form is reported as t6"
        if criterion in (
            CriterionId.W_TYPE_T3,
            CriterionId.FULLSEP_W_TYPE_T4B,
            CriterionId.GHZ_NOISE_EXACT_T5,
        ):
            return "defined for qubit systems only"
    if criterion is CriterionId.GHZ_NOISE_EXACT_T5 and fit_ghz_noise(rho) is None:
        return "input is not a GHZ state mixed with white noise"
    return None


@attr.s(frozen=True)
class Evaluation:
    """
    Reports of a selection of criteria evaluated on one state.

    Attributes
    ----------
    reports : tuple of :class:`intrication.CriterionReport`
    skipped : tuple of (:class:`intrication.CriterionId`, str)
        Criteria that were requested but don't apply, with the reason.
    """

    reports = attr.ib(converter=tuple)
    skipped = attr.ib(converter=tuple, factory=tuple)

    @property
    def overall(self):
        "The strongest implication among the reports."
        return overall_classification(self.reports)


def evaluate(rho, criteria=None, tol=DEFAULT_TOLERANCE):
    """
    Evaluate a selection of criteria on a state.

    Criteria that share an evaluation on this kind of system (``t1`` and
    ``t2`` or ``t4a`` and ``t6`` on qubits) are evaluated once under the qubit
    id and the qudit id is listed in ``skipped``. Criteria that don't apply
    are listed there too, with the reason.

    Parameters
    ----------
    rho : :class:`intrication.DensityMatrix`
    criteria : None, str, or list
        Selection as accepted by :func:`intrication.parse_criteria`.
    tol : float
        Tolerance on the margins.

    Returns
    -------
    evaluation : :class:`intrication.Evaluation`
    """
    reports, skipped, done = [], [], {}
    for criterion in parse_criteria(criteria):
        reason = inapplicable_reason(criterion, rho)
        if reason is not None:
            skipped.append((criterion, reason))
            continue
        check = CRITERIA[criterion]
        if check not in done:
            report = check(rho, tol)
            done[check] = report.criterion
            reports.append(report)
        # On qubits t2 and t6 are reported under the ids t1 and t4a
        if criterion is not done[check]:
            skipped.append(
                (criterion, f"same inequality as {done[check].value} on qubits")
            )
    return Evaluation(reports, skipped)


def overall_classification(reports):
    """
    The strongest implication found in a list of reports.

    Genuine multipartite entanglement takes precedence over not being fully
    separable, which takes precedence over full separability (only the exact
    GHZ white-noise test can imply it). Otherwise the result is inconclusive.
    """
    implications = {report.implication for report in reports}
    for implication in (
        Implication.GENUINE_MULTIPARTITE_ENTANGLED,
        Implication.NOT_FULLY_SEPARABLE,
        Implication.FULLY_SEPARABLE,
    ):
        if implication in implications:
            return implication
    return Implication.INCONCLUSIVE


@attr.s(frozen=True)
class NoiseClassification:
    """
    Exact separability class of a GHZ white-noise state.

    Attributes
    ----------
    params : :class:`intrication.NoiseFamilyParams`
    noise_class : :class:`intrication.NoiseClass`
    threshold : float
        The critical noise weight :math:`p^*`. The state is fully separable
        iff :math:`p \\geq p^*`.
    report : :class:`intrication.CriterionReport`
        The GHZ-type full separability report of the state.
    """

    params = attr.ib()
    noise_class = attr.ib()
    threshold = attr.ib(converter=float)
    report = attr.ib()


def ghz_noise_threshold(n):
    """
    Critical noise weight :math:`1 - 1/(2^{n-1} + 1)` of the n-qubit GHZ
    white-noise family.

    Examples
    --------

    >>> ghz_noise_threshold(3)
    0.8

    """
    # Written as a single division so that it is correctly rounded
    return 2 ** (n - 1) / (2 ** (n - 1) + 1)


def classify_ghz_noise(params, tol=DEFAULT_TOLERANCE):
    """
    Decide whether a GHZ white-noise state is fully separable.

    The state is fully separable iff :math:`p \\geq 1 - 1/(2^{n-1} + 1)`.
    The closed form is cross-checked against the GHZ-type full separability
    criterion evaluated on the constructed matrix.

    Parameters
    ----------
    params : :class:`intrication.NoiseFamilyParams`
    tol : float
        Tolerance of the cross-check.

    Returns
    -------
    classification : :class:`intrication.NoiseClassification`

    Examples
    --------

    >>> from intrication import NoiseFamilyParams
    >>> result = classify_ghz_noise(NoiseFamilyParams(n=3, p=0.79))
    >>> print(result.noise_class.value, result.threshold)
    entangled 0.8

    """
    threshold = ghz_noise_threshold(params.n)
    if params.p >= threshold:
        noise_class = NoiseClass.FULLY_SEPARABLE
    else:
        noise_class = NoiseClass.ENTANGLED
    report = check_fullsep_ghz_type(ghz_white_noise(params), tol)
    # The margin has slope at least 1/2 in p, so the verdict may only
    # disagree within a few tolerances below the threshold
    if abs(params.p - threshold) > 4 * tol + 1e-12:
        separable = report.verdict is Verdict.SATISFIED
        if separable != (noise_class is NoiseClass.FULLY_SEPARABLE):
            raise NumericFailureError(
                f"Criterion margin '{report.margin}' disagrees with the closed "
                f"form threshold '{threshold}' at p='{params.p}'."
            )
    return NoiseClassification(params, noise_class, threshold, report)


#: Noise families accepted by critical_noise
NOISE_FAMILIES = {"ghz": ghz, "w": w_state}


def closed_form_threshold(criterion, n, family="ghz"):
    """
    The noise weight at which a criterion's margin vanishes on a white-noise
    family, when known in closed form.

    Returns None for combinations without a closed form.

    Examples
    --------

    >>> print(f"{closed_form_threshold('t1', 3):.6f}")
    0.571429
    >>> print(f"{closed_form_threshold('t3', 3, family='w'):.6f}")
    0.470588

    """
    criterion = CriterionId(criterion)
    total = 2**n
    forms = {
        ("ghz", CriterionId.BISEP_QUBIT_T1): (total / 2) / (total - 1),
        ("ghz", CriterionId.BISEP_QUDIT_T2): (total / 2) / (total - 1),
        ("ghz", CriterionId.FULLSEP_GHZ_TYPE_T4A): ghz_noise_threshold(n),
        ("ghz", CriterionId.FULLSEP_QUDIT_T6): ghz_noise_threshold(n),
        ("ghz", CriterionId.GHZ_NOISE_EXACT_T5): ghz_noise_threshold(n),
        ("w", CriterionId.W_TYPE_T3): total / (total + n * (2 * n - 3)),
        ("w", CriterionId.FULLSEP_W_TYPE_T4B): total / (total + n),
    }
    return forms.get((family, criterion))


def critical_noise(criterion, n, lo=0.0, hi=1.0, tol=1e-9, family="ghz"):
    """
    Find by bisection the noise weight where a criterion's margin vanishes.

    The margin is evaluated on the n-qubit state of ``family`` (``"ghz"`` or
    ``"w"``) mixed with white noise of weight p. It is affine in p, so the
    bisection always converges to the single crossing.

    The interval must bracket a crossing: the criterion is violated at one
    end and not at the other. Otherwise :class:`intrication.BracketError` is
    raised.

    Parameters
    ----------
    criterion : :class:`intrication.CriterionId` or str
    n : int
        Number of qubits.
    lo, hi : float
        The search interval, inside [0, 1].
    tol : float
        Stop when the interval is at most this wide.
    family : str
        The noise family.

    Returns
    -------
    p : float
        The critical noise weight.

    Examples
    --------

    >>> print(f"{critical_noise('t4a', 3):.6f}")
    0.800000

    """
    criterion = CriterionId(criterion)
    if family not in NOISE_FAMILIES:
        raise ValueError(
            f"Invalid noise family '{family}'. Should be one of "
            f"{sorted(NOISE_FAMILIES)}."
        )
    if not lo < hi:
        raise BracketError(f"Invalid interval '[{lo}, {hi}]'.")
    check = CRITERIA[criterion]
    base = NOISE_FAMILIES[family](n)

    def margin(p):
        return check(white_noise(base, p), 0).margin

    margin_lo, margin_hi = margin(lo), margin(hi)
    # One end must violate strictly and the other must not
    if (margin_lo > 0) == (margin_hi > 0):
        raise BracketError(
            f"Margin of '{criterion.value}' doesn't change sign on [{lo}, {hi}]: "
            f"{margin_lo} and {margin_hi}."
        )
    if margin_lo == 0:
        return float(lo)
    if margin_hi == 0:
        return float(hi)
    for iteration in range(MAX_BISECTIONS):
        if hi - lo <= tol:
            break
        middle = (lo + hi) / 2
        margin_middle = margin(middle)
        LOGGER.debug(
            "bisection %d: p=%.17g margin=%.3g", iteration, middle, margin_middle
        )
        if margin_middle == 0:
            return float(middle)
        if np.sign(margin_middle) == np.sign(margin_lo):
            lo, margin_lo = middle, margin_middle
        else:
            hi = middle
    return float((lo + hi) / 2)
