# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Reading and writing state files and criterion reports.

State files are JSON documents::

    {
        "dims": [2, 2, 2],
        "matrix": [[[re, im], ...], ...],
        "metadata": {"label": "...", "generator": "...", "seed": 0}
    }

``matrix`` lists the rows of :math:`\\rho` in order. Row r, column c holds
the entry :math:`\\rho_{r+1,c+1}` (matrix indices are 1-based everywhere
else). Floats are written with Python's shortest round-trip representation,
so reading a file back gives the exact same matrix.
"""
import json
from pathlib import Path

import numpy as np

from ._density_matrix import DensityMatrix
from ._exceptions import StateFileError

# Magnitudes below this are written as exactly zero
ZERO_CUTOFF = 1e-300


def state_to_dict(rho, **metadata):
    """
    Convert a density matrix into the state file structure.

    Parameters
    ----------
    rho : :class:`intrication.DensityMatrix`
    **metadata
        Optional ``label``, ``generator``, ``seed`` (or any other JSON
        serializable values). None values are left out.

    Returns
    -------
    data : dict
    """
    pairs = np.stack([rho.entries.real, rho.entries.imag], axis=-1)
    pairs[np.abs(pairs) < ZERO_CUTOFF] = 0.0
    data = {"dims": list(rho.dims.dims), "matrix": pairs.tolist()}
    metadata = {key: value for key, value in metadata.items() if value is not None}
    if metadata:
        data["metadata"] = metadata
    return data


def state_from_dict(data, config=None):
    """
    Read a density matrix from the state file structure.

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`
    metadata : dict

    Raises :class:`intrication.StateFileError` if the structure is malformed
    and :class:`intrication.ValidationError` if the matrix is not a valid
    density matrix.
    """
    if not isinstance(data, dict) or "dims" not in data or "matrix" not in data:
        raise StateFileError("State file must be an object with 'dims' and 'matrix'.")
    try:
        dims = [int(levels) for levels in data["dims"]]
        pairs = np.asarray(data["matrix"], dtype=float)
    except (TypeError, ValueError) as error:
        raise StateFileError(f"Malformed state file: {error}") from error
    if pairs.ndim != 3 or pairs.shape[-1] != 2:
        raise StateFileError(
            f"Invalid matrix layout '{pairs.shape}'. Should be rows of [re, im] pairs."
        )
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise StateFileError("State file 'metadata' must be an object.")
    entries = pairs[..., 0] + 1j * pairs[..., 1]
    return DensityMatrix.build(dims, entries, config), metadata


def write_state_file(path, rho, **metadata):
    """
    Write a density matrix to a JSON state file.
    """
    with open(path, "w", encoding="utf-8") as output:
        json.dump(state_to_dict(rho, **metadata), output)
        output.write("\n")


def read_state_file(path, config=None):
    """
    Read a density matrix from a JSON state file.

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`
    metadata : dict
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise StateFileError(
            f"State file '{path}' is not valid JSON: {error}"
        ) from error
    return state_from_dict(data, config)


def report_to_dict(report):
    "Convert a criterion report into plain JSON types."
    return {
        "criterion": report.criterion.value,
        "name": report.criterion.long_name,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "margin": report.margin,
        "verdict": report.verdict.value,
        "implication": report.implication.value,
        "tolerance": report.tolerance,
    }


def evaluation_to_dict(evaluation, source):
    """
    The report file structure: input descriptor, one record per criterion,
    skipped criteria, and the overall classification.
    """
    return {
        "input": source,
        "reports": [report_to_dict(report) for report in evaluation.reports],
        "skipped": [
            {"criterion": criterion.value, "reason": reason}
            for criterion, reason in evaluation.skipped
        ],
        "overall": evaluation.overall.value,
    }


def _table(header, rows):
    "Left-aligned plain text columns"
    widths = [
        max(len(str(line[column])) for line in [header, *rows])
        for column in range(len(header))
    ]
    lines = []
    for line in [header, *rows]:
        cells = [str(value).ljust(width) for value, width in zip(line, widths)]
        lines.append("  ".join(cells).rstrip())
    return lines


def format_evaluation(evaluation, source):
    """
    Human readable version of :func:`intrication.evaluation_to_dict`.

    Numbers are printed with ``repr`` so they are identical to the JSON
    report.
    """
    data = evaluation_to_dict(evaluation, source)
    lines = [f"input: {source.get('path', '-')} dims={source.get('dims')}"]
    header = ["criterion", "lhs", "rhs", "margin", "verdict", "implication"]
    rows = [
        [
            record["criterion"],
            repr(record["lhs"]),
            repr(record["rhs"]),
            repr(record["margin"]),
            record["verdict"],
            record["implication"],
        ]
        for record in data["reports"]
    ]
    lines.extend(_table(header, rows))
    for record in data["skipped"]:
        lines.append(f"skipped {record['criterion']}: {record['reason']}")
    lines.append(f"overall: {data['overall']}")
    return "\n".join(lines)


def summary_to_dict(summary):
    "Convert an oracle summary into plain JSON types."
    spec = summary.spec
    return {
        "dims": list(spec.dims.dims),
        "samples": spec.samples,
        "seed": spec.seed,
        "modes": [mode.value for mode in spec.modes],
        "num_terms": spec.num_terms,
        "tolerance": spec.tol,
        "results": [
            {
                "criterion": result.criterion.value,
                "samples": result.samples,
                "max_margin": result.max_margin,
                "max_abs_margin": result.max_abs_margin,
                "violations": result.violations,
                "worst_seed": result.worst_seed,
                "worst_mode": result.worst_mode.value,
            }
            for result in summary.results
        ],
        "skipped": [
            {
                "criterion": criterion.value,
                "mode": None if mode is None else mode.value,
                "reason": reason,
            }
            for criterion, mode, reason in summary.skipped
        ],
        "violations": summary.violations,
    }


def format_summary(summary):
    "Human readable version of :func:`intrication.summary_to_dict`."
    data = summary_to_dict(summary)
    lines = [
        f"dims={data['dims']} samples={data['samples']} seed={data['seed']} "
        f"terms={data['num_terms']} tol={data['tolerance']!r}",
        f"modes: {', '.join(data['modes'])}",
    ]
    header = [
        "criterion",
        "samples",
        "max_margin",
        "max_abs_margin",
        "violations",
        "worst_seed",
        "worst_mode",
    ]
    rows = [
        [
            record["criterion"],
            record["samples"],
            repr(record["max_margin"]),
            repr(record["max_abs_margin"]),
            record["violations"],
            record["worst_seed"],
            record["worst_mode"],
        ]
        for record in data["results"]
    ]
    lines.extend(_table(header, rows))
    for record in data["skipped"]:
        where = "" if record["mode"] is None else f" ({record['mode']})"
        lines.append(f"skipped {record['criterion']}{where}: {record['reason']}")
    lines.append(f"violations: {data['violations']}")
    return "\n".join(lines)
