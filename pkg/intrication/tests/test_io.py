# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Test reading and writing state files and reports.
"""
import json

import numpy as np
import numpy.testing as npt
import pytest

from .. import (
    HermiticityError,
    OracleRunSpec,
    SamplingMode,
    SeparableSampleSpec,
    StateFileError,
    TraceError,
    evaluate,
    evaluation_to_dict,
    format_evaluation,
    format_summary,
    ghz,
    random_separable_mixture,
    read_state_file,
    run_soundness,
    state_from_dict,
    state_to_dict,
    summary_to_dict,
    w_state,
    write_state_file,
)


def test_state_to_dict_layout():
    "Check the structure written for the W state of 2 qubits"
    data = state_to_dict(w_state(2), label="w2", seed=None)
    assert data["dims"] == [2, 2]
    assert data["metadata"] == {"label": "w2"}
    assert len(data["matrix"]) == 4
    assert data["matrix"][1][2] == [0.5, 0.0]
    assert data["matrix"][0][0] == [0.0, 0.0]
    assert "metadata" not in state_to_dict(ghz(2))


def test_state_file_exact(tmp_path):
    """
    Check that a random complex state is read back bit for bit
    """
    spec = SeparableSampleSpec([2, 3], 3, 42, SamplingMode.FULLY_SEPARABLE)
    rho = random_separable_mixture(spec)
    path = tmp_path / "state.json"
    write_state_file(path, rho, label="mixture", generator="test", seed=42)
    copy, metadata = read_state_file(path)
    assert copy.dims == rho.dims
    npt.assert_array_equal(copy.entries, rho.entries)
    assert metadata == {"label": "mixture", "generator": "test", "seed": 42}


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"dims": [2]},
        {"matrix": []},
        {"dims": ["a"], "matrix": [[[1, 0]]]},
        {"dims": [2], "matrix": [[1, 0], [0, 0]]},
        {"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0]]]},
        {"dims": [2], "matrix": [[[1, 0, 0], [0, 0, 0]], [[0, 0, 0], [0, 0, 0]]]},
        {"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]], "metadata": 1},
    ],
    ids=[
        "not-object",
        "no-matrix",
        "no-dims",
        "bad-dims",
        "real-entries",
        "ragged",
        "triples",
        "bad-metadata",
    ],
)
def test_state_from_dict_malformed(data):
    "Check that malformed structures are rejected"
    with pytest.raises(StateFileError):
        state_from_dict(data)


def test_state_from_dict_invalid_matrix():
    "Check that the matrix is validated"
    data = {"dims": [2], "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]}
    rho, metadata = state_from_dict(data)
    npt.assert_allclose(rho.entries, np.eye(2) / 2)
    assert metadata == {}
    data["matrix"][0][1] = [0.1, 0]
    with pytest.raises(HermiticityError):
        state_from_dict(data)
    data = {"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}
    with pytest.raises(TraceError):
        state_from_dict(data)


def test_read_state_file_not_json(tmp_path):
    "Check that invalid JSON is reported as a malformed state file"
    path = tmp_path / "state.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(StateFileError):
        read_state_file(path)
    with pytest.raises(FileNotFoundError):
        read_state_file(tmp_path / "missing.json")


def test_evaluation_report():
    """
    Check the report structure and its text rendering
    """
    evaluation = evaluate(w_state(3), "t3,t5")
    source = {"path": "w3.json", "dims": [2, 2, 2], "label": "w"}
    data = evaluation_to_dict(evaluation, source)
    assert data["input"] == source
    assert [record["criterion"] for record in data["reports"]] == ["t3"]
    first = data["reports"][0]
    assert first["name"] == "WType_T3"
    assert first["lhs"] == pytest.approx(1)
    assert first["rhs"] == pytest.approx(0.5)
    assert first["verdict"] == "violated"
    assert first["implication"] == "genuine_multipartite_entangled"
    assert data["skipped"][0]["criterion"] == "t5"
    assert data["overall"] == "genuine_multipartite_entangled"
    assert json.loads(json.dumps(data)) == data
    text = format_evaluation(evaluation, source)
    lines = text.splitlines()
    assert lines[0] == "input: w3.json dims=[2, 2, 2]"
    assert lines[1].split() == [
        "criterion",
        "lhs",
        "rhs",
        "margin",
        "verdict",
        "implication",
    ]
    assert lines[2].split()[0] == "t3"
    assert lines[2].split()[-2:] == ["violated", "genuine_multipartite_entangled"]
    assert lines[-2].startswith("skipped t5: ")
    assert lines[-1] == "overall: genuine_multipartite_entangled"


def test_summary_report():
    "Check the oracle summary structure and its text rendering"
    spec = OracleRunSpec([2, 2], samples=10, criteria="t1,t5", modes="fully_separable")
    summary = run_soundness(spec)
    data = summary_to_dict(summary)
    assert data["dims"] == [2, 2]
    assert data["modes"] == ["fully_separable"]
    assert data["violations"] == 0
    assert data["results"][0]["criterion"] == "t1"
    assert data["results"][0]["samples"] == 10
    assert data["skipped"] == [
        {"criterion": "t5", "mode": None, "reason": data["skipped"][0]["reason"]}
    ]
    assert json.loads(json.dumps(data)) == data
    lines = format_summary(summary).splitlines()
    assert lines[0].startswith("dims=[2, 2] samples=10 seed=0")
    assert lines[-1] == "violations: 0"
    assert any(line.startswith("skipped t5: ") for line in lines)
