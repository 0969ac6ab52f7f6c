# Copyright 2026 The lmgvqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import lmgvqe


def test_block_and_decompose():
    m = lmgvqe.block_matrix(3, "A")
    assert m.shape == (2, 2)
    terms = dict(lmgvqe.decompose(m))
    assert terms["I"] == pytest.approx(-0.5)
    assert terms["Z0"] == pytest.approx(-1.0)
    assert terms["X0"] == pytest.approx(-math.sqrt(3) / 2)


def test_square_matches_dense():
    m = lmgvqe.block_matrix(7, "A")
    symbolic = dict(lmgvqe.square(lmgvqe.decompose(m), 2))
    dense = dict(lmgvqe.decompose(m @ m))
    assert symbolic.keys() == dense.keys()
    for k in dense:
        assert symbolic[k] == pytest.approx(dense[k], abs=1e-10)


def test_eigensolve_agrees_with_numpy():
    m = lmgvqe.block_matrix(7, "A")
    values, vectors = lmgvqe.eigensolve(m)
    np.testing.assert_allclose(values, np.linalg.eigvalsh(m), atol=1e-12)
    np.testing.assert_allclose(vectors.T @ vectors, np.eye(4), atol=1e-12)


def test_estimate_exact_and_sampled():
    exact = lmgvqe.estimate(3, "A", [0.0])
    assert exact["energy"] == pytest.approx(-1.5)
    assert exact["variance"] == pytest.approx(0.75)
    sampled = lmgvqe.estimate(3, "A", [0.0], shots=20000, seed=4)
    assert abs(sampled["energy"] + 1.5) < 5 * sampled["energy_stderr"]
    with pytest.raises(ValueError):
        lmgvqe.estimate(3, "A", [0.0], noise_readout=0.02)


def test_spectrum_command():
    code, console, files = lmgvqe.run("spectrum", model={"n": 3}, starts=20)
    assert code == 0
    doc = json.loads(files["spectrum.json"])
    energies = sorted(c["energy"] for b in doc["blocks"] for c in b["clusters"])
    np.testing.assert_allclose(energies, [-1.82287566, -0.82287566, 0.82287566, 1.82287566], atol=1e-6)
    assert console.startswith("state,block,exact")


def test_config_error():
    with pytest.raises(lmgvqe.ConfigError):
        lmgvqe.run("sweep", model={"n": 4})
