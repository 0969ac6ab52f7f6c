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

"""Variance-minimization eigensolver for the Lipkin-Meshkov-Glick model."""

import json

from lmgvqe._lmgvqe import (
    ConfigError,
    block_matrix,
    decompose,
    eigensolve,
    estimate,
    square,
)
from lmgvqe._lmgvqe import run_command as _run_command

__all__ = [
    "ConfigError",
    "block_matrix",
    "decompose",
    "eigensolve",
    "estimate",
    "run",
    "square",
]


def run(command, **config):
    """Runs a CLI command with config keys as keyword arguments.

    Returns (exit_code, console_text, files) where files maps relative paths to contents.
    """
    return _run_command(command, json.dumps(config))
