# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Run the command line program with ``python -m intrication``.
"""
from ._cli import main

if __name__ == "__main__":
    raise SystemExit(main())
