# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Get the automatically generated version information from setuptools_scm and
format it nicely.
"""

try:
    # This file is generated automatically by setuptools_scm
    from . import _version_generated

    # Add a "v" to the version number made by setuptools_scm
    __version__ = f"v{_version_generated.version}"
except ImportError:
    # Running from a source tree that was never installed
    __version__ = "unknown"
