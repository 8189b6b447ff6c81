# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
Shared utility functions for testing.

Brute-force versions of the index algebra and of the criteria, written
directly from the definitions with explicit loops.
"""
import functools
import itertools

import numpy as np


def enumerate_digits(dims):
    """
    All multi-indices of dims in the order of their linear indices.
    """
    return list(itertools.product(*[range(levels) for levels in dims]))


def brute_corner_indices(dims):
    "Corner indices found by scanning every basis state"
    indices = []
    for index, digits in enumerate(enumerate_digits(dims), start=1):
        extreme = all(d in (0, levels - 1) for d, levels in zip(digits, dims))
        lowest = all(d == 0 for d in digits)
        highest = all(d == levels - 1 for d, levels in zip(digits, dims))
        if extreme and not lowest and not highest:
            indices.append(index)
    return indices


def bisep_sides(entries, dims):
    """
    Sides of the anti-diagonal biseparability inequality, summing over the
    corner indices one by one (1-based, as written).
    """
    total = entries.shape[0]
    diagonal = np.clip(np.diagonal(entries).real, 0, None)
    rhs = 0
    for i in brute_corner_indices(dims):
        mirror = total - i + 1
        rhs += np.sqrt(diagonal[i - 1] * diagonal[mirror - 1])
    return abs(entries[0, total - 1]), rhs / 2


def w_type_sides(entries, n):
    "Sides of the W-type biseparability inequality of n qubits"
    lhs, bounds, populations = 0, 0, 0
    for i in range(1, n + 1):
        r_i = 2 ** (n - i) + 1
        populations += entries[r_i - 1, r_i - 1].real
        for j in range(1, i):
            r_j = 2 ** (n - j) + 1
            q = 2 ** (n - i) + 2 ** (n - j) + 1
            lhs += abs(entries[r_i - 1, r_j - 1])
            bounds += np.sqrt(entries[0, 0].real * entries[q - 1, q - 1].real)
    return lhs, bounds + (n - 2) / 2 * populations


def product_vector(factors):
    "Tensor product of single-party vectors"
    return functools.reduce(np.kron, factors)


def random_unit_vector(rng, dimension):
    "Normalized complex Gaussian vector"
    vector = rng.normal(size=dimension) + 1j * rng.normal(size=dimension)
    return vector / np.linalg.norm(vector)


def reduced_purity(entries, dims, keep):
    """
    Purity of the reduced state of the parties in keep (labelled from 1).
    """
    n = len(dims)
    tensor = entries.reshape(list(dims) * 2)
    for party in sorted(set(range(1, n + 1)) - set(keep), reverse=True):
        rows = tensor.ndim // 2
        tensor = np.trace(tensor, axis1=party - 1, axis2=party - 1 + rows)
    size = int(np.prod([dims[party - 1] for party in keep]))
    reduced = tensor.reshape(size, size)
    return float(np.trace(reduced @ reduced).real)
