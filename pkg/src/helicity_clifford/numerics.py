"""Small fixed-size complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` with shape (2, 2)
or (4, 4); spinors are 1-d arrays of length 2 or 4.  Nothing here knows any
physics.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

#: Default tolerance for matrix/vector equality (entrywise max-norm).
TOL = 1e-12

ComplexMat2 = np.ndarray
ComplexMat4 = np.ndarray

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
O2 = np.zeros((2, 2), dtype=complex)


class BlockMat4View(NamedTuple):
    """The four 2x2 blocks of a 4x4 matrix."""

    tl: np.ndarray
    tr: np.ndarray
    bl: np.ndarray
    br: np.ndarray


def as_matrix(m, size: int | None = None) -> np.ndarray:
    """Coerce ``m`` to a finite complex square matrix of size 2 or 4."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 4):
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {a.shape}")
    if size is not None and a.shape[0] != size:
        raise ValueError(f"expected a {size}x{size} matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def outer(u, v) -> np.ndarray:
    """Return ``|u><v|``, i.e. ``result[i, j] = u[i] * conj(v[j])``."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.ndim != 1 or v.ndim != 1:
        raise ValueError("outer expects column vectors (1-d arrays)")
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")
    if u.shape[0] not in (2, 4):
        raise ValueError(f"unsupported dimension {u.shape[0]}")
    return np.outer(u, v.conj())


def blocks(m) -> BlockMat4View:
    """Split a 4x4 matrix into its 2x2 blocks."""
    m = as_matrix(m, 4)
    return BlockMat4View(m[:2, :2].copy(), m[:2, 2:].copy(), m[2:, :2].copy(), m[2:, 2:].copy())


def from_blocks(tl, tr, bl, br) -> np.ndarray:
    """Inverse of :func:`blocks`."""
    return np.block([[as_matrix(tl, 2), as_matrix(tr, 2)], [as_matrix(bl, 2), as_matrix(br, 2)]])


def block_partial_trace(m) -> np.ndarray:
    """Sum of the two diagonal 2x2 blocks of a 4x4 matrix."""
    m = as_matrix(m, 4)
    return m[:2, :2] + m[2:, 2:]


def max_norm(a) -> float:
    """Entrywise max-norm; ``0.0`` for an empty array."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def max_diff(a, b) -> float:
    return max_norm(np.asarray(a) - np.asarray(b))


def allclose(a, b, tol: float = TOL) -> bool:
    return max_diff(a, b) <= tol
