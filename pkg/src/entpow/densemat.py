"""Dense complex matrix kernel.

A matrix here is a 2-D ``numpy.ndarray`` of ``complex128`` entries in
row-major (C) order.  Every public function validates its input and raises
``ValueError`` on dimension mismatches; nothing is ever broadcast silently.
Sizes stay small (at most 256 x 256), so no blocking or sparsity is needed.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "as_complex_matrix",
    "matmul",
    "adjoint",
    "trace",
    "frobenius_norm",
    "frobenius_norm_sq",
    "is_unitary",
    "unitarity_defect",
]


def as_complex_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex128 array in row-major order."""
    m = np.ascontiguousarray(np.asarray(a, dtype=np.complex128))
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got {m.ndim}-D data")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix must have positive dimensions, got {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product a @ b; raises on inner-dimension mismatch."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch in matrix product: "
            f"{a.shape[0]}x{a.shape[1]} times {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose. Applying it twice restores the input bitwise."""
    a = as_complex_matrix(a)
    return np.ascontiguousarray(a.conj().T)


def trace(a) -> complex:
    """Sum of diagonal entries of a square matrix."""
    a = as_complex_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"trace requires a square matrix, got {a.shape[0]}x{a.shape[1]}")
    return complex(np.trace(a))


def frobenius_norm_sq(a) -> float:
    """Squared Frobenius (Hilbert-Schmidt) norm, sum of |entry|^2.

    Accumulated with ``math.fsum``, which returns the correctly rounded
    sum of the entry magnitudes.  The result therefore depends only on the
    multiset of entries, not on their layout, so rearrangements that merely
    move entries preserve this value exactly.
    """
    a = as_complex_matrix(a)
    sq = a.real * a.real + a.imag * a.imag
    return math.fsum(sq.ravel().tolist())


def frobenius_norm(a) -> float:
    """Frobenius norm sqrt(Tr(A^dag A)) = sqrt(sum of |entry|^2)."""
    return math.sqrt(frobenius_norm_sq(a))


def unitarity_defect(a) -> float:
    """Max-abs entry of A^dag A - I; zero iff A is exactly unitary."""
    a = as_complex_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"unitarity is defined for square matrices, got {a.shape[0]}x{a.shape[1]}")
    g = a.conj().T @ a
    g[np.diag_indices_from(g)] -= 1.0
    return float(np.abs(g).max())


def is_unitary(a, tol: float) -> bool:
    """True iff the max-abs entry of A^dag A - I is at most ``tol``."""
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    return unitarity_defect(a) <= tol
