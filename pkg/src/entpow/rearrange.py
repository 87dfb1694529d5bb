"""Index rearrangements of two-qudit operators.

An operator on C^d (x) C^d is a d^2 x d^2 matrix.  The composite basis ket
|i>|j> (i, j zero-based) maps to the flat row/column index i*d + j; writing
an entry as U[(i,j),(k,l)] means row i*d+j, column k*d+l.

All rearrangements here are pure entry moves: they are implemented as
reshape/transpose on the underlying array and involve no arithmetic, so the
structural identities they satisfy (involutions, the swap-multiplication
identity) hold bitwise, not merely to a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densemat import as_complex_matrix

__all__ = [
    "BipartiteOperator",
    "composite_index",
    "realign",
    "partial_transpose_first",
    "partial_transpose_second",
    "swap_left",
    "swap_right",
]


@dataclass(frozen=True, eq=False)
class BipartiteOperator:
    """A dense d^2 x d^2 operator on two qudits of local dimension d.

    The matrix is stored as a read-only complex128 copy in row-major order,
    with basis ket |i>|j> at flat index i*d + j.  Instances are immutable
    and safe to share across threads.
    """

    d: int
    mat: np.ndarray

    def __post_init__(self):
        if not isinstance(self.d, (int, np.integer)) or self.d < 2:
            raise ValueError(f"local dimension must be an integer >= 2, got {self.d!r}")
        n = int(self.d) ** 2
        m = as_complex_matrix(self.mat).copy()
        if m.shape != (n, n):
            raise ValueError(
                f"operator at local dimension {self.d} must be {n}x{n}, "
                f"got {m.shape[0]}x{m.shape[1]}"
            )
        m.flags.writeable = False
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "mat", m)

    def _tensor(self) -> np.ndarray:
        """View of ``mat`` as a 4-index array [row1, row2, col1, col2]."""
        d = self.d
        return self.mat.reshape(d, d, d, d)


def composite_index(i: int, j: int, d: int) -> int:
    """Flat index of the composite basis ket |i>|j>: returns i*d + j."""
    if d < 1:
        raise ValueError(f"local dimension must be positive, got {d}")
    if not (0 <= i < d) or not (0 <= j < d):
        raise ValueError(f"local indices ({i}, {j}) out of range for dimension {d}")
    return i * d + j


def realign(u: BipartiteOperator) -> BipartiteOperator:
    """Realignment: output entry [(i,j),(k,l)] is the input entry [(i,k),(j,l)].

    The singular values of the realigned matrix are the operator Schmidt
    coefficients of ``u``.  Applying realign twice restores ``u`` bitwise.
    """
    return BipartiteOperator(u.d, _flat(u._tensor().transpose(0, 2, 1, 3)))


def partial_transpose_first(u: BipartiteOperator) -> BipartiteOperator:
    """Transpose over the first factor: output [(i,j),(k,l)] = input [(k,j),(i,l)]."""
    return BipartiteOperator(u.d, _flat(u._tensor().transpose(2, 1, 0, 3)))


def partial_transpose_second(u: BipartiteOperator) -> BipartiteOperator:
    """Transpose over the second factor: output [(i,j),(k,l)] = input [(i,l),(k,j)].

    Composing with :func:`partial_transpose_first` gives the full transpose.
    """
    return BipartiteOperator(u.d, _flat(u._tensor().transpose(0, 3, 2, 1)))


def swap_left(u: BipartiteOperator) -> BipartiteOperator:
    """Left-multiply by the swap operator, as an exact row permutation.

    Output row (i,j) is input row (j,i), so the result equals S12 @ U with
    no floating-point arithmetic performed.
    """
    return BipartiteOperator(u.d, _flat(u._tensor().transpose(1, 0, 2, 3)))


def swap_right(u: BipartiteOperator) -> BipartiteOperator:
    """Right-multiply by the swap operator, as an exact column permutation.

    Output column (k,l) is input column (l,k); the result equals U @ S12.
    """
    return BipartiteOperator(u.d, _flat(u._tensor().transpose(0, 1, 3, 2)))


def _flat(t: np.ndarray) -> np.ndarray:
    n = t.shape[0] * t.shape[1]
    return np.ascontiguousarray(t).reshape(n, n)
