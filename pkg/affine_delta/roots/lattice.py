"""
Exact integer and rational linear algebra on small matrices.

Everything runs on Python ints (numpy object arrays where rows are combined),
so nothing is ever rounded.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..exceptions import ArithmeticOverflowError

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


def check_int64(values: Iterable[int], what: str = "value") -> Tuple[int, ...]:
    """
    Return values as a tuple, failing if any entry leaves the signed 64-bit range.

    Raises:
        ArithmeticOverflowError: on the first out-of-range entry
    """
    out = tuple(int(v) for v in values)
    for v in out:
        if v < INT64_MIN or v > INT64_MAX:
            raise ArithmeticOverflowError(f"{what} entry {v} exceeds signed 64-bit range")
    return out


def extended_gcd(a: int, b: int) -> np.ndarray:
    """
    Unimodular 2x2 integer matrix U with U @ [a, b] = [gcd(a, b), 0].

    The gcd in the first entry is non-negative. For a = b = 0, U is the identity.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return np.array([[old_s, old_t], [s, t]], dtype=object)


def hermite_basis(generators: Sequence[Sequence[int]]) -> np.ndarray:
    """
    Row echelon basis of the integer span of the given vectors.

    Rows are combined with unimodular 2x2 steps from extended_gcd, so the span
    is unchanged. Each returned row has a positive pivot strictly to the right
    of the previous row's pivot, and entries above a pivot are reduced modulo it.

    Args:
        generators: integer vectors of a common length

    Returns:
        Object-dtype array of shape (rank, n); rank may be 0
    """
    H = np.array([list(g) for g in generators], dtype=object)
    if H.size == 0:
        return H.reshape(0, 0)
    rows, cols = H.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        for j in range(r + 1, rows):
            if H[j, c] != 0:
                U = extended_gcd(H[r, c], H[j, c])
                H[[r, j]] = U.dot(H[[r, j]])
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
        for k in range(r):
            q = H[k, c] // H[r, c]
            if q:
                H[k] = H[k] - q * H[r]
        r += 1
    return H[:r]


def lattice_contains(basis: np.ndarray, vector: Sequence[int]) -> bool:
    """
    Decide whether vector lies in the integer span of an echelon basis.

    Args:
        basis: output of hermite_basis
        vector: integer vector of the basis' width

    Returns:
        True iff vector is an integer combination of the basis rows
    """
    residual = np.array(list(vector), dtype=object)
    for row in basis:
        pivot = next(c for c, entry in enumerate(row) if entry != 0)
        if residual[pivot] % row[pivot] != 0:
            return False
        q = residual[pivot] // row[pivot]
        if q:
            residual = residual - q * row
    return all(entry == 0 for entry in residual)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact: the division always leaves no remainder
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_inverse(matrix: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    """
    Exact inverse over the rationals by Gauss-Jordan elimination.

    Raises:
        ZeroDivisionError: if the matrix is singular
    """
    n = len(matrix)
    aug: List[List[Fraction]] = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        scale = aug[c][c]
        aug[c] = [v / scale for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                factor = aug[r][c]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)
