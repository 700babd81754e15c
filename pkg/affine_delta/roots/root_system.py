"""
Static data of a finite-type root system.

The Cartan matrix is defined by its rows: row i is the simple root alpha_i
written in the fundamental-weight basis, alpha_i = sum_j a_ij lambda_j. Every
other quantity here is derived from it. Results are memoised per LieType; all
return values are immutable.
"""

import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..exceptions import (
    DimensionMismatchError,
    InconsistencyError,
    NonIntegralComarkError,
)
from ..models.algebra import CartanMatrix, CoweightVector, LieType, RootVector, Weight
from .lattice import bareiss_determinant, check_int64, hermite_basis, lattice_contains, rational_inverse

logger = logging.getLogger(__name__)

# Bourbaki labelling, 1-based: E6 chain 1-3-4-5-6 with 2 on 4, E7/E8 extend the chain.
_E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8))

_F4_ROWS = (
    (2, -1, 0, 0),
    (-1, 2, -2, 0),
    (0, -1, 2, -1),
    (0, 0, -1, 2),
)

_G2_ROWS = (
    (2, -1),
    (-3, 2),
)


def require_length(lie_type: LieType, vector: Sequence[int], what: str = "weight") -> None:
    """
    Check a coordinate vector against the rank.

    Raises:
        DimensionMismatchError: unless vector has rank-many entries
        ArithmeticOverflowError: if an entry leaves the signed 64-bit range
    """
    if len(vector) != lie_type.rank:
        raise DimensionMismatchError(
            f"{what} {tuple(vector)} has {len(vector)} entries, {lie_type} needs {lie_type.rank}"
        )
    check_int64(vector, what)


@lru_cache(maxsize=None)
def cartan_matrix(lie_type: LieType) -> CartanMatrix:
    """
    Cartan matrix whose row i is alpha_i in fundamental-weight coordinates.

    Args:
        lie_type: validated LieType

    Returns:
        Rank x rank tuple of int tuples
    """
    family, n = lie_type.family, lie_type.rank
    if family == "F":
        return _F4_ROWS
    if family == "G":
        return _G2_ROWS

    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int) -> None:
        a[i][j] = a[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B":
            a[n - 2][n - 1] = -2
        elif family == "C":
            a[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        for i, j in _E_EDGES:
            if j <= n:
                link(i - 1, j - 1)

    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def simple_root_lengths(lie_type: LieType) -> Tuple[Fraction, ...]:
    """
    Half squared lengths d_i of the simple roots, long roots having d_i = 1.

    Obtained by symmetrising the Cartan matrix: (alpha_i, alpha_j) = a_ij d_j,
    so a_ij d_j = a_ji d_i along every edge of the Dynkin diagram.
    """
    a = cartan_matrix(lie_type)
    n = lie_type.rank
    d: List = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[j][i] / a[i][j]
                queue.append(j)
    longest = max(d)
    return tuple(x / longest for x in d)


def root_inner_product(lie_type: LieType, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """Symmetrised form on vectors in simple-root coordinates."""
    require_length(lie_type, x, "root vector")
    require_length(lie_type, y, "root vector")
    a = cartan_matrix(lie_type)
    d = simple_root_lengths(lie_type)
    n = lie_type.rank
    return sum(
        (x[i] * y[j] * a[i][j] * d[j] for i in range(n) for j in range(n) if x[i] and y[j]),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _weight_gram(lie_type: LieType) -> Tuple[Tuple[Fraction, ...], ...]:
    # (lambda_i, lambda_j) = (A^-1)_ij d_j
    inverse = rational_inverse(cartan_matrix(lie_type))
    d = simple_root_lengths(lie_type)
    return tuple(tuple(row[j] * d[j] for j in range(len(d))) for row in inverse)


def weight_inner_product(lie_type: LieType, weight: Sequence[int], other: Sequence[int]) -> Fraction:
    """Symmetrised form on vectors in fundamental-weight coordinates."""
    require_length(lie_type, weight)
    require_length(lie_type, other)
    gram = _weight_gram(lie_type)
    n = lie_type.rank
    return sum(
        (weight[i] * other[j] * gram[i][j] for i in range(n) for j in range(n) if weight[i] and other[j]),
        Fraction(0),
    )


def root_to_weight(lie_type: LieType, root: Sequence[int]) -> Weight:
    """Rewrite a simple-root combination in fundamental-weight coordinates."""
    require_length(lie_type, root, "root vector")
    a = cartan_matrix(lie_type)
    n = lie_type.rank
    return check_int64(
        (sum(root[i] * a[i][j] for i in range(n)) for j in range(n)), "weight"
    )


def _height(root: RootVector) -> int:
    return sum(root)


@lru_cache(maxsize=None)
def positive_roots(lie_type: LieType) -> Tuple[RootVector, ...]:
    """
    All positive roots in simple-root coordinates, by height-graded closure.

    A root beta of height h extends to beta + alpha_i exactly when the
    alpha_i-string through beta continues upward: with p the number of times
    alpha_i can be subtracted from beta while staying a root, the string
    reaches q = p - <beta, alpha_i^vee> steps above beta.

    Returns:
        Roots sorted by height, then lexicographically
    """
    a = cartan_matrix(lie_type)
    n = lie_type.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = sorted(simple)
    while layer:
        following = set()
        for beta in layer:
            for i in range(n):
                p = 0
                lower = list(beta)
                lower[i] -= 1
                while tuple(lower) in known:
                    p += 1
                    lower[i] -= 1
                pairing = sum(beta[j] * a[j][i] for j in range(n))
                if p - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    following.add(tuple(raised))
        following -= known
        known |= following
        layer = sorted(following)
    roots = tuple(sorted(known, key=lambda r: (_height(r), r)))
    logger.debug(f"{lie_type}: {len(roots)} positive roots")
    return roots


@lru_cache(maxsize=None)
def highest_long_root(lie_type: LieType) -> Tuple[RootVector, Weight]:
    """
    Highest long root theta.

    Returns:
        (root coordinates, weight coordinates)
    """
    roots = positive_roots(lie_type)
    theta = max(roots, key=lambda r: (root_inner_product(lie_type, r, r), _height(r)))
    return theta, root_to_weight(lie_type, theta)


def marks(lie_type: LieType) -> Tuple[int, ...]:
    """Coefficients a_i of theta in the simple-root basis."""
    return highest_long_root(lie_type)[0]


@lru_cache(maxsize=None)
def comarks(lie_type: LieType) -> Tuple[int, ...]:
    """
    Comarks a_i^vee = a_i d_i.

    Raises:
        NonIntegralComarkError: if some a_i d_i is not an integer
    """
    out = []
    for i, (mark, d) in enumerate(zip(marks(lie_type), simple_root_lengths(lie_type)), start=1):
        value = mark * d
        if value.denominator != 1:
            raise NonIntegralComarkError(f"{lie_type}: comark {i} = {value} is not an integer")
        out.append(int(value))
    return tuple(out)


def pairing_with_theta(lie_type: LieType, weight: Sequence[int]) -> int:
    """<lambda, theta> = sum_j a_j^vee m_j."""
    require_length(lie_type, weight)
    value = sum(c * m for c, m in zip(comarks(lie_type), weight))
    return check_int64((value,), "pairing")[0]


@lru_cache(maxsize=None)
def miniscule_coweight_indices(lie_type: LieType) -> Tuple[int, ...]:
    """1-based indices j whose mark a_j equals 1."""
    return tuple(j for j, mark in enumerate(marks(lie_type), start=1) if mark == 1)


@lru_cache(maxsize=None)
def fundamental_group_order(lie_type: LieType) -> int:
    """|P^vee / Q^vee| = det of the Cartan matrix."""
    return bareiss_determinant(cartan_matrix(lie_type))


def coxeter_number(lie_type: LieType) -> int:
    return 1 + sum(marks(lie_type))


def dual_coxeter_number(lie_type: LieType) -> int:
    return 1 + sum(comarks(lie_type))


@lru_cache(maxsize=None)
def _coroot_basis(lie_type: LieType):
    # H_i = sum_j a_ji H^(j): the coroots are the columns of the Cartan matrix
    a = cartan_matrix(lie_type)
    n = lie_type.rank
    columns = [[a[j][i] for j in range(n)] for i in range(n)]
    return hermite_basis(columns)


def coweight_in_coroot_lattice(lie_type: LieType, coweight: Sequence[int]) -> bool:
    """
    Whether a coweight, given in the fundamental-coweight basis, lies in Q^vee.

    Args:
        lie_type: validated LieType
        coweight: integer coefficients of H^(1)..H^(l)

    Returns:
        True iff coweight is an integer combination of the coroots H_1..H_l
    """
    require_length(lie_type, coweight, "coweight")
    return lattice_contains(_coroot_basis(lie_type), coweight)


def unit_vector(lie_type: LieType, index: int) -> Tuple[int, ...]:
    """e_index (1-based); index 0 or rank + 1 gives the zero vector."""
    return tuple(int(j == index) for j in range(1, lie_type.rank + 1))


def coset_representative(lie_type: LieType, coweight: CoweightVector) -> int:
    """
    Representative of coweight modulo Q^vee among 0 and the miniscule coweights.

    Returns:
        0 if coweight lies in Q^vee, else the miniscule index i with
        coweight - H^(i) in Q^vee

    Raises:
        InconsistencyError: if no representative matches
    """
    require_length(lie_type, coweight, "coweight")
    if coweight_in_coroot_lattice(lie_type, coweight):
        return 0
    for i in miniscule_coweight_indices(lie_type):
        shifted = tuple(v - e for v, e in zip(coweight, unit_vector(lie_type, i)))
        if coweight_in_coroot_lattice(lie_type, shifted):
            return i
    raise InconsistencyError(f"{lie_type}: no coset representative for coweight {tuple(coweight)}")


def describe(lie_type: LieType) -> Dict[str, object]:
    """Summary of the static data, as plain ints and strings."""
    theta_root, theta_weight = highest_long_root(lie_type)
    return {
        "type": str(lie_type),
        "cartan_matrix": [list(row) for row in cartan_matrix(lie_type)],
        "theta_roots": list(theta_root),
        "theta_weights": list(theta_weight),
        "marks": list(marks(lie_type)),
        "comarks": list(comarks(lie_type)),
        "half_square_lengths": [str(d) for d in simple_root_lengths(lie_type)],
        "miniscule": list(miniscule_coweight_indices(lie_type)),
        "fundamental_group_order": fundamental_group_order(lie_type),
        "coxeter_number": coxeter_number(lie_type),
        "dual_coxeter_number": dual_coxeter_number(lie_type),
        "positive_root_count": len(positive_roots(lie_type)),
    }
