"""
Exact Linear Algebra
Rank, determinant and linear solving over the integers and rationals.
"""
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


def _rational_matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    entries = []
    for row in rows:
        converted = []
        for value in row:
            value = Fraction(value)
            converted.append((value.numerator, value.denominator))
        entries.append(converted)
    return DomainMatrix.from_list(entries, QQ)


def exact_rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return _rational_matrix(rows).rank()


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix"""
    if not rows:
        return 1
    matrix = DomainMatrix.from_list([[int(value) for value in row] for row in rows], ZZ)
    return int(matrix.det())


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """
    Solve rows * x = rhs exactly over the rationals.

    Args:
        rows: Coefficient matrix
        rhs: Right-hand side

    Returns:
        The unique solution, or None if the system is inconsistent or
        underdetermined
    """
    n = len(rows[0])
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = _rational_matrix(augmented).rref()
    pivots = tuple(pivots)
    if n in pivots or len(pivots) < n:
        return None
    dense = reduced.to_Matrix()
    solution = []
    for index in range(n):
        entry = dense[index, n]
        solution.append(Fraction(int(entry.p), int(entry.q)))
    return solution
