"""Exact integer linear algebra on small dense matrices (sympy backed)."""
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

Rows = Sequence[Sequence[int]]


def _domain_matrix(rows: Rows) -> DomainMatrix:
    return DomainMatrix.from_Matrix(Matrix([list(r) for r in rows]))


def rank(rows: Rows) -> int:
    if not rows or not len(rows[0]):
        return 0
    return _domain_matrix(rows).convert_to(QQ).rank()


def determinant(rows: Rows) -> int:
    if not rows:
        return 1
    return int(_domain_matrix(rows).convert_to(ZZ).det())


def primitive(vector: Sequence) -> Tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    denominators = [int(x.q) if hasattr(x, "q") else 1 for x in vector]
    scale = reduce(lcm, denominators, 1)
    ints = [int(x * scale) for x in vector]
    divisor = reduce(gcd, (abs(x) for x in ints), 0) or 1
    return tuple(x // divisor for x in ints)


def integer_nullspace(rows: Rows, width: int) -> List[Tuple[int, ...]]:
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(width)) for j in range(width)]
    return [primitive(list(v)) for v in Matrix([list(r) for r in rows]).nullspace()]


def multiply(rows: Rows, vector: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, vector)) for row in rows)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def maximal_minor_gcd(rows: Rows) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """gcd of all k x k minors of a k x d matrix, with the first unimodular column set.

    The rows span a saturated sublattice of Z^d exactly when this gcd is 1.
    """
    k = len(rows)
    width = len(rows[0]) if rows else 0
    result = 0
    unit = None
    for columns in combinations(range(width), k):
        minor = determinant([[row[c] for c in columns] for row in rows])
        if abs(minor) == 1 and unit is None:
            unit = columns
        result = gcd(result, abs(minor))
        if unit is not None and result == 1:
            break
    return result, unit
