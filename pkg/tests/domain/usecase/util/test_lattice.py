from fractions import Fraction

from app.domain.usecase.util.lattice import (
    determinant, dot, integer_nullspace, maximal_minor_gcd, multiply, primitive, rank,
)


class TestLattice:
    def test_rank(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 0, 0], [0, 1, 0]]) == 2
        assert rank([]) == 0

    def test_determinant(self):
        assert determinant([[2, 1], [1, 1]]) == 1
        assert determinant([[0, 1], [1, 0]]) == -1
        assert determinant([]) == 1

    def test_primitive(self):
        assert primitive([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
        assert primitive([4, 6]) == (2, 3)
        assert primitive([0, 0]) == (0, 0)

    def test_integer_nullspace(self):
        kernel = integer_nullspace([[1, 1, 0]], 3)
        assert len(kernel) == 2
        assert all(dot((1, 1, 0), v) == 0 for v in kernel)
        assert integer_nullspace([], 2) == [(1, 0), (0, 1)]

    def test_multiply(self):
        assert multiply([[1, 2], [3, 4]], [1, -1]) == (-1, -1)

    def test_maximal_minor_gcd(self):
        assert maximal_minor_gcd([[2, 0], [0, 2]]) == (4, None)
        value, unit = maximal_minor_gcd([[1, 1, 0], [0, 1, 1]])
        assert value == 1
        assert unit == (0, 1)
