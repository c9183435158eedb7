from fractions import Fraction

from app.domain.usecase.util.series_ring import (
    coefficient, exponential, geometric, laurent_ring, monomial, select, truncated_product,
)


class TestSeriesRing:
    def test_geometric_series_with_negative_powers(self):
        R, (q, y) = laurent_ring(["q", "y"])
        series = geometric(R, (1, -1), q, 4)
        assert len(series) == 4
        assert coefficient(series, (3, -3)) == 1
        assert coefficient(series, (4, -4)) == 0

    def test_geometric_series_of_order_zero(self):
        R, (q, y) = laurent_ring(["q", "y"])
        assert geometric(R, (1, -1), q, 1) == R.one

    def test_exponential(self):
        R, (q, y) = laurent_ring(["q", "y"])
        assert coefficient(exponential(y, 4), (0, 3)) == Fraction(1, 6)

    def test_truncated_product_bounds_every_variable(self):
        R, (a, b) = laurent_ring(["a", "b"])
        product = truncated_product(geometric(R, (1, 0), a, 5), geometric(R, (0, 1), b, 5), [(a, 2), (b, 1)])
        assert sorted(product.keys()) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]

    def test_constant_term_of_laurent_product(self):
        R, (q, y) = laurent_ring(["q", "y"])
        forward = geometric(R, (1, 1), q, 3)
        backward = monomial(R, (0, -2))
        product = select(forward * backward, lambda e: e[1] == 0)
        assert coefficient(product, (2, 0)) == 1
        assert coefficient(product, (1, 0)) == 0
