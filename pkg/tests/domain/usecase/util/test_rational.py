from app.domain.usecase.util.rational import binomial, factorial_product


def test_binomial_outside_range():
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    assert binomial(5, 2) == 10


def test_factorial_product():
    assert factorial_product([3, 2, 0]) == 12
    assert factorial_product([]) == 1
