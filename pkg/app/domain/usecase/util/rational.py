from math import comb, factorial
from typing import Iterable


def binomial(top: int, bottom: int) -> int:
    if bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def factorial_product(values: Iterable[int]) -> int:
    result = 1
    for v in values:
        result *= factorial(v)
    return result
