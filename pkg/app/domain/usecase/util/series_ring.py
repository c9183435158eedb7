"""Truncated Laurent series over QQ on sympy sparse polynomial rings.

Monomials of a sympy ring are exponent tuples, so negative exponents of the
edge variables are stored as they are; only the series variables are truncated.
"""
from fractions import Fraction
from typing import Callable, Sequence, Tuple

from sympy import QQ
from sympy.polys.ring_series import rs_exp, rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, PolyRing, ring

Exponent = Tuple[int, ...]


def laurent_ring(names: Sequence[str]) -> Tuple[PolyRing, Tuple[PolyElement, ...]]:
    R, *gens = ring(",".join(names), QQ)
    return R, tuple(gens)


def monomial(R: PolyRing, exponent: Sequence[int]) -> PolyElement:
    return R({tuple(exponent): QQ(1)})


def geometric(R: PolyRing, step: Sequence[int], variable: PolyElement, prec: int) -> PolyElement:
    """1 / (1 - x^step) modulo variable**prec; `step` must raise `variable` by one."""
    series = rs_series_inversion(R.one - monomial(R, step), variable, max(prec, 2))
    return rs_trunc(series, variable, prec)


def exponential(variable: PolyElement, prec: int) -> PolyElement:
    return rs_trunc(rs_exp(variable, variable, max(prec, 2)), variable, prec)


def truncated_product(p1: PolyElement, p2: PolyElement,
                      bounds: Sequence[Tuple[PolyElement, int]]) -> PolyElement:
    """Product keeping only exponents <= bound in every listed variable."""
    if not bounds:
        return p1 * p2
    (first, first_bound), *rest = bounds
    product = rs_mul(p1, p2, first, first_bound + 1)
    for variable, bound in rest:
        product = rs_trunc(product, variable, bound + 1)
    return product


def select(p: PolyElement, keep: Callable[[Exponent], bool]) -> PolyElement:
    return p.ring({m: c for m, c in p.items() if keep(m)})


def coefficient(p: PolyElement, exponent: Sequence[int]) -> Fraction:
    value = p.get(tuple(exponent), p.ring.domain.zero)
    return Fraction(int(value.numerator), int(value.denominator))
