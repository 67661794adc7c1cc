# -----------------------------------------------------------
# coefficients.py
# Description: contribution of every partition type to G(d) for (q^p | p^q), and the number of partitions of a type.
# -----------------------------------------------------------
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from src.wbptrees.closedform.types import PqParams, Side, TypeVector1, TypeVectorD
from src.wbptrees.exceptions.CountingExceptions import IntegralityError


@lru_cache(maxsize=None)
def cached_factorial(n: int) -> int:
    return factorial(n)


def as_integer(value: Fraction | int, what: str) -> int:
    """
    :raise IntegralityError: if value is not an integer
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {value}")
    return value.numerator


def _block_factor(params: PqParams, j: int) -> Fraction:
    """
    (j(p+q)/g0 - 1)! / ((jp/g0)! (jq/g0)!), the weight of a block holding j * p / g0 black points.
    """
    black = j * params.p // params.g0
    white = j * params.q // params.g0
    return Fraction(cached_factorial(black + white - 1), cached_factorial(black) * cached_factorial(white))


def _blocks_product(params: PqParams, items) -> Fraction:
    result = Fraction(1)
    for j, count in items:
        result *= Fraction(_block_factor(params, j) ** count, cached_factorial(count))
    return result


def coeff_c1(type_vector: TypeVector1, p: int, q: int) -> Fraction:
    params = PqParams(p, q)
    blocks = type_vector.blocks
    sign = -1 if blocks % 2 == 0 else 1
    return sign * Fraction(params.alpha) ** (blocks - 2) * _blocks_product(params, type_vector.items())


def star_block(params: PqParams, type_vector: TypeVectorD, d: int, side: Side) -> tuple[int, int]:
    """
    Non-star points of the block holding the star: (black, white) on the g1-side, (white, black) on the g2-side.
    The first count is the one sharing the color of the star.
    """
    fractional = Fraction(params.g0 % d, d)
    star_share = type_vector.s + fractional
    same_color, other_color = (params.p, params.q) if side is Side.G1 else (params.q, params.p)
    same = as_integer(star_share * same_color / params.g0 - Fraction(1, d), "star block size")
    other = as_integer(star_share * other_color / params.g0, "star block size")
    if same < 0 or other < 0:
        raise IntegralityError(f"negative star block for type {type_vector}, d={d}")
    return same, other


def coeff_cd(type_vector: TypeVectorD, p: int, q: int, d: int, side: Side) -> Fraction:
    params = PqParams(p, q)
    same, other = star_block(params, type_vector, d, side)
    blocks = type_vector.blocks
    sign = -1 if blocks % 2 == 0 else 1
    head = Fraction(params.alpha) ** (blocks - 2) / Fraction(d) ** (blocks - 1)
    return sign * head * comb(same + other, other) * _blocks_product(params, type_vector.items())


def partition_type_count_1(type_vector: TypeVector1, p: int, q: int) -> int:
    params = PqParams(p, q)
    blacks = prod(cached_factorial(j * p // params.g0) ** count for j, count in type_vector.items())
    whites = prod(cached_factorial(j * q // params.g0) ** count for j, count in type_vector.items())
    orderings = prod(cached_factorial(count) for _, count in type_vector.items())
    return as_integer(Fraction(cached_factorial(p) * cached_factorial(q), orderings * blacks * whites),
                      f"partition count of type {type_vector}")


def partition_type_count_d(type_vector: TypeVectorD, p: int, q: int, d: int) -> int:
    params = PqParams(p, q)
    side = params.side_of(d)
    same, other = star_block(params, type_vector, d, side)
    if side is Side.G1:
        same_total, other_total = (p - 1) // d, q // d
        same_unit, other_unit = p // params.g0, q // params.g0
    else:
        same_total, other_total = (q - 1) // d, p // d
        same_unit, other_unit = q // params.g0, p // params.g0
    same_blocks = prod(cached_factorial(j * same_unit) ** count for j, count in type_vector.items())
    other_blocks = prod(cached_factorial(j * other_unit) ** count for j, count in type_vector.items())
    orderings = prod(cached_factorial(count) for _, count in type_vector.items())
    numerator = cached_factorial(same_total) * cached_factorial(other_total)
    denominator = orderings * cached_factorial(same) * cached_factorial(other) * same_blocks * other_blocks
    return as_integer(Fraction(numerator, denominator), f"partition count of type {type_vector}, d={d}")
