# -----------------------------------------------------------
# number_theory.py
# Description: Euler totient, Moebius function and divisors over arbitrary-precision integers.
# -----------------------------------------------------------
from functools import lru_cache

import sympy

from src.wbptrees.exceptions.CountingExceptions import CountingError


def _check_positive(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise CountingError(f"expected a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    _check_positive(n)
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    _check_positive(n)
    return int(sympy.mobius(n))


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(int(divisor) for divisor in sympy.divisors(n))


def divisors(n: int) -> list[int]:
    """
    Positive divisors of n in increasing order.
    """
    _check_positive(n)
    return list(_divisors(n))
