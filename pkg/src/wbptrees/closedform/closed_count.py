# -----------------------------------------------------------
# closed_count.py
# Description: number of trees with passport (q^p | p^q) from the type sums, without enumerating partitions.
# -----------------------------------------------------------
from collections import Counter
from fractions import Fraction
from math import comb, factorial

from src.wbptrees.closedform.coefficients import as_integer, coeff_c1, coeff_cd
from src.wbptrees.closedform.types import (
    PqParams,
    Side,
    TypeVector1,
    admissible_types_1,
    admissible_types_d,
)
from src.wbptrees.exceptions.CensusExceptions import InvalidParametersError
from src.wbptrees.count.engine import CountReport, report_from_table, totient_sum
from src.wbptrees.passport.partitions import enumerate_partitions
from src.wbptrees.passport.passport import fill


def closed_g(p: int, q: int, d: int = 1) -> Fraction:
    """
    G(d) of (q^p | p^q) as the sum of the contributions of every partition type.
    """
    if d == 1:
        return sum((coeff_c1(type_vector, p, q) for type_vector in admissible_types_1(p, q)), Fraction(0))
    side = PqParams(p, q).side_of(d)
    return sum((coeff_cd(type_vector, p, q, d, side) for type_vector in admissible_types_d(p, q, d)), Fraction(0))


def closed_g_coprime(p: int, q: int, d: int = 1) -> Fraction:
    """
    G(d) when gcd(p, q) = 1, where every partition is trivial.
    """
    params = PqParams(p, q)
    if params.g0 != 1:
        raise InvalidParametersError(f"gcd(p, q) = {params.g0}, expected 1")
    if d == 1:
        return Fraction(factorial(p + q - 2), factorial(p) * factorial(q))
    side = params.side_of(d)
    chosen = q if side is Side.G1 else p
    top = as_integer(Fraction(params.alpha, d), "binomial argument")
    bottom = as_integer(Fraction(chosen, d), "binomial argument")
    return Fraction(comb(top, bottom), params.alpha)


def closed_g_table(p: int, q: int) -> dict[int, Fraction]:
    params = PqParams(p, q)
    return {d: closed_g(p, q, d) for d in [1] + params.symmetry_divisors()}


def count_closed(p: int, q: int) -> int:
    """
    Number of trees with passport (q^p | p^q), p > q >= 1.
    :raise InvalidParametersError: if p <= q or q < 1
    """
    return as_integer(totient_sum(closed_g_table(p, q)), f"closed-form count for p={p}, q={q}")


def closed_report(p: int, q: int) -> CountReport:
    """
    Count report of (q^p | p^q) built from the closed-form G table.
    """
    return report_from_table(PqParams(p, q).passport(), closed_g_table(p, q))


def partition_type_census(p: int, q: int) -> dict[TypeVector1, int]:
    """
    Tally of the balanced partitions of the fill of (q^p | p^q) by type vector.
    """
    params = PqParams(p, q)
    unit = p // params.g0
    tally = Counter()
    for partition in enumerate_partitions(fill(params.passport())):
        vector = [0] * params.g0
        for block in partition:
            vector[len(block.black) // unit - 1] += 1
        tally[TypeVector1(tuple(vector))] += 1
    return dict(tally)
