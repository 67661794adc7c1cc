# -----------------------------------------------------------
# types.py
# Description: parameters of the passports (q^p | p^q) and the type vectors of their partitions.
# -----------------------------------------------------------
from dataclasses import dataclass
from enum import Enum
from math import gcd

from sympy.utilities.iterables import partitions

from src.wbptrees.exceptions.CensusExceptions import InvalidParametersError
from src.wbptrees.passport.passport import Passport


class Side(Enum):
    """
    Which side holds the center of a rotation: the black points (d | g1) or the white points (d | g2).
    """
    G1 = "g1-side"
    G2 = "g2-side"


@dataclass(frozen=True)
class PqParams:
    p: int
    q: int

    def __post_init__(self):
        if isinstance(self.p, bool) or isinstance(self.q, bool) or not (self.p > self.q >= 1):
            raise InvalidParametersError(f"expected integers p > q >= 1, got p={self.p}, q={self.q}")

    @property
    def alpha(self) -> int:
        return self.p + self.q - 1

    @property
    def g0(self) -> int:
        return gcd(self.p, self.q)

    @property
    def g1(self) -> int:
        return gcd(self.p - 1, self.q)

    @property
    def g2(self) -> int:
        return gcd(self.p, self.q - 1)

    def passport(self) -> Passport:
        """
        p black points of weight q and q white points of weight p.
        """
        return Passport.from_weights([self.q] * self.p, [self.p] * self.q)

    def side_of(self, divisor: int) -> Side:
        """
        :raise InvalidParametersError: if divisor divides neither g1 nor g2, or both
        """
        on_g1 = self.g1 % divisor == 0
        on_g2 = self.g2 % divisor == 0
        if divisor <= 1 or on_g1 == on_g2:
            raise InvalidParametersError(
                f"{divisor} must be > 1 and divide exactly one of g1={self.g1}, g2={self.g2} for p={self.p}, q={self.q}")
        return Side.G1 if on_g1 else Side.G2

    def symmetry_divisors(self) -> list[int]:
        """
        Every d > 1 dividing g1 or g2, in increasing order.
        """
        return sorted(d for d in range(2, max(self.g1, self.g2) + 1) if self.g1 % d == 0 or self.g2 % d == 0)


@dataclass(frozen=True)
class TypeVector1:
    """
    n[j - 1] blocks hold j * p / g0 black and j * q / g0 white points.
    """
    n: tuple[int, ...]

    @property
    def blocks(self) -> int:
        return sum(self.n)

    def items(self):
        return ((j, count) for j, count in enumerate(self.n, start=1) if count)


@dataclass(frozen=True)
class TypeVectorD:
    """
    Type of a partition of a divided passport: s sizes the block holding the star, n counts the other blocks.
    """
    s: int
    n: tuple[int, ...]

    @property
    def blocks(self) -> int:
        return 1 + sum(self.n)

    def items(self):
        return ((j, count) for j, count in enumerate(self.n, start=1) if count)


def _vectors(total: int, length: int) -> list[tuple[int, ...]]:
    vectors = []
    for partition in partitions(total):
        vector = [0] * length
        for part, count in partition.items():
            vector[part - 1] = count
        vectors.append(tuple(vector))
    return sorted(vectors, reverse=True)


def admissible_types_1(p: int, q: int) -> list[TypeVector1]:
    """
    Every vector n with sum of j * n_j equal to g0.
    """
    g0 = PqParams(p, q).g0
    return [TypeVector1(vector) for vector in _vectors(g0, g0)]


def admissible_types_d(p: int, q: int, d: int) -> list[TypeVectorD]:
    """
    Every (s, n) with s + sum of j * n_j equal to floor(g0 / d).
    """
    params = PqParams(p, q)
    params.side_of(d)
    bound = params.g0 // d
    types = []
    for s in range(bound, -1, -1):
        if bound - s == 0:
            types.append(TypeVectorD(s, (0,) * params.g0))
            continue
        types.extend(TypeVectorD(s, vector) for vector in _vectors(bound - s, params.g0))
    return types
