# -----------------------------------------------------------
# ftree.py
# Description: number of trees with a simple passport, summed over its balanced partitions.
# -----------------------------------------------------------
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from threading import Lock

from src.wbptrees.exceptions.CountingExceptions import IntegralityError
from src.wbptrees.exceptions.PassportExceptions import (
    EmptyPassportError,
    NotSimpleError,
    UnbalancedPassportError,
)
from src.wbptrees.passport.partitions import enumerate_partitions
from src.wbptrees.passport.passport import Color, Passport, is_balanced, is_simple, size

WeightKey = tuple[tuple[int, ...], tuple[int, ...]]


def partition_term(points: int, block_sizes) -> Fraction:
    """
    Contribution of one partition: (-1)^(n-1) (points-1)^(n-2) times the product of (size-1)! over its n blocks.
    """
    blocks = 0
    term = Fraction(1)
    for block_size in block_sizes:
        blocks += 1
        term *= factorial(block_size - 1)
    term *= Fraction(points - 1) ** (blocks - 2)
    return -term if blocks % 2 == 0 else term


def _block_choices(counts: tuple[int, ...], signed: tuple[int, ...], anchor: int):
    """
    Every vector of points taken per group forming a balanced block with one point of the anchor group,
    with the number of ways to pick the actual points.
    """
    chosen = [0] * len(counts)

    def choose(group: int, balance: int, ways: int):
        if group == len(counts):
            if balance == 0:
                yield tuple(chosen), ways
            return
        low = 1 if group == anchor else 0
        for taken in range(low, counts[group] + 1):
            chosen[group] = taken
            pick = comb(counts[group] - 1, taken - 1) if group == anchor else comb(counts[group], taken)
            yield from choose(group + 1, balance + taken * signed[group], ways * pick)
        chosen[group] = 0

    yield from choose(0, 0, 1)


@lru_cache(maxsize=None)
def _partition_polynomial(counts: tuple[int, ...], signed: tuple[int, ...]) -> dict[int, int]:
    """
    For distinct points grouped by signed weight: number of blocks -> sum over the balanced partitions with that
    many blocks of the product of (size-1)!.
    """
    if not any(counts):
        return {0: 1}
    anchor = next(group for group, count in enumerate(counts) if count)
    polynomial: Counter = Counter()
    for taken, ways in _block_choices(counts, signed, anchor):
        rest = tuple(count - used for count, used in zip(counts, taken))
        weight = ways * factorial(sum(taken) - 1)
        for blocks, value in _partition_polynomial(rest, signed).items():
            polynomial[blocks + 1] += weight * value
    return dict(polynomial)


def ftree_by_enumeration(passport: Passport) -> int:
    """
    Same count, summed partition by partition.
    """
    points = size(passport)
    total = sum((partition_term(points, (size(block) for block in partition))
                 for partition in enumerate_partitions(passport)), Fraction(0))
    return _as_count(total, passport)


def _as_count(total: Fraction, passport: Passport) -> int:
    if total.denominator != 1 or total < 0:
        raise IntegralityError(f"the tree count of {passport} came out as {total}")
    return int(total)


class FTreeTable:
    """
    Memo of simple-passport counts, shared by every thread of a run.
    The count only depends on the weights of the points, so entries are keyed by the weight multisets.
    """
    table_lock = Lock()

    def __init__(self) -> None:
        self.counts: dict[WeightKey, int] = {}

    @staticmethod
    def key(passport: Passport) -> WeightKey:
        return (tuple(entry.weight for entry in passport.black),
                tuple(entry.weight for entry in passport.white))

    def count(self, passport: Passport) -> int:
        if not is_simple(passport):
            raise NotSimpleError(f"{passport} repeats a labeled weight, fill it first")
        if not is_balanced(passport):
            raise UnbalancedPassportError(f"{passport} is not balanced")
        key = self.key(passport)
        with self.table_lock:
            if key in self.counts:
                return self.counts[key]
        value = self.compute(passport)
        with self.table_lock:
            return self.counts.setdefault(key, value)

    @staticmethod
    def compute(passport: Passport) -> int:
        points = size(passport)
        if points == 0:
            raise EmptyPassportError("the empty passport has no tree")
        if points - 1 > passport.black_weight:
            # every edge carries at least one unit of weight
            return 0
        groups = Counter((color, labeled_weight.weight) for color, labeled_weight in passport.points())
        ordered = sorted(groups, key=lambda group: (group[0].value, group[1]))
        signed = tuple(weight if color is Color.BLACK else -weight for color, weight in ordered)
        counts = tuple(groups[group] for group in ordered)
        total = Fraction(0)
        for blocks, value in _partition_polynomial(counts, signed).items():
            sign = -1 if blocks % 2 == 0 else 1
            total += sign * value * Fraction(points - 1) ** (blocks - 2)
        return _as_count(total, passport)

    def clear(self) -> None:
        with self.table_lock:
            self.counts.clear()


ftree_table = FTreeTable()


def count_ftree(passport: Passport) -> int:
    """
    Number of trees with the simple balanced passport.
    :raise NotSimpleError: if a labeled weight is repeated
    :raise UnbalancedPassportError: if the sides have different weight sums
    """
    return ftree_table.count(passport)
