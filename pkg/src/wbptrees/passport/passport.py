# -----------------------------------------------------------
# passport.py
# Description: the passport value type and its algebra (fill, g-vector, divisor set, division).
# -----------------------------------------------------------
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby
from typing import Iterator

from sympy import divisors

from src.wbptrees.exceptions.PassportExceptions import (
    DivisionError,
    FillMismatchError,
    PassportValueError,
)
from src.wbptrees.passport.labels import (
    DEFAULT_LABEL,
    STAR,
    FilledLabel,
    Label,
    Star,
    base_label,
    label_sort_key,
)


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    def other(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


@dataclass(frozen=True)
class LabeledWeight:
    weight: int
    label: Label = DEFAULT_LABEL

    def __post_init__(self):
        if isinstance(self.weight, bool) or not isinstance(self.weight, int) or self.weight < 1:
            raise PassportValueError(f"weights are positive integers, got {self.weight!r}")
        if isinstance(self.label, int) and self.label < 0:
            raise PassportValueError(f"labels are non-negative integers, got {self.label!r}")

    @property
    def sort_key(self) -> tuple:
        return self.weight, label_sort_key(self.label)

    @property
    def is_star(self) -> bool:
        return isinstance(self.label, Star)


def _canonical_side(side) -> tuple[LabeledWeight, ...]:
    return tuple(sorted(side, key=lambda entry: entry.sort_key, reverse=True))


@dataclass(frozen=True)
class Entry:
    """
    A distinct labeled weight of one side together with its multiplicity.
    """
    color: Color
    labeled_weight: LabeledWeight
    multiplicity: int

    @property
    def weight(self) -> int:
        return self.labeled_weight.weight

    @property
    def label(self) -> Label:
        return self.labeled_weight.label


@dataclass(frozen=True)
class Passport:
    """
    Pair of multisets of labeled weights, the black and the white vertices of a tree.
    Both sides are stored sorted in descending (weight, label) order, so equal passports compare equal.
    """
    black: tuple[LabeledWeight, ...] = field(default_factory=tuple)
    white: tuple[LabeledWeight, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "black", _canonical_side(self.black))
        object.__setattr__(self, "white", _canonical_side(self.white))
        stars = sum(1 for entry in self.black + self.white if entry.is_star)
        if stars > 1:
            raise PassportValueError("a passport holds at most one star label")

    @classmethod
    def from_weights(cls, black, white) -> "Passport":
        """
        Builds an unlabeled passport from two iterables of integers.
        """
        return cls(tuple(LabeledWeight(weight) for weight in black),
                   tuple(LabeledWeight(weight) for weight in white))

    def side(self, color: Color) -> tuple[LabeledWeight, ...]:
        return self.black if color is Color.BLACK else self.white

    def entries(self, color: Color | None = None) -> list[Entry]:
        """
        Distinct labeled weights with their multiplicities, black side first, each side in canonical order.
        """
        colors = (Color.BLACK, Color.WHITE) if color is None else (color,)
        result = []
        for current in colors:
            for labeled_weight, group in groupby(self.side(current)):
                result.append(Entry(current, labeled_weight, len(list(group))))
        return result

    def points(self) -> Iterator[tuple[Color, LabeledWeight]]:
        for entry in self.black:
            yield Color.BLACK, entry
        for entry in self.white:
            yield Color.WHITE, entry

    @property
    def black_weight(self) -> int:
        return sum(entry.weight for entry in self.black)

    @property
    def white_weight(self) -> int:
        return sum(entry.weight for entry in self.white)

    @property
    def has_star(self) -> bool:
        return any(entry.is_star for _, entry in self.points())

    def __len__(self):
        return len(self.black) + len(self.white)

    def __str__(self):
        from src.wbptrees.passport.notation import print_passport
        return print_passport(self)


def size(passport: Passport) -> int:
    """
    Number of points, the vertex count of any tree with this passport.
    """
    return len(passport)


def is_balanced(passport: Passport) -> bool:
    return passport.black_weight == passport.white_weight


def is_simple(passport: Passport) -> bool:
    return all(entry.multiplicity == 1 for entry in passport.entries())


def p_factor(passport: Passport) -> int:
    """
    Product of the factorials of the multiplicities of the distinct labeled weights.
    """
    return math.prod(math.factorial(entry.multiplicity) for entry in passport.entries())


def strip_labels(passport: Passport) -> Passport:
    return Passport.from_weights((entry.weight for entry in passport.black),
                                 (entry.weight for entry in passport.white))


def fill(passport: Passport) -> Passport:
    """
    Makes every point distinct: the copies of a repeated labeled weight (K, k) get the double labels (k, 1) .. (k, m).
    Points already distinct keep their label.
    """
    sides = {Color.BLACK: [], Color.WHITE: []}
    for entry in passport.entries():
        if entry.multiplicity == 1:
            sides[entry.color].append(entry.labeled_weight)
            continue
        for index in range(1, entry.multiplicity + 1):
            sides[entry.color].append(LabeledWeight(entry.weight, FilledLabel(entry.label, index)))
    return Passport(tuple(sides[Color.BLACK]), tuple(sides[Color.WHITE]))


def forget_fill(filled: Passport, passport: Passport) -> dict[tuple[Color, LabeledWeight], LabeledWeight]:
    """
    The surjection from the points of fill(passport) onto the points of passport.
    :raise FillMismatchError: if filled is not the fill of passport
    """
    if fill(passport) != filled:
        raise FillMismatchError(f"{filled} is not the fill of {passport}")
    repeated = {(entry.color, entry.labeled_weight)
                for entry in passport.entries() if entry.multiplicity > 1}
    projection = {}
    for color, point in filled.points():
        original = LabeledWeight(point.weight, base_label(point.label))
        if (color, original) in repeated:
            projection[(color, point)] = original
        else:
            projection[(color, point)] = point
    return projection


def g_vector(passport: Passport) -> list[int]:
    """
    One value per distinct labeled weight, black side first:
    the gcd of its weight, of its multiplicity minus one, and of the multiplicities of every other entry.
    """
    entries = passport.entries()
    multiplicities = [entry.multiplicity for entry in entries]
    vector = []
    for position, entry in enumerate(entries):
        others = multiplicities[:position] + multiplicities[position + 1:]
        vector.append(math.gcd(entry.weight, entry.multiplicity - 1, *others))
    return vector


def divisor_owners(passport: Passport) -> dict[int, int]:
    """
    Maps every divisor d > 1 of a g-vector entry to the index of the unique entry it divides.
    :raise DivisionError: if a divisor divides two entries, which no passport allows
    """
    owners = {}
    for position, value in enumerate(g_vector(passport)):
        for divisor in divisors(value):
            divisor = int(divisor)
            if divisor == 1:
                continue
            if divisor in owners:
                raise DivisionError(f"divisor {divisor} is shared by two entries of {passport}")
            owners[divisor] = position
    return owners


def divisor_set(passport: Passport) -> list[int]:
    """
    The orders a rotational symmetry of a tree with this passport can have, in increasing order.
    """
    return sorted({1, *divisor_owners(passport)})


def divide(passport: Passport, divisor: int) -> Passport:
    """
    The passport of the quotient of a tree with this passport under a rotation of order divisor.
    The entry fixed by the rotation loses its center point and gains a starred point of weight K / divisor.
    :raise DivisionError: if divisor is not in the divisor set
    """
    if divisor == 1:
        return passport
    owners = divisor_owners(passport)
    if divisor not in owners:
        raise DivisionError(f"{divisor} is not in the divisor set {divisor_set(passport)} of {passport}")
    center = owners[divisor]
    sides = {Color.BLACK: [], Color.WHITE: []}
    for position, entry in enumerate(passport.entries()):
        copies = entry.multiplicity // divisor
        if position == center:
            copies = (entry.multiplicity - 1) // divisor
            sides[entry.color].append(LabeledWeight(entry.weight // divisor, STAR))
        sides[entry.color].extend([entry.labeled_weight] * copies)
    return Passport(tuple(sides[Color.BLACK]), tuple(sides[Color.WHITE]))
