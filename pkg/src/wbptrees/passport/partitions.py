# -----------------------------------------------------------
# partitions.py
# Description: enumeration of the partitions of a simple passport into balanced sub-passports.
# -----------------------------------------------------------
from dataclasses import dataclass
from typing import Iterator

from src.wbptrees.exceptions.PassportExceptions import NotSimpleError, UnbalancedPassportError
from src.wbptrees.passport.passport import Color, LabeledWeight, Passport, is_balanced, is_simple


@dataclass(frozen=True)
class PassportPartition:
    """
    Unordered set of balanced blocks, ordered by their least point.
    """
    blocks: tuple[Passport, ...]

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def _signed_weight(point: tuple[Color, LabeledWeight]) -> int:
    color, labeled_weight = point
    return labeled_weight.weight if color is Color.BLACK else -labeled_weight.weight


def _balanced_blocks(anchor: int, rest: tuple[int, ...], weights: list[int]) -> Iterator[tuple[int, ...]]:
    """
    Every subset of rest which, with the anchor, has zero signed weight.
    """
    # reachable[k]: signed sums of the subsets of rest[k:]
    reachable = [set() for _ in range(len(rest) + 1)]
    reachable[len(rest)] = {0}
    for position in range(len(rest) - 1, -1, -1):
        weight = weights[rest[position]]
        reachable[position] = reachable[position + 1] | {total + weight for total in reachable[position + 1]}

    chosen = [anchor]

    def extend(position: int, balance: int) -> Iterator[tuple[int, ...]]:
        if balance == 0:
            yield tuple(chosen)
        for following in range(position, len(rest)):
            element = rest[following]
            if -(balance + weights[element]) not in reachable[following + 1]:
                continue
            chosen.append(element)
            yield from extend(following + 1, balance + weights[element])
            chosen.pop()

    yield from extend(0, weights[anchor])


def _split(remaining: tuple[int, ...], weights: list[int]) -> Iterator[list[tuple[int, ...]]]:
    if not remaining:
        yield []
        return
    anchor, rest = remaining[0], remaining[1:]
    for block in _balanced_blocks(anchor, rest, weights):
        taken = set(block)
        leftover = tuple(element for element in rest if element not in taken)
        for others in _split(leftover, weights):
            yield [block] + others


def enumerate_partitions(passport: Passport) -> Iterator[PassportPartition]:
    """
    Yields every partition of the points of a simple balanced passport into balanced blocks, each exactly once.
    The trivial partition comes first.
    :raise NotSimpleError: if two points share a weight and a label on one side
    :raise UnbalancedPassportError: if the passport itself is not balanced
    """
    if not is_simple(passport):
        raise NotSimpleError(f"{passport} repeats a labeled weight, fill it first")
    if not is_balanced(passport):
        raise UnbalancedPassportError(f"{passport} is not balanced")
    yield PassportPartition((passport,))
    points = list(passport.points())
    weights = [_signed_weight(point) for point in points]
    for blocks in _split(tuple(range(len(points))), weights):
        if len(blocks) <= 1:
            continue
        yield PassportPartition(tuple(_block_passport(block, points) for block in blocks))


def _block_passport(block: tuple[int, ...], points: list[tuple[Color, LabeledWeight]]) -> Passport:
    black = tuple(points[element][1] for element in block if points[element][0] is Color.BLACK)
    white = tuple(points[element][1] for element in block if points[element][0] is Color.WHITE)
    return Passport(black, white)
