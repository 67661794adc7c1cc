# -----------------------------------------------------------
# generator.py
# Description: exhaustive enumeration of the plane trees of a passport, one representative per class.
# -----------------------------------------------------------
from collections import Counter
from dataclasses import dataclass, field

from src.wbptrees.exceptions.OracleExceptions import OracleBoundError
from src.wbptrees.exceptions.PassportExceptions import EmptyPassportError, UnbalancedPassportError
from src.wbptrees.factory.tree_factory import TreeFactory
from src.wbptrees.infrastructure.config import Infos
from src.wbptrees.logs_management.console_logger import log
from src.wbptrees.oracle.canonical import CanonicalCode, canonical_code
from src.wbptrees.oracle.wbp_tree import WBPTree
from src.wbptrees.passport.notation import print_passport
from src.wbptrees.passport.passport import Color, Passport, is_balanced, size

Pool = tuple[int, ...]


@dataclass(frozen=True)
class SymmetryCensus:
    """
    Number of trees per order of their rotation group.
    """
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, order: int) -> int:
        return self.counts.get(order, 0)


def check_enumerable(passport: Passport, max_points: int) -> None:
    if size(passport) == 0:
        raise EmptyPassportError("the empty passport has no tree")
    if not is_balanced(passport):
        raise UnbalancedPassportError(f"{print_passport(passport)} is not balanced")
    if size(passport) > max_points:
        raise OracleBoundError(
            f"{print_passport(passport)} has {size(passport)} points, the oracle enumerates at most {max_points}")


class TreeGenerator:
    """
    Builds every tree rooted at a black point of the largest weight: each vertex gets an ordered list of children
    whose edge weights add up to its remaining weight, drawing points from the passport's pool.
    Equal trees met through different roots or orders are merged by canonical code.
    """

    def __init__(self, passport: Passport, max_points: int = Infos.default_oracle_max_points):
        check_enumerable(passport, max_points)
        self.passport = passport
        entries = passport.entries()
        self.keys = [(entry.color, entry.labeled_weight) for entry in entries]
        self.start: Pool = tuple(entry.multiplicity for entry in entries)
        self.child_keys = {
            color: [index for index, (key_color, _) in enumerate(self.keys) if key_color is color.other()]
            for color in Color
        }
        self.memo: dict[tuple[Color, int, Pool], list[tuple[tuple, Pool]]] = {}

    @staticmethod
    def _take(pool: Pool, key: int) -> Pool:
        return pool[:key] + (pool[key] - 1,) + pool[key + 1:]

    def forests(self, color: Color, residual: int, pool: Pool) -> list[tuple[tuple, Pool]]:
        """
        Every ordered list of subtrees hanging from a vertex of the given color with residual weight left,
        with the pool left after building them.
        """
        if residual == 0:
            return [((), pool)]
        state = (color, residual, pool)
        if state in self.memo:
            return self.memo[state]
        results = []
        for key in self.child_keys[color]:
            if pool[key] == 0:
                continue
            weight = self.keys[key][1].weight
            taken = self._take(pool, key)
            for edge_weight in range(1, min(residual, weight) + 1):
                for child_forest, after_child in self.forests(color.other(), weight - edge_weight, taken):
                    for rest, after_rest in self.forests(color, residual - edge_weight, after_child):
                        results.append((((edge_weight, key, child_forest),) + rest, after_rest))
        self.memo[state] = results
        return results

    def generate(self) -> list[WBPTree]:
        """
        :return: one tree per class, sorted by canonical code
        """
        root = 0
        if self.keys[root][0] is not Color.BLACK:
            return []
        empty = (0,) * len(self.keys)
        trees: dict[CanonicalCode, WBPTree] = {}
        for forest, left in self.forests(Color.BLACK, self.keys[root][1].weight, self._take(self.start, root)):
            if left != empty:
                continue
            tree = TreeFactory.create_from_forest(root, forest, self.keys)
            trees.setdefault(canonical_code(tree), tree)
        log(f"{print_passport(self.passport)}: {len(trees)} trees", level="debug")
        return [trees[code] for code in sorted(trees)]


def enumerate_trees(passport: Passport, max_points: int = Infos.default_oracle_max_points) -> list[WBPTree]:
    """
    Every tree with the balanced passport, labels included, one per class, sorted by canonical code.
    :raise OracleBoundError: if the passport has more than max_points points
    :raise UnbalancedPassportError: if the passport is not balanced
    """
    return TreeGenerator(passport, max_points).generate()


def census_of(trees: list[WBPTree]) -> SymmetryCensus:
    tally = Counter(canonical_code(tree).aut_order for tree in trees)
    return SymmetryCensus(dict(sorted(tally.items())))


def symmetry_census(passport: Passport, max_points: int = Infos.default_oracle_max_points) -> SymmetryCensus:
    return census_of(enumerate_trees(passport, max_points))
