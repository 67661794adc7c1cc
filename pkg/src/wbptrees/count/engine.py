# -----------------------------------------------------------
# engine.py
# Description: G table, total tree count and symmetry-resolved counts of a passport.
# -----------------------------------------------------------
import json
from dataclasses import dataclass, field
from fractions import Fraction

from src.wbptrees.count.ftree import count_ftree
from src.wbptrees.count.number_theory import moebius, totient
from src.wbptrees.exceptions.CountingExceptions import IdentityViolationError, IntegralityError
from src.wbptrees.exceptions.PassportExceptions import (
    DivisionError,
    EmptyPassportError,
    StarredPassportError,
    UnbalancedPassportError,
)
from src.wbptrees.passport.notation import print_passport
from src.wbptrees.passport.passport import Passport, divide, divisor_set, fill, is_balanced, p_factor, size


def format_number(value: int | Fraction) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def check_countable(passport: Passport) -> None:
    """
    :raise EmptyPassportError, UnbalancedPassportError, StarredPassportError: if no count is defined for passport
    """
    if size(passport) == 0:
        raise EmptyPassportError("the empty passport has no tree")
    if not is_balanced(passport):
        raise UnbalancedPassportError(
            f"{print_passport(passport)} is not balanced ({passport.black_weight} != {passport.white_weight})")
    if passport.has_star:
        raise StarredPassportError(f"{print_passport(passport)} carries a star label, counts take original passports")


def big_g(passport: Passport, divisor: int) -> Fraction:
    check_countable(passport)
    if divisor not in divisor_set(passport):
        raise DivisionError(f"{divisor} is not in the divisor set {divisor_set(passport)}")
    divided = divide(passport, divisor)
    return Fraction(count_ftree(fill(divided)), divisor * p_factor(divided))


def g_table(passport: Passport) -> dict[int, Fraction]:
    return {divisor: big_g(passport, divisor) for divisor in divisor_set(passport)}


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise IntegralityError(f"{what} came out as {value}")
    return value.numerator


def totient_sum(table: dict[int, Fraction]) -> Fraction:
    return sum((totient(divisor) * value for divisor, value in table.items()), Fraction(0))


def moebius_inversion(table: dict[int, Fraction], divisor: int) -> Fraction:
    """
    divisor times the sum over multiples e of divisor in the table of mu(e / divisor) G(e).
    """
    return divisor * sum((moebius(multiple // divisor) * value
                          for multiple, value in table.items() if multiple % divisor == 0), Fraction(0))


def count_trees(passport: Passport) -> int:
    """
    Number of trees with the balanced, star-free passport.
    """
    check_countable(passport)
    return _as_count(totient_sum(g_table(passport)), f"the tree count of {print_passport(passport)}")


def count_trees_sym(passport: Passport, divisor: int) -> int:
    """
    Number of trees with the passport whose rotation group has exactly the given order.
    Zero when the order is not in the divisor set.
    """
    check_countable(passport)
    table = g_table(passport)
    if divisor not in table:
        return 0
    return _as_count(moebius_inversion(table, divisor),
                     f"the {divisor}-symmetric count of {print_passport(passport)}")


@dataclass(frozen=True)
class CountReport:
    """
    by_symmetry lists the symmetry orders with at least one tree, the other divisors of G have none.
    """
    passport: Passport
    G: dict[int, Fraction]
    total: int
    by_symmetry: dict[int, int] = field(default_factory=dict)

    @property
    def F(self) -> dict[int, Fraction]:
        return {divisor: Fraction(count, divisor) for divisor, count in self.by_symmetry.items()}

    @property
    def divisors(self) -> list[int]:
        return sorted(self.G)

    def to_dict(self) -> dict:
        return {
            "passport": print_passport(self.passport),
            "G": {str(divisor): format_number(self.G[divisor]) for divisor in self.divisors},
            "total": str(self.total),
            "by_symmetry": {str(divisor): str(count) for divisor, count in self.by_symmetry.items()},
            "F": {str(divisor): format_number(value) for divisor, value in sorted(self.F.items())},
            "divisors": [str(divisor) for divisor in self.divisors],
        }

    def to_json(self, indent: int | None = 4) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [f"passport: {print_passport(self.passport)}", f"total: {self.total}"]
        for divisor in self.divisors:
            lines.append(f"  d={divisor}: G={format_number(self.G[divisor])} "
                         f"trees={self.by_symmetry.get(divisor, 0)} F={format_number(self.F.get(divisor, 0))}")
        return "\n".join(lines)


def report_from_table(passport: Passport, table: dict[int, Fraction]) -> CountReport:
    """
    Assembles a report from a G table, checking integrality and that the symmetry counts add up to the total.
    """
    name = print_passport(passport)
    total = _as_count(totient_sum(table), f"the tree count of {name}")
    by_symmetry = {}
    for divisor in sorted(table):
        count = _as_count(moebius_inversion(table, divisor), f"the {divisor}-symmetric count of {name}")
        if count:
            by_symmetry[divisor] = count
    if sum(by_symmetry.values()) != total:
        raise IdentityViolationError(f"symmetry counts {by_symmetry} of {name} do not add up to {total}")
    return CountReport(passport, dict(sorted(table.items())), total, by_symmetry)


def report(passport: Passport) -> CountReport:
    check_countable(passport)
    return report_from_table(passport, g_table(passport))
