# -----------------------------------------------------------
# verify.py
# Description: sweep comparing the counting formulas with the oracle on every small passport,
#   and the closed form with the generic engine on every small (p, q).
# -----------------------------------------------------------
import concurrent.futures
import json
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from sympy.utilities.iterables import partitions

from src.wbptrees.closedform.closed_count import closed_g_table, count_closed
from src.wbptrees.closedform.types import PqParams
from src.wbptrees.count.engine import count_trees, g_table, report
from src.wbptrees.exceptions.CensusExceptions import ConfigurationError
from src.wbptrees.exceptions.CountingExceptions import CountingError
from src.wbptrees.exceptions.OracleExceptions import OracleError
from src.wbptrees.infrastructure.config import EngineSettings
from src.wbptrees.logs_management.console_logger import add_log_memory, log, log_error, log_from_memory, log_new_lines
from src.wbptrees.oracle.generator import symmetry_census
from src.wbptrees.oracle.labeled import labeled_census
from src.wbptrees.passport.notation import print_passport
from src.wbptrees.passport.passport import Passport, divide, p_factor, size


@dataclass
class VerifyReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"checked": self.checked, "failed": len(self.failures), "failures": self.failures}

    def to_json(self, indent: int | None = 4) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [f"checked: {self.checked}", f"failed: {len(self.failures)}"]
        lines.extend(f"  {failure}" for failure in self.failures)
        return "\n".join(lines)


def weight_multisets(total: int, max_part: int) -> list[tuple[int, ...]]:
    """
    Every multiset of positive integers at most max_part adding up to total, parts in decreasing order.
    """
    multisets = []
    for partition in partitions(total, k=max_part):
        parts = []
        for part, count in sorted(partition.items(), reverse=True):
            parts.extend([part] * count)
        multisets.append(tuple(parts))
    return sorted(multisets, reverse=True)


def sweep_passports(max_weight: int, max_part: int, max_points: int) -> list[Passport]:
    """
    Balanced star-free passports with side weight at most max_weight and parts at most max_part,
    within the oracle bound.
    """
    corpus = []
    for total in range(1, max_weight + 1):
        sides = weight_multisets(total, max_part)
        for black, white in product(sides, repeat=2):
            passport = Passport.from_weights(black, white)
            if size(passport) <= max_points:
                corpus.append(passport)
    return corpus


def sweep_pairs(max_sum: int) -> list[tuple[int, int]]:
    return [(p, q) for total in range(3, max_sum + 1) for q in range(1, total) if (p := total - q) > q]


def check_passport(passport: Passport, max_points: int) -> list[str]:
    """
    All identities relating the formulas and the oracle on one passport. Returns one message per failed check.
    """
    name = print_passport(passport)
    failures = []
    counts = report(passport)
    census = symmetry_census(passport, max_points)

    for divisor in counts.divisors:
        dual = sum((Fraction(counts.by_symmetry.get(multiple, 0), multiple)
                    for multiple in counts.divisors if multiple % divisor == 0), Fraction(0))
        if dual != counts.G[divisor]:
            failures.append(f"{name}: F sums to {dual} over multiples of {divisor}, G({divisor}) = {counts.G[divisor]}")

    for order in census.counts:
        if order not in counts.divisors:
            failures.append(f"{name}: the oracle found {order}-symmetric trees, {order} is not in the divisor set")
    for order in counts.divisors:
        if census.get(order) != counts.by_symmetry.get(order, 0):
            failures.append(f"{name}: {counts.by_symmetry.get(order, 0)} {order}-symmetric trees counted, "
                            f"{census.get(order)} enumerated")
    if census.total != counts.total:
        failures.append(f"{name}: {counts.total} trees counted, {census.total} enumerated")

    labeled = labeled_census(passport, max_points)
    factor = p_factor(passport)
    for order in set(census.counts) | set(labeled.counts):
        if factor * census.get(order) != order * labeled.get(order):
            failures.append(f"{name}: p={factor} times {census.get(order)} trees of order {order} "
                            f"differs from {order} times {labeled.get(order)} labeled trees")

    for divisor in counts.divisors[1:]:
        divided = divide(passport, divisor)
        divided_census = symmetry_census(divided, max_points)
        orders = set(divided_census.counts) | {order // divisor for order in census.counts if order % divisor == 0}
        for order in orders:
            if divided_census.get(order) != census.get(divisor * order):
                failures.append(f"{name}: {print_passport(divided)} has {divided_census.get(order)} trees of order "
                                f"{order}, {name} has {census.get(divisor * order)} of order {divisor * order}")
    return failures


def check_pair(p: int, q: int) -> list[str]:
    passport = PqParams(p, q).passport()
    failures = []
    closed, generic = count_closed(p, q), count_trees(passport)
    if closed != generic:
        failures.append(f"p={p}, q={q}: closed form gives {closed} trees, generic engine {generic}")
    closed_table, generic_table = closed_g_table(p, q), g_table(passport)
    if closed_table != generic_table:
        failures.append(f"p={p}, q={q}: closed-form G table {closed_table} differs from {generic_table}")
    return failures


class VerifySweep:
    """
    Runs every check of the corpus on a thread pool. Failures are aggregated in corpus order.
    """

    def __init__(self, settings: EngineSettings):
        self.settings = settings

    def items(self, max_weight: int) -> list[tuple[str, callable, tuple]]:
        items = [(print_passport(passport), check_passport, (passport, self.settings.oracle_max_points))
                 for passport in sweep_passports(max_weight, self.settings.verify_max_part,
                                                 self.settings.oracle_max_points)]
        items += [(f"p={p}, q={q}", check_pair, (p, q))
                  for p, q in sweep_pairs(min(max_weight, self.settings.closed_form_max_sum))]
        return items

    @staticmethod
    def run_one(name: str, check, arguments: tuple) -> list[str]:
        try:
            return check(*arguments)
        except (CountingError, OracleError) as e:
            log_error(f"{name}: {e}\n{traceback.format_exc()}", print_formatted=False)
            return [f"{name}: {type(e).__name__}: {e}"]

    def run(self, max_weight: int | None = None) -> VerifyReport:
        if max_weight is None:
            max_weight = self.settings.verify_max_weight
        if isinstance(max_weight, bool) or not isinstance(max_weight, int) or max_weight < 1:
            raise ConfigurationError(f"the sweep weight bound must be a positive integer, got {max_weight!r}")
        items = self.items(max_weight)
        log(f"Verifying {len(items)} items up to weight {max_weight}...", print_formatted=False)
        results: dict[int, list[str]] = {}
        with ThreadPoolExecutor(max_workers=self.settings.max_workers) as executor:
            future_to_item = {executor.submit(self.run_one, *item): index for index, item in enumerate(items)}
            for future in concurrent.futures.as_completed(future_to_item):
                results[future_to_item[future]] = future.result()

        verify_report = VerifyReport(checked=len(items))
        for index in range(len(items)):
            for failure in results[index]:
                add_log_memory(failure)
                verify_report.failures.append(failure)
        log_from_memory(level="error")
        log_new_lines()
        log(f"Verification over: {verify_report.checked} checked, {len(verify_report.failures)} failed.",
            print_formatted=False)
        return verify_report
