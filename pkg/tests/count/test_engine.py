import json
import unittest
from fractions import Fraction

from src.wbptrees.count.engine import (
    big_g,
    count_trees,
    count_trees_sym,
    format_number,
    g_table,
    moebius_inversion,
    report,
    report_from_table,
    totient_sum,
)
from src.wbptrees.exceptions.CountingExceptions import IdentityViolationError, IntegralityError
from src.wbptrees.exceptions.PassportExceptions import (
    DivisionError,
    EmptyPassportError,
    StarredPassportError,
    UnbalancedPassportError,
)
from src.wbptrees.passport.notation import parse_passport


class TestGTable(unittest.TestCase):
    def test_saddle_passport(self):
        table = g_table(parse_passport("6^10 | 10^6"))
        self.assertEqual(table, {1: Fraction(133, 15), 3: Fraction(2, 3), 5: Fraction(1, 5)})

    def test_small_tables(self):
        self.assertEqual(g_table(parse_passport("3^7 | 7^3")), {1: Fraction(4, 3), 3: Fraction(1, 3)})
        self.assertEqual(g_table(parse_passport("2^2 4^3 | 8^2")), {1: 2, 2: 1})
        self.assertEqual(g_table(parse_passport("1^3 | 3")), {1: Fraction(1, 3), 3: Fraction(1, 3)})
        self.assertEqual(g_table(parse_passport("5 | 5")), {1: 1})

    def test_divisor_outside_the_set(self):
        with self.assertRaises(DivisionError):
            big_g(parse_passport("6^10 | 10^6"), 2)


class TestCounts(unittest.TestCase):
    def test_totals(self):
        cases = {"6^10 | 10^6": 11, "3^7 | 7^3": 2, "2^2 4^3 | 8^2": 3, "1^3 | 3": 1, "5 | 5": 1, "2 | 1^2": 1}
        for text, expected in cases.items():
            with self.subTest(passport=text):
                self.assertEqual(count_trees(parse_passport(text)), expected)

    def test_stars_have_one_tree(self):
        for p in range(1, 51):
            with self.subTest(p=p):
                self.assertEqual(count_trees(parse_passport(f"1^{p} | {p}")), 1)

    def test_symmetric_counts(self):
        passport = parse_passport("6^10 | 10^6")
        self.assertEqual([count_trees_sym(passport, d) for d in (1, 3, 5)], [8, 2, 1])
        self.assertEqual(count_trees_sym(passport, 2), 0)
        self.assertEqual(count_trees_sym(parse_passport("1^3 | 3"), 1), 0)

    def test_rejected_passports(self):
        with self.assertRaises(EmptyPassportError):
            count_trees(parse_passport("|"))
        with self.assertRaises(UnbalancedPassportError):
            count_trees(parse_passport("3 | 2"))
        with self.assertRaises(StarredPassportError):
            count_trees(parse_passport("3 1 | 2_* 2"))

    def test_totient_and_moebius(self):
        table = {1: Fraction(133, 15), 3: Fraction(2, 3), 5: Fraction(1, 5)}
        self.assertEqual(totient_sum(table), 11)
        self.assertEqual(moebius_inversion(table, 1), 8)
        self.assertEqual(moebius_inversion(table, 3), 2)


class TestCountReport(unittest.TestCase):
    def test_report_fields(self):
        counts = report(parse_passport("6^10 | 10^6"))
        self.assertEqual(counts.total, 11)
        self.assertEqual(counts.by_symmetry, {1: 8, 3: 2, 5: 1})
        self.assertEqual(counts.divisors, [1, 3, 5])
        self.assertEqual(counts.F, {1: 8, 3: Fraction(2, 3), 5: Fraction(1, 5)})

    def test_zero_counts_are_dropped(self):
        counts = report(parse_passport("1^3 | 3"))
        self.assertEqual(counts.by_symmetry, {3: 1})
        self.assertEqual(counts.divisors, [1, 3])
        self.assertEqual(json.loads(counts.to_json())["by_symmetry"], {"3": "1"})
        self.assertIn("d=1: G=1/3 trees=0 F=0", counts.to_text())
        self.assertEqual(report(parse_passport("2^2 4^3 | 8^2")).by_symmetry, {1: 1, 2: 2})

    def test_json_document(self):
        document = json.loads(report(parse_passport("6^10 | 10^6")).to_json())
        self.assertEqual(list(document), ["passport", "G", "total", "by_symmetry", "F", "divisors"])
        self.assertEqual(document["passport"], "6^10 | 10^6")
        self.assertEqual(document["G"], {"1": "133/15", "3": "2/3", "5": "1/5"})
        self.assertEqual(document["total"], "11")
        self.assertEqual(document["by_symmetry"], {"1": "8", "3": "2", "5": "1"})
        self.assertEqual(document["divisors"], ["1", "3", "5"])

    def test_text(self):
        text = report(parse_passport("3^7 | 7^3")).to_text()
        self.assertIn("total: 2", text)
        self.assertIn("d=3: G=1/3 trees=1 F=1/3", text)

    def test_format_number(self):
        self.assertEqual(format_number(Fraction(4, 2)), "2")
        self.assertEqual(format_number(Fraction(1, 3)), "1/3")
        self.assertEqual(format_number(7), "7")

    def test_broken_tables(self):
        passport = parse_passport("3^7 | 7^3")
        with self.assertRaises(IntegralityError):
            report_from_table(passport, {1: Fraction(1, 2), 3: Fraction(1, 3)})
        with self.assertRaises(IntegralityError):
            report_from_table(passport, {1: Fraction(-2), 3: Fraction(1)})
        with self.assertRaises(IdentityViolationError):
            # missing the divisor 2 of 4
            report_from_table(parse_passport("1^4 | 4"), {1: Fraction(1), 4: Fraction(1)})


if __name__ == '__main__':
    unittest.main()
