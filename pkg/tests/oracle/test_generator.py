import unittest

from src.wbptrees.count.engine import report
from src.wbptrees.exceptions.OracleExceptions import OracleBoundError
from src.wbptrees.exceptions.PassportExceptions import EmptyPassportError, UnbalancedPassportError
from src.wbptrees.oracle.canonical import canonical_code
from src.wbptrees.oracle.generator import census_of, enumerate_trees, symmetry_census
from src.wbptrees.passport.notation import parse_passport


class TestEnumerateTrees(unittest.TestCase):
    def test_known_censuses(self):
        cases = {
            "3^7 | 7^3": {1: 1, 3: 1},
            "2^2 4^3 | 8^2": {1: 1, 2: 2},
            "1^3 | 3": {3: 1},
            "5 | 5": {1: 1},
            "4 2_* 2 | 8": {1: 2},
            "6^2 | 10 2_*": {1: 1},
        }
        for text, expected in cases.items():
            with self.subTest(passport=text):
                self.assertEqual(symmetry_census(parse_passport(text)).counts, expected)

    def test_saddle_passport(self):
        self.assertEqual(symmetry_census(parse_passport("6^10 | 10^6")).counts, {1: 8, 3: 2, 5: 1})

    def test_trees_have_the_passport(self):
        passport = parse_passport("2^2 4^3 | 8^2")
        for tree in enumerate_trees(passport):
            self.assertEqual(tree.passport(), passport)

    def test_one_tree_per_class(self):
        trees = enumerate_trees(parse_passport("3^2 1^2 | 4 2^2"))
        codes = [canonical_code(tree) for tree in trees]
        self.assertEqual(codes, sorted(set(codes)))

    def test_star_family(self):
        for p in range(1, 9):
            with self.subTest(p=p):
                census = symmetry_census(parse_passport(f"1^{p} | {p}"))
                self.assertEqual(census.counts, {p: 1})

    def test_agrees_with_counts(self):
        for text in ("3^2 1^2 | 4 2^2", "2 1^2 | 2^2", "3 2 1 | 3 2 1", "2^3 | 3^2", "4^2 2^2 | 6^2"):
            with self.subTest(passport=text):
                passport = parse_passport(text)
                counts = report(passport)
                census = symmetry_census(passport)
                self.assertEqual(census.total, counts.total)
                for order in counts.divisors:
                    self.assertEqual(census.get(order), counts.by_symmetry.get(order, 0))

    def test_census_of_nothing(self):
        self.assertEqual(census_of([]).total, 0)

    def test_bounds(self):
        with self.assertRaises(OracleBoundError):
            enumerate_trees(parse_passport("6^10 | 10^6"), max_points=10)
        with self.assertRaises(UnbalancedPassportError):
            enumerate_trees(parse_passport("3 | 2"))
        with self.assertRaises(EmptyPassportError):
            enumerate_trees(parse_passport("|"))


if __name__ == '__main__':
    unittest.main()
