import unittest

from src.wbptrees.count.ftree import count_ftree
from src.wbptrees.exceptions.PassportExceptions import NotSimpleError
from src.wbptrees.infrastructure.config import Infos
from src.wbptrees.oracle.generator import symmetry_census
from src.wbptrees.oracle.labeled import count_labeled_direct, labeled_census
from src.wbptrees.passport.notation import parse_passport
from src.wbptrees.passport.passport import fill, p_factor


class TestCountLabeledDirect(unittest.TestCase):
    def test_known_counts(self):
        self.assertEqual(count_labeled_direct(fill(parse_passport("2^2 4^3 | 8^2"))), 48)
        self.assertEqual(count_labeled_direct(fill(parse_passport("1^3 | 3"))), 2)
        self.assertEqual(count_labeled_direct(parse_passport("5 | 5")), 1)

    def test_matches_the_formula(self):
        for text in ("3^2 1^2 | 4 2^2", "2 1^2 | 2^2", "2^3 | 3^2", "6^2 | 10 2_*", "4 2_* 2 | 8"):
            with self.subTest(passport=text):
                filled = fill(parse_passport(text))
                self.assertEqual(count_labeled_direct(filled), count_ftree(filled))

    def test_requires_simple(self):
        with self.assertRaises(NotSimpleError):
            count_labeled_direct(parse_passport("2^2 | 4"))


class TestLabeledCensus(unittest.TestCase):
    def test_known_censuses(self):
        self.assertEqual(labeled_census(parse_passport("2^2 4^3 | 8^2")).counts, {1: 24, 2: 24})
        self.assertEqual(labeled_census(parse_passport("1^3 | 3")).counts, {3: 2})

    def test_symmetric_trees_have_fewer_labelings(self):
        for text in ("2^2 4^3 | 8^2", "3^7 | 7^3", "1^4 | 4", "2^3 | 3^2"):
            with self.subTest(passport=text):
                passport = parse_passport(text)
                factor = p_factor(passport)
                census = symmetry_census(passport)
                labeled = labeled_census(passport)
                for order in census.counts:
                    self.assertEqual(factor * census.get(order), order * labeled.get(order))

    def test_counting_from_the_rotation_group_agrees(self):
        for text in ("2^2 4^3 | 8^2", "3^4 | 4^3", "1^4 | 4", "2^3 | 3^2", "1^6 | 6", "2^4 | 4^2", "3 2 1 | 3 2 1"):
            with self.subTest(passport=text):
                passport = parse_passport(text)
                self.assertEqual(labeled_census(passport, max_labelings=0).counts, labeled_census(passport).counts)

    def test_large_labeling_count(self):
        passport = parse_passport("1^9 | 9")
        self.assertGreater(p_factor(passport), Infos.default_max_labelings)
        self.assertEqual(labeled_census(passport).counts, {9: 40320})


if __name__ == '__main__':
    unittest.main()
