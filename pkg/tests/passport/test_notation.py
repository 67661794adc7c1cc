import unittest

from src.wbptrees.exceptions.PassportExceptions import PassportSyntaxError, PassportValueError
from src.wbptrees.passport.labels import STAR, FilledLabel
from src.wbptrees.passport.notation import parse_passport, print_passport
from src.wbptrees.passport.passport import LabeledWeight, Passport, fill, size


class TestParsePassport(unittest.TestCase):
    def test_parse_powers(self):
        passport = parse_passport("6^10 | 10^6")
        self.assertEqual(passport.black, (LabeledWeight(6),) * 10)
        self.assertEqual(passport.white, (LabeledWeight(10),) * 6)

    def test_parse_labels(self):
        passport = parse_passport("3 1 | 2_* 2")
        self.assertEqual(passport.black, (LabeledWeight(3), LabeledWeight(1)))
        self.assertEqual(passport.white, (LabeledWeight(2, STAR), LabeledWeight(2)))

    def test_parse_filled_label(self):
        passport = parse_passport("2_0.1 2_0.2 | 4")
        self.assertIn(LabeledWeight(2, FilledLabel(0, 1)), passport.black)
        self.assertIn(LabeledWeight(2, FilledLabel(0, 2)), passport.black)

    def test_parse_is_order_free(self):
        self.assertEqual(parse_passport("1 3 | 2 2_*"), parse_passport("3 1 | 2_* 2"))

    def test_parse_whitespace(self):
        self.assertEqual(parse_passport("  4   2 2|8 "), parse_passport("4 2^2 | 8"))

    def test_parse_empty_sides(self):
        self.assertEqual(size(parse_passport("|")), 0)
        self.assertEqual(parse_passport("3 |").white, ())

    def test_syntax_error_has_position(self):
        with self.assertRaises(PassportSyntaxError) as context:
            parse_passport("3 1 | 2x")
        self.assertGreaterEqual(context.exception.position, 4)
        self.assertGreaterEqual(context.exception.column, 1)

    def test_missing_separator(self):
        with self.assertRaises(PassportSyntaxError):
            parse_passport("3 1 2")

    def test_terms_must_be_separated(self):
        with self.assertRaises(PassportSyntaxError):
            parse_passport("3_*2 | 5")

    def test_zero_weight(self):
        with self.assertRaises(PassportValueError):
            parse_passport("0 | 0")

    def test_zero_multiplicity(self):
        with self.assertRaises(PassportValueError):
            parse_passport("2^0 | 2")

    def test_duplicated_star(self):
        with self.assertRaises(PassportValueError):
            parse_passport("1_* 1_* | 2")
        with self.assertRaises(PassportValueError):
            parse_passport("2_*^2 | 4")
        with self.assertRaises(PassportValueError):
            parse_passport("1_* | 1_*")


class TestPrintPassport(unittest.TestCase):
    def test_print_groups_repeated_entries(self):
        self.assertEqual(print_passport(parse_passport("10 6 6 6 6 6 6 6 6 6 6 | 10^5")), "10 6^10 | 10^5")

    def test_print_canonical_strings(self):
        for text in ("6^10 | 10^6", "3 1 | 2_* 2", "6^3 2_* | 10^2", "4 2_3^2 | 8", "|", "3 |", "| 3"):
            with self.subTest(text=text):
                self.assertEqual(print_passport(parse_passport(text)), text)

    def test_parse_print_filled(self):
        filled = fill(parse_passport("2^2 4^3 | 8^2"))
        self.assertEqual(print_passport(filled), "4_0.3 4_0.2 4_0.1 2_0.2 2_0.1 | 8_0.2 8_0.1")
        self.assertEqual(parse_passport(print_passport(filled)), filled)

    def test_str(self):
        self.assertEqual(str(Passport.from_weights([2, 2], [4])), "2^2 | 4")


if __name__ == '__main__':
    unittest.main()
