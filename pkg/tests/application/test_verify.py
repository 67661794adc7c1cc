import unittest
from unittest.mock import patch

from src.wbptrees.application.verify import (
    VerifyReport,
    VerifySweep,
    check_pair,
    check_passport,
    sweep_pairs,
    sweep_passports,
    weight_multisets,
)
from src.wbptrees.exceptions.CensusExceptions import ConfigurationError
from src.wbptrees.exceptions.CountingExceptions import IntegralityError
from src.wbptrees.infrastructure.config import EngineSettings
from src.wbptrees.passport.notation import parse_passport, print_passport


class TestCorpus(unittest.TestCase):
    def test_weight_multisets(self):
        self.assertEqual(weight_multisets(4, 4), [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual(weight_multisets(4, 2), [(2, 2), (2, 1, 1), (1, 1, 1, 1)])

    def test_sweep_passports(self):
        corpus = sweep_passports(2, 2, 16)
        self.assertEqual(len(corpus), 1 + 4)
        self.assertIn(parse_passport("2 | 1^2"), corpus)
        self.assertTrue(all(len(passport) <= 4 for passport in sweep_passports(4, 4, 4)))

    def test_sweep_pairs(self):
        self.assertEqual(sweep_pairs(5), [(2, 1), (3, 1), (4, 1), (3, 2)])


class TestChecks(unittest.TestCase):
    def test_passports_pass(self):
        for text in ("6^2 | 4^3", "2^2 4^3 | 8^2", "1^4 | 4", "3^7 | 7^3"):
            with self.subTest(passport=text):
                self.assertEqual(check_passport(parse_passport(text), 16), [])

    def test_pairs_pass(self):
        for p, q in ((10, 6), (7, 3), (6, 4), (5, 1)):
            with self.subTest(p=p, q=q):
                self.assertEqual(check_pair(p, q), [])

    def test_whole_default_corpus_passes(self):
        corpus = sweep_passports(8, 6, 16)
        self.assertEqual(len(corpus), 805)
        for passport in corpus:
            with self.subTest(passport=print_passport(passport)):
                self.assertEqual(check_passport(passport, 16), [])

    def test_every_small_pair_passes(self):
        for p, q in sweep_pairs(12):
            with self.subTest(p=p, q=q):
                self.assertEqual(check_pair(p, q), [])


class TestVerifySweep(unittest.TestCase):
    def setUp(self):
        self.settings = EngineSettings(log_to_file=False, max_workers=2, verify_max_part=3)

    def test_small_sweep(self):
        with patch("sys.stderr"):
            verify_report = VerifySweep(self.settings).run(4)
        self.assertTrue(verify_report.ok)
        self.assertEqual(verify_report.checked, len(VerifySweep(self.settings).items(4)))

    def test_rejects_non_positive_bound(self):
        for max_weight in (0, -1):
            with self.subTest(max_weight=max_weight):
                with self.assertRaises(ConfigurationError):
                    VerifySweep(self.settings).run(max_weight)

    def test_errors_become_failures(self):
        sweep = VerifySweep(self.settings)

        def broken(*_):
            raise IntegralityError("1/2 trees")

        with patch("sys.stderr"), patch.object(sweep, "items", return_value=[("first", broken, ()),
                                                                             ("second", lambda: [], ())]):
            verify_report = sweep.run(3)
        self.assertFalse(verify_report.ok)
        self.assertEqual(verify_report.failures, ["first: IntegralityError: 1/2 trees"])

    def test_report_documents(self):
        verify_report = VerifyReport(checked=3, failures=["a: b"])
        self.assertEqual(verify_report.to_dict(), {"checked": 3, "failed": 1, "failures": ["a: b"]})
        self.assertIn("failed: 1", verify_report.to_text())


if __name__ == '__main__':
    unittest.main()
