import json
import unittest

from src.wbptrees.factory.tree_factory import TreeFactory
from src.wbptrees.oracle.canonical import canonical_code
from src.wbptrees.oracle.export import enumeration_to_dict, enumeration_to_dot, enumeration_to_json, tree_to_dict, \
    tree_to_dot
from src.wbptrees.oracle.generator import enumerate_trees
from src.wbptrees.passport.notation import parse_passport


class TestExport(unittest.TestCase):
    def setUp(self):
        self.passport = parse_passport("2^2 4^3 | 8^2")
        self.trees = enumerate_trees(self.passport)

    def test_tree_document(self):
        document = tree_to_dict(self.trees[0])
        self.assertEqual(document["passport"], "4^3 2^2 | 8^2")
        self.assertEqual(len(document["vertices"]), 7)
        self.assertEqual(len(document["edges"]), 6)
        self.assertIn(document["aut_order"], (1, 2))

    def test_document_gives_the_tree_back(self):
        for tree in self.trees:
            rebuilt = TreeFactory.create_from_dictionary(tree_to_dict(tree))
            self.assertEqual(canonical_code(rebuilt), canonical_code(tree))

    def test_enumeration_document(self):
        document = enumeration_to_dict(self.passport, self.trees)
        self.assertEqual(document["count"], 3)
        self.assertEqual(document["by_symmetry"], {"1": 1, "2": 2})
        self.assertEqual(json.loads(enumeration_to_json(self.passport, self.trees))["count"], 3)

    def test_dot(self):
        source = enumeration_to_dot(self.passport, self.trees)
        for number in range(3):
            self.assertIn(f"subgraph cluster_{number}", source)
        self.assertIn("t0_v0", source)
        self.assertIn("--", tree_to_dot(self.trees[0]))


if __name__ == '__main__':
    unittest.main()
